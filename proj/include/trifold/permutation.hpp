#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "trifold/errors.hpp"

namespace trifold {

// A permutation of {0,1,2,3}, used as a gluing map between two tetrahedra:
// vertex i of the source maps to image(i) in the target, and the omitted
// vertex of the glued face maps to the omitted vertex of the partner face.
class Permutation4 {
public:
    constexpr Permutation4() : images_{0, 1, 2, 3} {}
    constexpr Permutation4(int a, int b, int c, int d)
        : images_{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                  static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)} {}

    static Permutation4 from_digits(const std::string& digits) {
        if (digits.size() != 4) throw parse_error("permutation needs 4 digits: '" + digits + "'");
        bool seen[4] = {false, false, false, false};
        std::array<std::uint8_t, 4> img{};
        for (int i = 0; i < 4; ++i) {
            char ch = digits[static_cast<std::size_t>(i)];
            if (ch < '0' || ch > '3') throw parse_error("permutation digit out of range: '" + digits + "'");
            int v = ch - '0';
            if (seen[v]) throw parse_error("permutation not a bijection: '" + digits + "'");
            seen[v] = true;
            img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
        }
        Permutation4 p;
        p.images_ = img;
        return p;
    }

    constexpr int operator[](int i) const { return images_[static_cast<std::size_t>(i)]; }

    Permutation4 inverse() const {
        Permutation4 r;
        for (int i = 0; i < 4; ++i) r.images_[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = static_cast<std::uint8_t>(i);
        return r;
    }

    // Composition: (*this ∘ other)(i) = (*this)(other(i)).
    Permutation4 of(const Permutation4& other) const {
        Permutation4 r;
        for (int i = 0; i < 4; ++i) r.images_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(images_[static_cast<std::size_t>(other[i])]);
        return r;
    }

    // +1 for even permutations, -1 for odd.
    int sign() const {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (images_[static_cast<std::size_t>(i)] > images_[static_cast<std::size_t>(j)]) ++inv;
        return (inv % 2 == 0) ? 1 : -1;
    }

    std::string digits() const {
        std::string s(4, '0');
        for (int i = 0; i < 4; ++i) s[static_cast<std::size_t>(i)] = static_cast<char>('0' + images_[static_cast<std::size_t>(i)]);
        return s;
    }

    bool operator==(const Permutation4& o) const { return images_ == o.images_; }
    bool operator!=(const Permutation4& o) const { return !(*this == o); }

private:
    std::array<std::uint8_t, 4> images_;
};

// Sign of the permutation sorting a 3-element sequence of distinct values.
inline int sign3(int a, int b, int c) {
    int inv = 0;
    if (a > b) ++inv;
    if (a > c) ++inv;
    if (b > c) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

}  // namespace trifold
