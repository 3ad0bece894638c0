#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace trifold {

// Element of the real quadratic field Q(sqrt(6)), stored as a + b*sqrt(6)
// with exact rational coefficients. The retriangulation size bounds and the
// growth recurrence live entirely in this field.
struct QuadSqrt6 {
    mpq_class a;  // rational part
    mpq_class b;  // coefficient of sqrt(6)

    QuadSqrt6() : a(0), b(0) {}
    QuadSqrt6(mpq_class rational) : a(std::move(rational)), b(0) {}
    QuadSqrt6(mpq_class ra, mpq_class rb) : a(std::move(ra)), b(std::move(rb)) {}

    static QuadSqrt6 sqrt6() { return QuadSqrt6(0, 1); }

    QuadSqrt6 operator+(const QuadSqrt6& o) const { return {a + o.a, b + o.b}; }
    QuadSqrt6 operator-(const QuadSqrt6& o) const { return {a - o.a, b - o.b}; }
    QuadSqrt6 operator*(const QuadSqrt6& o) const {
        return {a * o.a + 6 * b * o.b, a * o.b + b * o.a};
    }

    bool is_zero() const { return a == 0 && b == 0; }

    // Sign of a + b*sqrt(6), decided exactly by squaring.
    int sign() const {
        int sa = sgn(a), sb = sgn(b);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // Opposite signs: compare a^2 with 6 b^2; the larger magnitude wins.
        mpq_class diff = a * a - 6 * b * b;
        int sd = sgn(diff);
        return sd == 0 ? 0 : (sd == sa ? sa : sb);
    }

    bool operator<(const QuadSqrt6& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const QuadSqrt6& o) const { return (*this - o).sign() <= 0; }
    bool operator==(const QuadSqrt6& o) const { return a == o.a && b == o.b; }

    double to_double() const { return a.get_d() + b.get_d() * 2.4494897427831780982; }
};

// Closed rational interval [lo, hi]; the basic object of the square-root
// bound checks (sum of sqrt of valences, iterated radicals).
struct RatInterval {
    mpq_class lo;
    mpq_class hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(mpq_class v) : lo(v), hi(std::move(v)) {}
    RatInterval(mpq_class l, mpq_class h) : lo(std::move(l)), hi(std::move(h)) {}

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    mpq_class width() const { return hi - lo; }
    double mid_double() const { return (lo.get_d() + hi.get_d()) / 2.0; }

    // Both certainly_* return false when the interval straddles the bound.
    bool certainly_le(const mpq_class& v) const { return hi <= v; }
    bool certainly_lt(const RatInterval& o) const { return hi < o.lo; }
    bool certainly_le(const RatInterval& o) const { return hi <= o.lo; }
};

// Enclosure of sqrt(x) for x >= 0, refined by bisection until the width drops
// below `tol`. Exact when x is the square of a rational with small numerator
// and denominator.
RatInterval sqrt_interval(const mpq_class& x, const mpq_class& tol);

// Enclosure of x^(1/2^n).
RatInterval iterated_sqrt_interval(const mpq_class& x, unsigned n, const mpq_class& tol);

// Parse a decimal string ("6.32", "1/3", "256") into an exact rational.
mpq_class parse_rational(const std::string& text);

}  // namespace trifold
