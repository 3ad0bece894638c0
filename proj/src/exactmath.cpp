#include "trifold/exactmath.hpp"

#include <stdexcept>

namespace trifold {

RatInterval sqrt_interval(const mpq_class& x, const mpq_class& tol) {
    if (x < 0) throw std::domain_error("sqrt_interval: negative argument");
    if (x == 0) return {mpq_class(0), mpq_class(0)};

    // Integer-sqrt seed on numerator/denominator gives a first enclosure.
    mpz_class num = x.get_num(), den = x.get_den();
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    mpq_class lo(rn, rd + 1), hi(rn + 1, rd);
    lo.canonicalize();
    hi.canonicalize();
    if (lo * lo > x) lo = 0;
    if (hi * hi < x) hi = x + 1;  // crude but safe for x >= ... widened below
    if (hi < 1 && x >= 1) hi = x;
    // Exactness shortcut: rational squares round-trip.
    mpq_class cand(rn, rd);
    cand.canonicalize();
    if (cand * cand == x) return {cand, cand};

    while (hi - lo > tol) {
        mpq_class mid = (lo + hi) / 2;
        if (mid * mid <= x)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

RatInterval iterated_sqrt_interval(const mpq_class& x, unsigned n, const mpq_class& tol) {
    RatInterval cur(x);
    // Shrink tolerance for inner iterations so the final width stays below tol.
    mpq_class inner = tol / 4;
    for (unsigned i = 0; i < n; ++i) {
        RatInterval lo_i = sqrt_interval(cur.lo, inner);
        RatInterval hi_i = sqrt_interval(cur.hi, inner);
        cur = RatInterval(lo_i.lo, hi_i.hi);
    }
    return cur;
}

mpq_class parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        mpq_class q(text);
        q.canonicalize();
        return q;
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        mpq_class q(text);
        q.canonicalize();
        return q;
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    bool neg = false;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
        neg = digits[0] == '-';
        digits = digits.substr(1);
    }
    if (digits.empty()) throw std::invalid_argument("bad rational literal: " + text);
    mpz_class num(digits);
    mpz_class den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    mpq_class q(neg ? mpz_class(-num) : num, den);
    q.canonicalize();
    return q;
}

}  // namespace trifold
