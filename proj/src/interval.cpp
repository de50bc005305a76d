#include "hmv/interval.hpp"

#include <algorithm>

namespace hmv {

RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return RatInterval(a.lo + b.lo, a.hi + b.hi);
}

RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return RatInterval(a.lo - b.hi, a.hi - b.lo);
}

RatInterval operator-(const RatInterval& a) { return RatInterval(-a.hi, -a.lo); }

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rat c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
    return RatInterval(std::min({c1, c2, c3, c4}), std::max({c1, c2, c3, c4}));
}

RatInterval iabs(const RatInterval& a) {
    if (a.lo >= 0) return a;
    if (a.hi <= 0) return -a;
    return RatInterval(Rat(0), std::max(Rat(-a.lo), a.hi));
}

RatInterval scale(const Rat& c, const RatInterval& a) {
    if (c >= 0) return RatInterval(c * a.lo, c * a.hi);
    return RatInterval(c * a.hi, c * a.lo);
}

RatInterval to_dyadic(const RatInterval& a, unsigned bits) {
    Int scale = int_pow(2, bits);
    Rat lo = a.lo * Rat(scale), hi = a.hi * Rat(scale);
    return RatInterval(Rat(fdiv(lo.get_num(), lo.get_den()), scale),
                       Rat(-fdiv(-hi.get_num(), hi.get_den()), scale));
}

RatInterval sqrt_interval(const Int& m, unsigned bits) {
    if (m <= 0) throw negative_discriminant("sqrt of nonpositive radicand");
    Int scale = int_pow(2, bits);
    Int s = isqrt(m * scale * scale);
    // s <= sqrt(m)*2^bits < s+1
    return RatInterval(Rat(s, scale), Rat(s + 1, scale));
}

namespace {

// arctan(1/x) for integer x >= 2 from the alternating Leibniz series;
// consecutive partial sums bracket the value.
RatInterval atan_inv(const Int& x, unsigned bits) {
    Rat invx2 = Rat(1, x * x);
    Rat bound = pow2(-static_cast<long>(bits));
    Rat p(1, x); // x^-(2j+1)
    Rat sum(0);
    for (long j = 0;; ++j) {
        Rat t = p / Rat(2 * j + 1);
        if (j % 2 == 0)
            sum += t;
        else
            sum -= t;
        p *= invx2;
        Rat next = p / Rat(2 * j + 3);
        if (next <= bound) {
            if (j % 2 == 0) return RatInterval(sum - next, sum);
            return RatInterval(sum, sum + next);
        }
    }
}

RatInterval pad(const RatInterval& s, const Rat& r) {
    return RatInterval(s.lo - r, s.hi + r);
}

Rat magnitude(const RatInterval& a) { return std::max(Rat(abs(a.lo)), Rat(abs(a.hi))); }

// cos and sin on [0, pi/4] via Taylor series; with |x| <= 1 the terms
// decrease, so the remainder is bounded by the first omitted term.
RatInterval cos_small(const RatInterval& x, unsigned bits) {
    Rat bound = pow2(-static_cast<long>(bits + 2));
    RatInterval x2 = x * x;
    RatInterval sum = RatInterval::point(Rat(1));
    RatInterval term = RatInterval::point(Rat(1));
    for (long k = 1;; ++k) {
        term = scale(Rat(1, Int(2 * k - 1) * Int(2 * k)), term * x2);
        if (k % 2 == 1)
            sum = sum - term;
        else
            sum = sum + term;
        Rat r = magnitude(term);
        if (r < bound) return pad(sum, r);
    }
}

RatInterval sin_small(const RatInterval& x, unsigned bits) {
    Rat bound = pow2(-static_cast<long>(bits + 2));
    RatInterval x2 = x * x;
    RatInterval sum = x;
    RatInterval term = x;
    for (long k = 1;; ++k) {
        term = scale(Rat(1, Int(2 * k) * Int(2 * k + 1)), term * x2);
        if (k % 2 == 1)
            sum = sum - term;
        else
            sum = sum + term;
        Rat r = magnitude(term);
        if (r < bound) return pad(sum, r);
    }
}

} // namespace

RatInterval pi_interval(unsigned bits) {
    RatInterval a = atan_inv(Int(5), bits + 6);
    RatInterval b = atan_inv(Int(239), bits + 6);
    return scale(Rat(16), a) - scale(Rat(4), b);
}

// octant reduction for q in [0,1): cos/sin(2 pi q)
RatInterval cos2pi_interval(const Rat& q, unsigned bits) {
    Rat t = rat_mod1(q);
    if (t > Rat(1, 2)) return cos2pi_interval(1 - t, bits);     // cos even
    if (t > Rat(1, 4)) return -cos2pi_interval(Rat(1, 2) - t, bits);
    if (t > Rat(1, 8)) return sin2pi_interval(Rat(1, 4) - t, bits);
    RatInterval pi = pi_interval(bits + 8);
    RatInterval x = scale(2 * t, pi);
    return cos_small(x, bits);
}

RatInterval sin2pi_interval(const Rat& q, unsigned bits) {
    Rat t = rat_mod1(q);
    if (t > Rat(1, 2)) return -sin2pi_interval(1 - t, bits);    // sin odd around 1/2..1
    if (t > Rat(1, 4)) return sin2pi_interval(Rat(1, 2) - t, bits);
    if (t > Rat(1, 8)) return cos2pi_interval(Rat(1, 4) - t, bits);
    RatInterval pi = pi_interval(bits + 8);
    RatInterval x = scale(2 * t, pi);
    return sin_small(x, bits);
}

} // namespace hmv
