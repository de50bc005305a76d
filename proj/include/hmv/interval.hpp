#pragma once

#include "hmv/rat.hpp"

namespace hmv {

// Closed interval with exact rational endpoints.  All operations return
// intervals certified to contain the exact result.
struct RatInterval {
    Rat lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw error("interval: lo > hi");
    }
    static RatInterval point(const Rat& q) { return RatInterval(q, q); }

    Rat width() const { return hi - lo; }
    bool contains(const Rat& q) const { return lo <= q && q <= hi; }
    bool strictly_above(const Rat& q) const { return lo > q; }
    bool strictly_below(const Rat& q) const { return hi < q; }
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const RatInterval& b);
RatInterval operator*(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a);
RatInterval iabs(const RatInterval& a);
RatInterval scale(const Rat& c, const RatInterval& a);

// sqrt(m) for m > 0, width <= 2^-bits
RatInterval sqrt_interval(const Int& m, unsigned bits);

// pi via Machin's formula, width <= 2^-bits
RatInterval pi_interval(unsigned bits);

// cos/sin(2*pi*q), width <= 2^-bits
RatInterval cos2pi_interval(const Rat& q, unsigned bits);
RatInterval sin2pi_interval(const Rat& q, unsigned bits);

// outward rounding to dyadic endpoints lo = a/2^bits, hi = b/2^bits
RatInterval to_dyadic(const RatInterval& a, unsigned bits);

inline Rat pow2(long e) {
    if (e >= 0) return Rat(int_pow(2, static_cast<unsigned long>(e)));
    return Rat(1, int_pow(2, static_cast<unsigned long>(-e)));
}

} // namespace hmv
