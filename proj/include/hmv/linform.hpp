#pragma once

#include <array>

#include "hmv/quad.hpp"

namespace hmv {

// Exact linear form c0 + c1*z1 + c2*z2 + c3*z3 with coefficients in
// Q(sqrt(D)); the carrier for period matrix entries.
struct ZLinForm {
    std::array<QuadElem, 4> c;

    explicit ZLinForm(const Int& rad)
        : c{QuadElem::rational(rad, 0), QuadElem::rational(rad, 0), QuadElem::rational(rad, 0),
            QuadElem::rational(rad, 0)} {}

    static ZLinForm constant(const QuadElem& k) {
        ZLinForm f(k.rad());
        f.c[0] = k;
        return f;
    }
    // coef * z_var with var in {1,2,3}
    static ZLinForm variable(const QuadElem& coef, int var) {
        ZLinForm f(coef.rad());
        f.c[static_cast<size_t>(var)] = coef;
        return f;
    }

    const Int& rad() const { return c[0].rad(); }
    bool is_zero() const {
        return c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero();
    }
    // true when only the constant and z_var coefficients may be nonzero
    bool pure_in(int var) const {
        for (int k = 1; k <= 3; ++k)
            if (k != var && !c[static_cast<size_t>(k)].is_zero()) return false;
        return true;
    }

    bool operator==(const ZLinForm& o) const { return c == o.c; }
    bool operator!=(const ZLinForm& o) const { return !(*this == o); }
};

inline ZLinForm operator+(const ZLinForm& a, const ZLinForm& b) {
    ZLinForm r(a.rad());
    for (size_t k = 0; k < 4; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
}

inline ZLinForm operator-(const ZLinForm& a, const ZLinForm& b) {
    ZLinForm r(a.rad());
    for (size_t k = 0; k < 4; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
}

inline ZLinForm operator*(const QuadElem& s, const ZLinForm& a) {
    ZLinForm r(a.rad());
    for (size_t k = 0; k < 4; ++k) r.c[k] = s * a.c[k];
    return r;
}

inline ZLinForm operator*(const Rat& s, const ZLinForm& a) {
    ZLinForm r(a.rad());
    for (size_t k = 0; k < 4; ++k) r.c[k] = s * a.c[k];
    return r;
}

} // namespace hmv
