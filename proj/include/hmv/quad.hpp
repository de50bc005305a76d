#pragma once

#include <string>

#include "hmv/rat.hpp"

namespace hmv {

// Discriminant of a quadratic order: D = 0,1 mod 4, nonsquare, nonzero.
// Negative values are allowed (imaginary quadratic orders).
struct Disc {
    Int D;

    explicit Disc(Int d) : D(std::move(d)) {
        Int r = mod_floor(D, 4);
        if (D == 0 || (r != 0 && r != 1) || is_square(D))
            throw invalid_discriminant("not a valid nonsquare discriminant: " + D.get_str());
    }
    bool operator==(const Disc& o) const { return D == o.D; }
};

// Element u + v*sqrt(m) of Q(sqrt(m)).  The radicand m may be any nonzero
// nonsquare integer; quadratic orders constrain it to a discriminant, the
// Prym tower uses plain radicands like 2n+1.
class QuadElem {
    Int m_;
    Rat u_, v_;

public:
    QuadElem(Int m, Rat u, Rat v) : m_(std::move(m)), u_(std::move(u)), v_(std::move(v)) {
        if (m_ == 0 || is_square(m_)) throw invalid_discriminant("bad radicand: " + m_.get_str());
        u_.canonicalize();
        v_.canonicalize();
    }
    static QuadElem rational(const Int& m, const Rat& u) { return QuadElem(m, u, Rat(0)); }
    static QuadElem sqrt_rad(const Int& m) { return QuadElem(m, Rat(0), Rat(1)); }
    // gamma_D = (D + sqrt(D)) / 2
    static QuadElem gamma(const Disc& d) { return QuadElem(d.D, Rat(d.D, 2), Rat(1, 2)); }

    const Int& rad() const { return m_; }
    const Rat& u() const { return u_; }
    const Rat& v() const { return v_; }

    bool is_zero() const { return u_ == 0 && v_ == 0; }
    bool is_rational() const { return v_ == 0; }

    QuadElem conj() const { return QuadElem(m_, u_, -v_); }
    Rat norm() const { return u_ * u_ - v_ * v_ * Rat(m_); }
    Rat trace() const { return 2 * u_; }
    // the sqrt(m)-coefficient (normalized antiinvariant part)
    Rat antiinv() const { return v_; }

    QuadElem operator-() const { return QuadElem(m_, -u_, -v_); }
    bool operator==(const QuadElem& o) const { return m_ == o.m_ && u_ == o.u_ && v_ == o.v_; }
    bool operator!=(const QuadElem& o) const { return !(*this == o); }

    std::string str() const;
};

void require_same_rad(const QuadElem& a, const QuadElem& b);

QuadElem operator+(const QuadElem& a, const QuadElem& b);
QuadElem operator-(const QuadElem& a, const QuadElem& b);
QuadElem operator*(const QuadElem& a, const QuadElem& b);
QuadElem operator/(const QuadElem& a, const QuadElem& b); // throws division_by_zero
QuadElem operator*(const Rat& c, const QuadElem& a);
QuadElem inv(const QuadElem& a);

} // namespace hmv
