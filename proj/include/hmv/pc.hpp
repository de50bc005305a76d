#pragma once

#include <array>

#include "hmv/interval.hpp"
#include "hmv/quad.hpp"

namespace hmv {

// Element (x, q) of the pseudo-cubic field F = Q(sqrt(D)) + Q with
// componentwise ring structure.  The unit is (1, 1); F has zero divisors.
class PCElem {
    QuadElem x_;
    Rat q_;

public:
    PCElem(QuadElem x, Rat q) : x_(std::move(x)), q_(std::move(q)) { q_.canonicalize(); }
    static PCElem one(const Int& rad) { return PCElem(QuadElem::rational(rad, 1), Rat(1)); }
    static PCElem zero(const Int& rad) { return PCElem(QuadElem::rational(rad, 0), Rat(0)); }

    const QuadElem& x() const { return x_; }
    const Rat& q() const { return q_; }
    const Int& rad() const { return x_.rad(); }

    bool is_zero() const { return x_.is_zero() && q_ == 0; }
    // sigma + Id: conjugates the quadratic part only
    PCElem sigma() const { return PCElem(x_.conj(), q_); }
    PCElem operator-() const { return PCElem(-x_, -q_); }

    bool operator==(const PCElem& o) const { return x_ == o.x_ && q_ == o.q_; }
    bool operator!=(const PCElem& o) const { return !(*this == o); }

    std::string str() const { return "(" + x_.str() + " ; " + rat_str(q_) + ")"; }
};

PCElem operator+(const PCElem& a, const PCElem& b);
PCElem operator-(const PCElem& a, const PCElem& b);
PCElem operator*(const PCElem& a, const PCElem& b);
PCElem operator*(const Rat& c, const PCElem& a);

// pseudo-trace tr_p(x, q) = tr(x) + q
Rat trp(const PCElem& a);
// the pseudo-trace pairing tr_p(a*b)
Rat trp_pairing(const PCElem& a, const PCElem& b);

// coordinates with respect to the basis e = ((1,0), (sqrt(D),0), (0,1))
std::array<Rat, 3> pc_coords(const PCElem& a);
PCElem pc_from_coords(const Int& rad, const std::array<Rat, 3>& c);

enum class RealEmbedding { iota1, iota2, iota3 };

// Certified evaluation of the real pseudo-embeddings: iota1/iota2 send
// (x, q) to the two real values of x (sqrt(D) -> +-sqrt(D)), iota3 to q.
// Result width <= 2^-precision_bits * max(1, |value|).
RatInterval embed_real(const PCElem& a, RealEmbedding which, unsigned precision_bits);
RatInterval embed_real(const QuadElem& a, bool positive_root, unsigned precision_bits);

} // namespace hmv
