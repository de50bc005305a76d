#pragma once

#include <string>
#include <vector>

#include "hmv/boundary.hpp"
#include "hmv/quad.hpp"
#include "hmv/zmat.hpp"

namespace hmv {

// Element alpha + beta * mu of the tower Q(sqrt(2n+1))(mu) with
// mu^2 = n + 1 + sqrt(2n+1); rank-2 module arithmetic over Q(sqrt(2n+1)).
struct MuElem {
    QuadElem alpha, beta;

    MuElem(QuadElem a, QuadElem b) : alpha(std::move(a)), beta(std::move(b)) {
        require_same_rad(alpha, beta);
    }
    static MuElem zero(const Int& m) {
        return {QuadElem::rational(m, 0), QuadElem::rational(m, 0)};
    }
    static MuElem mu(const Int& m) { return {QuadElem::rational(m, 0), QuadElem::rational(m, 1)}; }

    const Int& rad() const { return alpha.rad(); }
    // mu^2 as an element of the base field
    QuadElem mu_squared() const {
        Int n = exact_div(rad() - 1, 2);
        return QuadElem(rad(), Rat(n + 1), Rat(1));
    }
    bool operator==(const MuElem& o) const { return alpha == o.alpha && beta == o.beta; }
    bool operator!=(const MuElem& o) const { return !(*this == o); }
};

MuElem operator+(const MuElem& a, const MuElem& b);
MuElem operator-(const MuElem& a, const MuElem& b);
MuElem operator*(const MuElem& a, const MuElem& b);
MuElem operator*(const QuadElem& c, const MuElem& a);

struct PrymInstance {
    long n;
    Int m; // 2n+1
    Int D; // 4(2n+1)
    int sign; // +1 or -1 (iota branch)

    PrymInstance(long n_, int sign_);
};

// the 6x6 twist matrix of the T_n family
ZMat an_matrix(long n);

// det(x I - A_n) = (x^2 - n)(x^4 - 2(n+1) x^2 + n^2), coefficientwise
bool char_poly_check(long n);

// exact eigenvector identity A_n h = mu h in the mu-tower, plus the identity
// (1 + sqrt(2n+1))^2 = 2 mu^2
bool eigen_checks(long n);

// tr(A_h^k A_v^l) = 2 - k l mu^2, as an element of Q(sqrt(2n+1))
QuadElem dehn_trace(long n, const Int& k, const Int& l);
// |trace| > 2 at the positive real embedding, decided by certified intervals
bool is_hyperbolic(long n, const Int& k, const Int& l, unsigned precision_bits = 128);

struct PrymData {
    PrymInstance inst;
    std::array<QuadElem, 3> residues; // over Q(sqrt(2n+1))
    std::array<PCElem, 3> weights;    // in F = Q(sqrt(D)) + Q
};
PrymData prym_data(long n, int sign);

struct PrymCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct PrymReport {
    PrymInstance inst;
    std::vector<PrymCheck> checks;
    std::array<Int, 3> equation_exponents; // normalized kernel vector
    std::string equation;                  // the symbolic cross-ratio equation
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// full admissibility / dual-basis / exponent-lattice / cross-ratio pipeline
PrymReport prym_pipeline(long n, int sign);

} // namespace hmv
