#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hmv/pc.hpp"
#include "hmv/zmat.hpp"

namespace hmv {

struct QVec3 {
    std::array<Rat, 3> v;
    bool operator==(const QVec3& o) const { return v == o.v; }
    bool is_zero() const { return v[0] == 0 && v[1] == 0 && v[2] == 0; }
};

Rat dot(const QVec3& a, const QVec3& b);

// Q(x, q) = (N(sqrt(D) x), tr(x) q, tr(sqrt(D) x) q); requires D > 0
QVec3 q_map(const PCElem& w);

enum class StratumKind { Trinodal, NiceNonTrinodal };

// Weighted boundary stratum datum.  The three base weights determine the
// weight set {+-r_1, +-r_2, +-r_3}; for the nice non-trinodal type the two
// components carry (+-r_1, +-r_3) and (+-r_2, +-r_3).
struct Weighting {
    StratumKind kind;
    std::array<PCElem, 3> r;

    Weighting(StratumKind k, std::array<PCElem, 3> weights);
    const Int& rad() const { return r[0].rad(); }
};

struct AdmissibilityCert {
    bool admissible;
    // admissible: strictly positive coefficients with sum_i c_i Q(w_i) = 0
    std::vector<Rat> interior_combination;
    // inadmissible: v with <v, Q(w_i)> >= 0 for all i, > 0 for some i
    std::optional<QVec3> separating_functional;
};

// Cone test over the Q-images of the given weights (exact double
// description): admissible iff the images are not contained in a closed
// half-space of their span, i.e. 0 is interior to their convex hull.
AdmissibilityCert admissibility_certificate(const std::vector<QVec3>& images);
bool is_admissible(const Weighting& w);
AdmissibilityCert admissibility_certificate(const Weighting& w);

// dual basis of (r_1, r_2, r_3) with respect to the pseudo-trace pairing
std::array<PCElem, 3> dual_basis(const std::array<PCElem, 3>& r);

// primitive Z-basis of the solutions of a1 s2 s3 + a2 s1 s3 + a3 s1 s2 = 0
std::vector<std::array<Int, 3>> exponent_lattice(const std::array<PCElem, 3>& s);

// cross-ratio equation prod p^a = exp(-2 pi i phase), phase in [0, 1)
struct CrossRatioEq {
    std::array<Int, 3> exponents;
    Rat phase;
    StratumKind stratum;

    bool operator==(const CrossRatioEq& o) const {
        return exponents == o.exponents && phase == o.phase && stratum == o.stratum;
    }
    std::string str() const;
};

// b is the symmetric matrix of h-coefficients in the r (x) r basis
std::vector<CrossRatioEq> cross_ratio_equations(const Weighting& w, const QMat& b);
std::vector<CrossRatioEq> nontrinodal_equations(const Weighting& w, const QMat& b);

// Gaussian rational x + y i
struct GaussRat {
    Rat re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    bool is_zero() const { return re == 0 && im == 0; }
    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    std::string str() const;
};

GaussRat operator+(const GaussRat& a, const GaussRat& b);
GaussRat operator-(const GaussRat& a, const GaussRat& b);
GaussRat operator*(const GaussRat& a, const GaussRat& b);
GaussRat operator/(const GaussRat& a, const GaussRat& b);
GaussRat gpow(const GaussRat& a, const Int& e);

// point of P^1 over the Gaussian rationals
struct ProjPoint {
    std::optional<GaussRat> value; // nullopt = infinity

    static ProjPoint infinity() { return ProjPoint{std::nullopt}; }
    static ProjPoint finite(GaussRat v) { return ProjPoint{std::move(v)}; }
    bool is_infinity() const { return !value.has_value(); }
    bool operator==(const ProjPoint& o) const { return value == o.value; }
    std::string str() const;
};

// (z1, z2; z3, z4) = (z1-z3)(z2-z4) / ((z1-z4)(z2-z3)) with the usual limits
ProjPoint cross_ratio(const ProjPoint& z1, const ProjPoint& z2, const ProjPoint& z3,
                      const ProjPoint& z4);

// p = (p1, p2, p3, q1, q2, q3); psi(s_j (x) s_k) value p_jk = (p_j, q_j; q_k, p_k)
ProjPoint psi_eval(const std::array<ProjPoint, 6>& p, int j, int k);

enum class CheckMode { Exact, Numeric };

// evaluates each equation on the cross-ratio values p_jk; exact mode needs
// every phase to be a 4th root of unity, numeric mode uses certified
// intervals at the given precision
bool satisfies_sh(const std::array<ProjPoint, 6>& p, const std::vector<CrossRatioEq>& eqs,
                  CheckMode mode, unsigned precision_bits = 128);
// nice non-trinodal points (p1, q1, p3+, q3-) and (p2, q2, q3+, p3-)
bool satisfies_sh_nontrinodal(const std::array<ProjPoint, 8>& p,
                              const std::vector<CrossRatioEq>& eqs, CheckMode mode,
                              unsigned precision_bits = 128);

// certified |LHS - RHS|^2 per equation (numeric-mode diagnostics)
std::vector<RatInterval> sh_distances(const std::array<ProjPoint, 6>& p,
                                      const std::vector<CrossRatioEq>& eqs,
                                      unsigned precision_bits);

// simple tensor combination sum_t c_t (x_t (x) y_t) paired with w (x) w
struct TensorTerm {
    PCElem x, y;
    Rat coeff;
};
Rat tensor_pairing(const std::vector<TensorTerm>& a, const PCElem& w);

// basis tensors of Hom_F(F,F) = Lambda_1 and its orthogonal complement in
// Sym_Q(F), as simple-tensor combinations (for the pairing bridge)
std::vector<std::vector<TensorTerm>> lambda1_tensor_basis(const Int& rad);
std::vector<std::vector<TensorTerm>> lambda1_perp_tensor_basis(const Int& rad);

} // namespace hmv
