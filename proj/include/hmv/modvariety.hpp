#pragma once

#include <array>
#include <random>

#include "hmv/linform.hpp"
#include "hmv/orders.hpp"

namespace hmv {

// 2x2 matrix over K = Q(sqrt(D))
struct Mat2K {
    QuadElem a, b, c, d; // [[a, b], [c, d]]

    Mat2K(QuadElem a_, QuadElem b_, QuadElem c_, QuadElem d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
    static Mat2K identity(const Int& rad);
    static Mat2K zero(const Int& rad);

    const Int& rad() const { return a.rad(); }
    QuadElem det() const { return a * d - b * c; }
    Mat2K sigma() const { return {a.conj(), b.conj(), c.conj(), d.conj()}; }
    Mat2K inverse_det1() const { return {d, -b, -c, a}; } // valid when det = 1

    bool operator==(const Mat2K& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
};

Mat2K operator*(const Mat2K& x, const Mat2K& y);
Mat2K operator-(const Mat2K& x, const Mat2K& y);

// element (A, B) of SL2(O_D + (1/sqrt(D)) a) x SL2(Z)
struct GammaElem {
    Mat2K A;
    ZMat B; // 2x2 integer, det 1

    GammaElem(Mat2K a, ZMat b);
    GammaElem inverse() const;
};

GammaElem operator*(const GammaElem& x, const GammaElem& y);

// entrywise membership in SL2(O_D + (1/sqrt(D)) a)
bool in_sl2_module(const Mat2K& A, const QIdeal& a);

// S = [[0, (sqrt(D)/d) eta2/eta1^sigma], [1, 0]]
Mat2K S_matrix(const QOrder& O, const QIdeal& a, const QuadElem& eta1, const QuadElem& eta2);

// entrywise membership in the matrix module M_{D,d}(eta1, eta2)
bool in_M_Dd(const Mat2K& X, const QIdeal& a, const QuadElem& eta1, const QuadElem& eta2);

// the three nested membership predicates
bool in_gamma(const GammaElem& g, const QIdeal& a, const QuadElem& eta1, const QuadElem& eta2);
bool in_gamma_lb(const GammaElem& g, const QIdeal& a);
bool in_gamma_ub(const GammaElem& g, const QIdeal& a);
// quadratic factor of the lower bound: SL(1+a, sqrt(D) O_D; (1/sqrt(D)) a^2, 1+a)
bool in_gamma_lb_tilde(const Mat2K& A, const QIdeal& a);

// reduction SL2(O_D + (1/sqrt(D)) a) -> SL2(Z/dZ) with kernel the lower
// bound factor; requires a primitive with norm coprime to the conductor
ZMat phi_reduction(const Mat2K& A, const QIdeal& a);

// |SL2(Z/dZ)| = d^3 prod_{p | d} (1 - p^-2)
Int sl2_zd_order(const Int& d);

using LinFormRow = std::vector<ZLinForm>;
using LinFormMat = std::vector<LinFormRow>;

// 3x6 period matrix of the rank-6 family; row i involves z_i only
LinFormMat period_matrix3(const QOrder& O, const QIdeal& a, const QuadElem& eta1,
                          const QuadElem& eta2);
// 2x4 period matrix of the surface family (type (1, d))
LinFormMat period_matrix2(const QOrder& O, const QIdeal& a, const QuadElem& eta1,
                          const QuadElem& eta2);

// the unique 6x6 matrix with Pi_z M(A,B) = D(A,B,z)^-1 Pi_{(A,B).z};
// rational in general, integral exactly on Gamma_{D,d}(eta1, eta2)
QMat M_of(const GammaElem& g, const QIdeal& a, const QuadElem& eta1, const QuadElem& eta2);

// exact symbolic check of the defining identity of M(A,B); the variant with
// an explicit candidate matrix exists so soundness can be probed
bool verify_period_identity(const GammaElem& g, const QIdeal& a, const QuadElem& eta1,
                            const QuadElem& eta2);
bool period_identity_holds(const GammaElem& g, const QMat& M, const QIdeal& a,
                           const QuadElem& eta1, const QuadElem& eta2);

// 2-dimensional analogue: rational representation R of the module
// automorphism (x,y) -> (x,y) (A*)^t and the identity
// Pi2_z R^-1 = D(A,z)^-1 Pi2_{(A z1, A^sig z2)}
QMat rational_rep2(const Mat2K& A, const QIdeal& a, const QuadElem& eta1, const QuadElem& eta2);
bool verify_period_identity2(const Mat2K& A, const QIdeal& a, const QuadElem& eta1,
                             const QuadElem& eta2);

// symplectic module isomorphism test between O+(1/sqrt(D))a and O+(1/sqrt(D))b
bool is_symplectic_module_iso(const Mat2K& M, const QIdeal& a, const QIdeal& b);

// number of irreducible components of the type-d moduli space: 2^s or 0
Int count_components(const QOrder& O, const Int& d);

// random words in elementary generators (reproducible via the engine)
Mat2K random_gamma_lb_tilde(std::mt19937& rng, const QOrder& O, const QIdeal& a, int len);
ZMat random_principal_congruence(std::mt19937& rng, const Int& d, int len);
GammaElem random_gamma_lb(std::mt19937& rng, const QOrder& O, const QIdeal& a, int len);
Mat2K random_sl2_module(std::mt19937& rng, const QOrder& O, const QIdeal& a, int len);

} // namespace hmv
