#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hmv/qlattice.hpp"
#include "hmv/quad.hpp"

namespace hmv {

// The quadratic order O_D = Z[gamma_D], gamma_D = (D + sqrt(D))/2.
struct QOrder {
    Disc D;
    Int f; // conductor: largest f > 0 with D/f^2 a discriminant
    QuadElem gamma;

    explicit QOrder(const Disc& d);
    explicit QOrder(const Int& d) : QOrder(Disc(d)) {}
};

// Integral ideal of O_D in normal form <n, a + b*gamma_D>, with b | a,
// b | n, n | N(a + b*gamma)/b, 0 <= a < n, n,b > 0.  Norm is n*b.
class QIdeal {
    Int D_, n_, a_, b_;

public:
    QIdeal(const Disc& D, Int n, Int a, Int b);

    const Int& D() const { return D_; }
    const Int& n() const { return n_; }
    const Int& a() const { return a_; }
    const Int& b() const { return b_; }

    QuadElem second_gen() const; // a + b*gamma_D
    Int norm() const { return n_ * b_; }
    bool is_primitive() const { return b_ == 1; }

    // Z-basis as elements of K
    std::pair<QuadElem, QuadElem> gens() const;

    bool operator==(const QIdeal& o) const {
        return D_ == o.D_ && n_ == o.n_ && a_ == o.a_ && b_ == o.b_;
    }
    bool operator!=(const QIdeal& o) const { return !(*this == o); }
    std::string str() const;
};

// Rank-2 lattice in K = Q(sqrt(D)) in (1, gamma_D)-coordinates; the carrier
// for fractional ideals such as inverses and inverse differents.
class FracIdeal {
    Int D_;
    QLattice lat_; // dim 2, coordinates w.r.t. (1, gamma_D)

public:
    FracIdeal(const Disc& D, QLattice lat);
    static FracIdeal from_elements(const Disc& D, const std::vector<QuadElem>& gens);
    static FracIdeal from_ideal(const QIdeal& I);
    static FracIdeal unit_ideal(const Disc& D);

    const Int& D() const { return D_; }
    const QLattice& lattice() const { return lat_; }

    bool contains(const QuadElem& x) const;
    FracIdeal scaled(const QuadElem& c) const;      // c * I
    FracIdeal conj() const;
    std::pair<QuadElem, QuadElem> gens() const;     // Z-basis as elements of K

    bool operator==(const FracIdeal& o) const { return D_ == o.D_ && lat_ == o.lat_; }
    bool operator!=(const FracIdeal& o) const { return !(*this == o); }
};

// coordinates of x in the basis (1, gamma_D)
std::pair<Rat, Rat> order_coords(const QuadElem& x, const Disc& D);
QuadElem from_order_coords(const Disc& D, const Rat& c1, const Rat& cg);

// normal form of the O_D-module generated by gens; throws zero_ideal /
// not_an_ideal when the result is zero or not an integral ideal
QIdeal ideal_from_generators(const std::vector<QuadElem>& gens, const QOrder& O);

Int ideal_norm(const QIdeal& I);
bool is_primitive(const QIdeal& I);
bool is_invertible(const QIdeal& I);
QIdeal ideal_conj(const QIdeal& I);
QIdeal ideal_mul(const QIdeal& I, const QIdeal& J);
FracIdeal ideal_inverse(const QIdeal& I); // throws not_invertible

// a^vee = (1/sqrt(D)) (1/N(a)) a^sigma
FracIdeal inverse_different(const QIdeal& I);
FracIdeal inverse_different(const QOrder& O);

enum class SplitTag { Inert, Split, Ramified };

struct SplitType {
    SplitTag tag;
    std::optional<QIdeal> prime_ideal;       // smallest residue choice
    std::optional<QIdeal> conj_prime_ideal;  // the conjugate choice (Split only)
};

// splitting of p in O_D; requires p prime not dividing the conductor
SplitType prime_splitting(const Int& p, const QOrder& O);

// prime factor condition for d (no inert prime divides d; ramified primes
// divide d exactly once); requires gcd(d, f) = 1
bool satisfies_pfc(const Int& d, const QOrder& O);

// the 2^s primitive ideals of norm d (empty when the pfc fails)
std::vector<QIdeal> primitive_ideals_of_norm(const Int& d, const QOrder& O);

// Basis (eta1, eta2) = (1, a0 + gamma) of O_D such that (eta2^sigma, d*eta1^sigma)
// is a Z-basis of I and antiinv(eta1 * eta2^sigma) = -1/2.
std::pair<QuadElem, QuadElem> smart_basis(const QIdeal& I);
bool verify_smart_basis(const QuadElem& eta1, const QuadElem& eta2, const QIdeal& I);

// trace pairing <(x,y),(xt,yt)> = tr(xt*y - x*yt) on K^2
Rat trace_pairing(const std::pair<QuadElem, QuadElem>& v, const std::pair<QuadElem, QuadElem>& w);

enum class PairingSide { IdealPlusDual, OrderPlusScaledIdeal };

// symplectic type (d1, d2) of the trace pairing on a + O_D^vee or on
// O_D + (1/sqrt(D)) a, computed from the Smith normal form of the Gram matrix
std::pair<Int, Int> pairing_type(const QIdeal& I, const QOrder& O, PairingSide side);

} // namespace hmv
