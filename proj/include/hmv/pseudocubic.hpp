#pragma once

#include <array>
#include <vector>

#include "hmv/orders.hpp"
#include "hmv/pc.hpp"
#include "hmv/qlattice.hpp"

namespace hmv {

// All of F is coordinatized by the fixed basis e = ((1,0), (sqrt(D),0), (0,1));
// the pseudo-trace Gram in this basis is diag(2, 2D, 1).

// rank-3 lattice in F
class FLattice {
    Int rad_;
    QLattice lat_; // dim 3

public:
    FLattice(Int rad, QLattice lat);
    static FLattice from_elements(const Int& rad, const std::vector<PCElem>& gens);

    const Int& rad() const { return rad_; }
    const QLattice& lattice() const { return lat_; }
    PCElem basis_elem(long i) const;
    std::array<PCElem, 3> basis() const;

    bool contains(const PCElem& x) const;
    FLattice scaled(const PCElem& a) const; // a * I for invertible a

    bool operator==(const FLattice& o) const { return rad_ == o.rad_ && lat_ == o.lat_; }
    bool operator!=(const FLattice& o) const { return !(*this == o); }
};

// pseudo-cubic order: unital subring of F of rank 3
class PCOrder {
    FLattice lat_;

public:
    explicit PCOrder(FLattice lat); // verifies ring axioms and 1 in O
    const FLattice& lattice() const { return lat_; }
    bool operator==(const PCOrder& o) const { return lat_ == o.lat_; }
    bool operator!=(const PCOrder& o) const { return !(*this == o); }
};

// self-adjoint endomorphism of F: 3x3 matrix H with G*H symmetric
class HMap {
    Int rad_;
    QMat h_;

public:
    HMap(Int rad, QMat h); // validates self-adjointness
    static HMap zero(const Int& rad);
    const Int& rad() const { return rad_; }
    const QMat& matrix() const { return h_; }
    PCElem apply(const PCElem& x) const;
    bool operator==(const HMap& o) const { return rad_ == o.rad_ && h_ == o.h_; }
};

HMap baer_sum(const HMap& h1, const HMap& h2);

// element of F^2
struct FPair {
    PCElem first, second;
};

// rank-6 lattice in F^2 = Q^6 (first factor coordinates 0..2)
class FPairLattice {
    Int rad_;
    QLattice lat_; // dim 6, rank 6

public:
    FPairLattice(Int rad, QLattice lat);
    static FPairLattice from_elements(const Int& rad, const std::vector<FPair>& gens);
    const Int& rad() const { return rad_; }
    const QLattice& lattice() const { return lat_; }
    FPair basis_elem(long i) const;
};

std::array<Rat, 6> fpair_coords(const FPair& v);
FPair fpair_from_coords(const Int& rad, const std::array<Rat, 6>& c);

// symplectic pseudo-trace pairing <(x1,y1),(x2,y2)> = tr_p(x2 y1 - x1 y2)
Rat sympl_trp_pairing(const FPair& v, const FPair& w);

// pseudo-trace Gram diag(2, 2D, 1) in the basis e
QMat pseudo_trace_gram(const Int& rad);

// O_a = a + Z(1,1); degree = [O_D + Z : O_a] = N(a)
PCOrder pc_order_from_ideal(const QIdeal& a);
Int pc_order_degree(const PCOrder& O);

// dual lattice {x : tr_p(x I) in Z}
FLattice dual_lattice(const FLattice& I);

// multiplication-by-x matrix in the basis e
QMat mult_matrix(const PCElem& x);
// commutator [M_x, h]
QMat commutator_action(const PCElem& x, const HMap& h);

// coefficient ring O(I) = {x : x I in I}
PCOrder coefficient_ring(const FLattice& I);
// O_h(I) = {x in O(I) : [M_x, h](I^vee) in I}
PCOrder o_h(const FLattice& I, const HMap& h);

// module structure of the extension E_h: x.(lambda, mu) = (x lambda + [M_x,h] mu, x mu)
FPair eh_action(const PCElem& x, const FPair& v, const HMap& h);

// h -> h^a with h^a(y) = a h(a y)
HMap conjugate_by(const HMap& h, const PCElem& a);

// extension classes: equality of E_{h1}(I) and E_{h2}(I), decided through the
// projection onto the orthogonal complement of Hom_F(F,F) in Hom_Q^+(F,F)
bool extension_class_equal(const HMap& h1, const HMap& h2, const FLattice& I);

// lattice of self-adjoint maps sending I^vee into I, expressed in the fixed
// 6-dimensional basis of Hom_Q^+ (first three spanning Hom_F, last three its
// orthogonal complement)
QLattice hom_plus_integral_lattice(const FLattice& I);
std::array<QMat, 6> hom_plus_basis(const Int& rad);
// coordinates of a self-adjoint map in that basis
std::array<Rat, 6> hom_plus_coords(const HMap& h);

// I_L = L cap M for the F-line L = F * (v1, v2) in F^2; DegenerateLine when
// the quadratic components of (v1, v2) are both zero or the rational ones are
QLattice cusp_line_lattice(const PCElem& v1, const PCElem& v2, const FPairLattice& M);

// the standard symplectic module with its printed six generators
FPairLattice standard_symplectic_module(const QOrder& O, const QIdeal& a, const QuadElem& eta1,
                                        const QuadElem& eta2);
std::vector<FPair> standard_symplectic_generators(const QOrder& O, const QIdeal& a,
                                                  const QuadElem& eta1, const QuadElem& eta2);

} // namespace hmv
