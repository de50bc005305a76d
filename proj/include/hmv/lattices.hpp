#pragma once

#include <vector>

#include "hmv/qlattice.hpp"

namespace hmv {

// Alternating integer Gram matrix (G^T = -G).
struct AltGram {
    ZMat G;

    explicit AltGram(ZMat g) : G(std::move(g)) {
        if (G.rows != G.cols) throw error("AltGram: not square");
        for (long i = 0; i < G.rows; ++i)
            for (long j = 0; j < G.cols; ++j)
                if (G(i, j) != -G(j, i)) throw error("AltGram: not alternating");
    }
};

// type (d1, ..., dg) of a nondegenerate alternating form, d_i | d_(i+1)
std::vector<Int> symplectic_type(const AltGram& g);

// unimodular U with U G U^T = [[0, Delta], [-Delta, 0]], Delta = diag(type)
struct SymplecticBasis {
    ZMat U;
    std::vector<Int> type;
};
SymplecticBasis symplectic_basis(const AltGram& g);

// Degrees (Pfaffian magnitudes) and index for a finite-index sublattice:
// sub is given by its coordinate rows in the ambient basis carrying g.
struct DegreeCheck {
    Int index;
    Int deg_ambient;
    Int deg_sub;
};
DegreeCheck sublattice_degree_check(const ZMat& sub, const AltGram& g);

// saturated intersection of a lattice with the span of the given vectors
QLattice intersect_subspace(const QLattice& lat, const std::vector<std::vector<Rat>>& span_vecs);

// Constructive form of the rational-basis lemma: given a finite-index
// sublattice 'sub' of Z^n and class representatives with
// Z^n / sub = <[cls_1]> + ... + <[cls_n]> (direct), ord[cls_i] = d_i,
// d_1 | ... | d_n, produce a basis (lambda_i) of sub, new representatives
// reps_i = cls_i mod sub and multipliers a_i with
//   d_i * reps_i = a_i * lambda_i,  1 <= a_i <= d_i,  gcd(a_i, d_i) = 1.
struct RationalBasisReps {
    std::vector<std::vector<Int>> lambda; // basis of sub
    std::vector<std::vector<Int>> reps;   // representatives, reps_i = cls_i mod sub
    std::vector<Int> multipliers;         // a_i
    std::vector<Int> orders;              // d_i
};
RationalBasisReps rational_basis_reps(const ZMat& sub, const std::vector<std::vector<Int>>& cls,
                                      const std::vector<Int>& orders);

} // namespace hmv
