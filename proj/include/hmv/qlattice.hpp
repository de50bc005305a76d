#pragma once

#include <optional>
#include <vector>

#include "hmv/zmat.hpp"

namespace hmv {

// Full- or partial-rank lattice in Q^n, stored as an integer row basis over
// a common positive denominator, in canonical row HNF with the content
// reduced against the denominator.  Structural equality is lattice equality.
class QLattice {
    long dim_ = 0;
    Int den_ = 1;
    ZMat basis_; // rank x dim, row HNF

    void canonicalize();

public:
    QLattice() = default;
    QLattice(long dim, ZMat rows, Int den);

    static QLattice from_rows(long dim, const std::vector<std::vector<Rat>>& gens);
    static QLattice from_qmat_rows(const QMat& gens);
    static QLattice standard(long dim);
    static QLattice zero(long dim);

    long dim() const { return dim_; }
    long rank() const { return basis_.rows; }
    const Int& den() const { return den_; }
    const ZMat& basis() const { return basis_; }

    std::vector<Rat> basis_row(long i) const;
    QMat basis_qmat() const;

    bool contains(const std::vector<Rat>& v) const;
    // integer coordinates with respect to the stored basis, if a member
    std::optional<std::vector<Int>> coords(const std::vector<Rat>& v) const;

    QLattice scaled(const Rat& c) const;
    bool is_sublattice_of(const QLattice& other) const;

    // index [other : this]; requires equal rank and containment in other
    Int index_in(const QLattice& other) const;

    bool operator==(const QLattice& o) const {
        return dim_ == o.dim_ && den_ == o.den_ && basis_ == o.basis_;
    }
    bool operator!=(const QLattice& o) const { return !(*this == o); }
};

// span of the union of two lattices in the same ambient space
QLattice lattice_sum(const QLattice& a, const QLattice& b);

// {c in Q^k : L c in Z^m} for a rational m x k matrix of full column rank
QLattice preimage_lattice(const QMat& L);

} // namespace hmv
