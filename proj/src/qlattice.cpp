#include "hmv/qlattice.hpp"

namespace hmv {

void QLattice::canonicalize() {
    HnfResult r = hnf(basis_);
    basis_ = r.h;
    Int g = den_;
    for (const auto& e : basis_.a) {
        g = int_gcd(g, e);
        if (g == 1) break;
    }
    if (g > 1) {
        for (auto& e : basis_.a) e = exact_div(e, g);
        den_ = exact_div(den_, g);
    }
}

QLattice::QLattice(long dim, ZMat rows, Int den) : dim_(dim), den_(std::move(den)), basis_(std::move(rows)) {
    if (basis_.cols != dim) throw error("QLattice: column count != dim");
    if (den_ <= 0) throw error("QLattice: denominator must be positive");
    canonicalize();
}

QLattice QLattice::from_rows(long dim, const std::vector<std::vector<Rat>>& gens) {
    QMat m(static_cast<long>(gens.size()), dim);
    for (size_t i = 0; i < gens.size(); ++i) {
        if (static_cast<long>(gens[i].size()) != dim) throw error("QLattice: bad generator size");
        for (long j = 0; j < dim; ++j) m(static_cast<long>(i), j) = gens[i][j];
    }
    return from_qmat_rows(m);
}

QLattice QLattice::from_qmat_rows(const QMat& gens) {
    Int den;
    ZMat z = clear_denominators(gens, den);
    return QLattice(gens.cols, z, den);
}

QLattice QLattice::standard(long dim) { return QLattice(dim, ZMat::identity(dim), Int(1)); }

QLattice QLattice::zero(long dim) { return QLattice(dim, ZMat(0, dim), Int(1)); }

std::vector<Rat> QLattice::basis_row(long i) const {
    std::vector<Rat> v(static_cast<size_t>(dim_));
    for (long j = 0; j < dim_; ++j) v[static_cast<size_t>(j)] = Rat(basis_(i, j), den_);
    for (auto& e : v) e.canonicalize();
    return v;
}

QMat QLattice::basis_qmat() const {
    QMat m(rank(), dim_);
    for (long i = 0; i < rank(); ++i)
        for (long j = 0; j < dim_; ++j) {
            m(i, j) = Rat(basis_(i, j), den_);
            m(i, j).canonicalize();
        }
    return m;
}

std::optional<std::vector<Int>> QLattice::coords(const std::vector<Rat>& v) const {
    if (static_cast<long>(v.size()) != dim_) throw error("QLattice::coords: bad vector size");
    // member iff den*v is integral and solves c * basis = den*v over Z
    std::vector<Int> w(static_cast<size_t>(dim_));
    for (long j = 0; j < dim_; ++j) {
        Rat t = v[static_cast<size_t>(j)] * Rat(den_);
        t.canonicalize();
        if (t.get_den() != 1) return std::nullopt;
        w[static_cast<size_t>(j)] = t.get_num();
    }
    std::vector<Int> c(static_cast<size_t>(rank()), Int(0));
    std::vector<long> pivots;
    for (long i = 0; i < basis_.rows; ++i) {
        long p = -1;
        for (long j = 0; j < basis_.cols; ++j)
            if (basis_(i, j) != 0) {
                p = j;
                break;
            }
        pivots.push_back(p);
    }
    for (long i = 0; i < basis_.rows; ++i) {
        long p = pivots[static_cast<size_t>(i)];
        if (!divides(basis_(i, p), w[static_cast<size_t>(p)])) return std::nullopt;
        Int q = exact_div(w[static_cast<size_t>(p)], basis_(i, p));
        c[static_cast<size_t>(i)] = q;
        if (q != 0)
            for (long j = 0; j < dim_; ++j) w[static_cast<size_t>(j)] -= q * basis_(i, j);
    }
    for (const auto& e : w)
        if (e != 0) return std::nullopt;
    return c;
}

bool QLattice::contains(const std::vector<Rat>& v) const { return coords(v).has_value(); }

QLattice QLattice::scaled(const Rat& c) const {
    if (c == 0) return zero(dim_);
    ZMat b = basis_;
    Rat ca = abs(c);
    for (auto& e : b.a) e *= ca.get_num();
    return QLattice(dim_, b, den_ * ca.get_den());
}

bool QLattice::is_sublattice_of(const QLattice& other) const {
    for (long i = 0; i < rank(); ++i)
        if (!other.contains(basis_row(i))) return false;
    return true;
}

Int QLattice::index_in(const QLattice& other) const {
    if (rank() != other.rank()) throw rank_deficient("index_in: rank mismatch");
    if (!is_sublattice_of(other)) throw error("index_in: not a sublattice");
    // coordinates of this basis in the other basis form a square integer matrix
    QMat coords_mat(rank(), rank());
    for (long i = 0; i < rank(); ++i) {
        auto c = other.coords(basis_row(i));
        if (!c) throw error("index_in: containment lost");
        for (long j = 0; j < rank(); ++j) coords_mat(i, j) = Rat((*c)[static_cast<size_t>(j)]);
    }
    Rat d = det(coords_mat);
    return abs(d.get_num());
}

QLattice lattice_sum(const QLattice& a, const QLattice& b) {
    if (a.dim() != b.dim()) throw error("lattice_sum: dimension mismatch");
    QMat m(a.rank() + b.rank(), a.dim());
    for (long i = 0; i < a.rank(); ++i) {
        auto r = a.basis_row(i);
        for (long j = 0; j < a.dim(); ++j) m(i, j) = r[static_cast<size_t>(j)];
    }
    for (long i = 0; i < b.rank(); ++i) {
        auto r = b.basis_row(i);
        for (long j = 0; j < b.dim(); ++j) m(a.rank() + i, j) = r[static_cast<size_t>(j)];
    }
    return QLattice::from_qmat_rows(m);
}

QLattice preimage_lattice(const QMat& L) {
    Int delta;
    ZMat Lz = clear_denominators(L, delta);
    SnfResult r = snf(Lz);
    if (r.rank != L.cols) throw rank_deficient("preimage_lattice: matrix not of full column rank");
    // L c in Z^m  <=>  S (V^-1 c) in delta Z^m; basis c_i = (delta / s_i) * V e_i
    QMat rows(L.cols, L.cols);
    for (long i = 0; i < L.cols; ++i) {
        Rat f(delta, r.s(i, i));
        f.canonicalize();
        for (long j = 0; j < L.cols; ++j) rows(i, j) = f * Rat(r.v(j, i));
    }
    return QLattice::from_qmat_rows(rows);
}

} // namespace hmv
