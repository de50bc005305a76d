#pragma once

#include <optional>
#include <vector>

#include "hmv/rat.hpp"

namespace hmv {

// Dense matrices with exact entries.  Sizes in this project stay tiny
// (<= 8 in real use, a bit larger in tests), so the algorithms below are
// the plain textbook ones.

struct ZMat {
    long rows = 0, cols = 0;
    std::vector<Int> a;

    ZMat() = default;
    ZMat(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Int(0)) {}

    Int& operator()(long i, long j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Int& operator()(long i, long j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static ZMat identity(long n);
    ZMat transposed() const;
    bool operator==(const ZMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

ZMat operator*(const ZMat& x, const ZMat& y);
ZMat operator+(const ZMat& x, const ZMat& y);
ZMat operator-(const ZMat& x, const ZMat& y);
ZMat operator*(const Int& c, const ZMat& x);

Int det(const ZMat& m);

struct QMat {
    long rows = 0, cols = 0;
    std::vector<Rat> a;

    QMat() = default;
    QMat(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}
    explicit QMat(const ZMat& m);

    Rat& operator()(long i, long j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rat& operator()(long i, long j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static QMat identity(long n);
    QMat transposed() const;
    bool operator==(const QMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool is_integral() const;
    ZMat to_z() const; // requires is_integral()
};

QMat operator*(const QMat& x, const QMat& y);
QMat operator+(const QMat& x, const QMat& y);
QMat operator-(const QMat& x, const QMat& y);
QMat operator*(const Rat& c, const QMat& x);

Rat det(const QMat& m);
long rank(const QMat& m);
QMat inverse(const QMat& m); // throws rank_deficient if singular

// solves m * x = b exactly; nullopt if inconsistent
std::optional<std::vector<Rat>> solve(const QMat& m, const std::vector<Rat>& b);

// columns span the rational right kernel {x : m x = 0}
QMat rational_kernel(const QMat& m);

// clears denominators: returns integer matrix z and positive den with m = z / den
ZMat clear_denominators(const QMat& m, Int& den);

// Row Hermite normal form.  h has the same row span as m over Z: zero rows
// removed, pivots positive and strictly right-moving, entries above each
// pivot reduced into [0, pivot).  u is unimodular with u * m = h_full where
// h_full is h padded with the zero rows.
struct HnfResult {
    ZMat h;
    ZMat u;
    std::vector<long> pivot_cols;
    long rank = 0;
};
HnfResult hnf(const ZMat& m);

// Smith normal form u * m * v = s with u, v unimodular and s diagonal,
// s(0,0) | s(1,1) | ..., all nonnegative.
struct SnfResult {
    ZMat s, u, v;
    long rank = 0;
    std::vector<Int> invariants; // the nonzero diagonal entries
};
SnfResult snf(const ZMat& m);

// basis (as rows) of the saturated integer right kernel {x : m x = 0}
ZMat integer_kernel(const ZMat& m);

bool is_unimodular(const ZMat& m);

} // namespace hmv
