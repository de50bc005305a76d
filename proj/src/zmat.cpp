#include "hmv/zmat.hpp"

namespace hmv {

ZMat ZMat::identity(long n) {
    ZMat m(n, n);
    for (long i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ZMat ZMat::transposed() const {
    ZMat t(cols, rows);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
}

ZMat operator*(const ZMat& x, const ZMat& y) {
    if (x.cols != y.rows) throw error("ZMat mul: shape mismatch");
    ZMat r(x.rows, y.cols);
    for (long i = 0; i < x.rows; ++i)
        for (long k = 0; k < x.cols; ++k) {
            if (x(i, k) == 0) continue;
            for (long j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
        }
    return r;
}

ZMat operator+(const ZMat& x, const ZMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw error("ZMat add: shape mismatch");
    ZMat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
}

ZMat operator-(const ZMat& x, const ZMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw error("ZMat sub: shape mismatch");
    ZMat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
}

ZMat operator*(const Int& c, const ZMat& x) {
    ZMat r = x;
    for (auto& e : r.a) e *= c;
    return r;
}

Int det(const ZMat& m) {
    Rat d = det(QMat(m));
    return d.get_num();
}

QMat::QMat(const ZMat& m) : rows(m.rows), cols(m.cols), a(m.a.size()) {
    for (size_t i = 0; i < a.size(); ++i) a[i] = Rat(m.a[i]);
}

QMat QMat::identity(long n) {
    QMat m(n, n);
    for (long i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMat QMat::transposed() const {
    QMat t(cols, rows);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool QMat::is_integral() const {
    for (const auto& e : a)
        if (e.get_den() != 1) return false;
    return true;
}

ZMat QMat::to_z() const {
    if (!is_integral()) throw error("QMat::to_z: non-integral entry");
    ZMat m(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i].get_num();
    return m;
}

QMat operator*(const QMat& x, const QMat& y) {
    if (x.cols != y.rows) throw error("QMat mul: shape mismatch");
    QMat r(x.rows, y.cols);
    for (long i = 0; i < x.rows; ++i)
        for (long k = 0; k < x.cols; ++k) {
            if (x(i, k) == 0) continue;
            for (long j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
        }
    return r;
}

QMat operator+(const QMat& x, const QMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw error("QMat add: shape mismatch");
    QMat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
}

QMat operator-(const QMat& x, const QMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw error("QMat sub: shape mismatch");
    QMat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
}

QMat operator*(const Rat& c, const QMat& x) {
    QMat r = x;
    for (auto& e : r.a) e *= c;
    return r;
}

namespace {

// Gaussian elimination to row echelon; returns pivot columns, optionally
// accumulates the determinant factor for square matrices.
long echelon(QMat& m, std::vector<long>* pivots, Rat* det_factor) {
    long r = 0;
    if (det_factor) *det_factor = 1;
    for (long j = 0; j < m.cols && r < m.rows; ++j) {
        long p = -1;
        for (long i = r; i < m.rows; ++i)
            if (m(i, j) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r) {
            for (long k = 0; k < m.cols; ++k) swap(m(p, k), m(r, k));
            if (det_factor) *det_factor = -*det_factor;
        }
        for (long i = r + 1; i < m.rows; ++i) {
            if (m(i, j) == 0) continue;
            Rat f = m(i, j) / m(r, j);
            for (long k = j; k < m.cols; ++k) m(i, k) -= f * m(r, k);
        }
        if (pivots) pivots->push_back(j);
        ++r;
    }
    return r;
}

} // namespace

Rat det(const QMat& m) {
    if (m.rows != m.cols) throw error("det: not square");
    QMat w = m;
    Rat sign;
    long r = echelon(w, nullptr, &sign);
    if (r < m.rows) return Rat(0);
    Rat d = sign;
    for (long i = 0; i < m.rows; ++i) d *= w(i, i);
    return d;
}

long rank(const QMat& m) {
    QMat w = m;
    return echelon(w, nullptr, nullptr);
}

QMat inverse(const QMat& m) {
    if (m.rows != m.cols) throw error("inverse: not square");
    long n = m.rows;
    QMat w = m, inv = QMat::identity(n);
    for (long j = 0; j < n; ++j) {
        long p = -1;
        for (long i = j; i < n; ++i)
            if (w(i, j) != 0) {
                p = i;
                break;
            }
        if (p < 0) throw rank_deficient("inverse: singular matrix");
        if (p != j)
            for (long k = 0; k < n; ++k) {
                swap(w(p, k), w(j, k));
                swap(inv(p, k), inv(j, k));
            }
        Rat piv = w(j, j);
        for (long k = 0; k < n; ++k) {
            w(j, k) /= piv;
            inv(j, k) /= piv;
        }
        for (long i = 0; i < n; ++i) {
            if (i == j || w(i, j) == 0) continue;
            Rat f = w(i, j);
            for (long k = 0; k < n; ++k) {
                w(i, k) -= f * w(j, k);
                inv(i, k) -= f * inv(j, k);
            }
        }
    }
    return inv;
}

std::optional<std::vector<Rat>> solve(const QMat& m, const std::vector<Rat>& b) {
    if (static_cast<long>(b.size()) != m.rows) throw error("solve: shape mismatch");
    QMat w(m.rows, m.cols + 1);
    for (long i = 0; i < m.rows; ++i) {
        for (long j = 0; j < m.cols; ++j) w(i, j) = m(i, j);
        w(i, m.cols) = b[i];
    }
    std::vector<long> pivots;
    echelon(w, &pivots, nullptr);
    // inconsistent if a pivot lands in the augmented column
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
    std::vector<Rat> x(m.cols, Rat(0));
    for (long r = static_cast<long>(pivots.size()) - 1; r >= 0; --r) {
        long j = pivots[r];
        Rat v = w(r, m.cols);
        for (long k = j + 1; k < m.cols; ++k) v -= w(r, k) * x[k];
        x[j] = v / w(r, j);
    }
    return x;
}

QMat rational_kernel(const QMat& m) {
    QMat w = m;
    std::vector<long> pivots;
    echelon(w, &pivots, nullptr);
    std::vector<bool> is_pivot(m.cols, false);
    for (long j : pivots) is_pivot[j] = true;
    std::vector<long> free_cols;
    for (long j = 0; j < m.cols; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    QMat k(m.cols, static_cast<long>(free_cols.size()));
    for (size_t t = 0; t < free_cols.size(); ++t) {
        long col = static_cast<long>(t);
        k(free_cols[t], col) = 1;
        for (long r = static_cast<long>(pivots.size()) - 1; r >= 0; --r) {
            long j = pivots[r];
            Rat v(0);
            for (long c = j + 1; c < m.cols; ++c) v -= w(r, c) * k(c, col);
            k(j, col) = v / w(r, j);
        }
    }
    return k;
}

ZMat clear_denominators(const QMat& m, Int& den) {
    den = 1;
    for (const auto& e : m.a) den = int_lcm(den, e.get_den());
    ZMat z(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) {
        Rat v = m.a[i] * Rat(den);
        z.a[i] = v.get_num();
    }
    return z;
}

HnfResult hnf(const ZMat& m) {
    HnfResult res;
    ZMat h = m;
    ZMat u = ZMat::identity(m.rows);
    auto row_sub = [&](long dst, long src, const Int& q) {
        if (q == 0) return;
        for (long k = 0; k < h.cols; ++k) h(dst, k) -= q * h(src, k);
        for (long k = 0; k < u.cols; ++k) u(dst, k) -= q * u(src, k);
    };
    auto row_swap = [&](long i, long j) {
        if (i == j) return;
        for (long k = 0; k < h.cols; ++k) swap(h(i, k), h(j, k));
        for (long k = 0; k < u.cols; ++k) swap(u(i, k), u(j, k));
    };
    auto row_neg = [&](long i) {
        for (long k = 0; k < h.cols; ++k) h(i, k) = -h(i, k);
        for (long k = 0; k < u.cols; ++k) u(i, k) = -u(i, k);
    };
    long r = 0;
    for (long j = 0; j < h.cols && r < h.rows; ++j) {
        // Euclidean elimination in column j on rows >= r
        while (true) {
            long best = -1;
            for (long i = r; i < h.rows; ++i) {
                if (h(i, j) == 0) continue;
                if (best < 0 || abs(h(i, j)) < abs(h(best, j))) best = i;
            }
            if (best < 0) break;
            row_swap(r, best);
            if (h(r, j) < 0) row_neg(r);
            bool clean = true;
            for (long i = r + 1; i < h.rows; ++i) {
                if (h(i, j) == 0) continue;
                row_sub(i, r, fdiv(h(i, j), h(r, j)));
                if (h(i, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h(r, j) != 0) {
            for (long i = 0; i < r; ++i) row_sub(i, r, fdiv(h(i, j), h(r, j)));
            res.pivot_cols.push_back(j);
            ++r;
        }
    }
    res.rank = r;
    res.u = u;
    res.h = ZMat(r, h.cols);
    for (long i = 0; i < r; ++i)
        for (long k = 0; k < h.cols; ++k) res.h(i, k) = h(i, k);
    return res;
}

SnfResult snf(const ZMat& m) {
    SnfResult res;
    ZMat s = m;
    ZMat u = ZMat::identity(m.rows);
    ZMat v = ZMat::identity(m.cols);
    auto row_sub = [&](long dst, long src, const Int& q) {
        if (q == 0) return;
        for (long k = 0; k < s.cols; ++k) s(dst, k) -= q * s(src, k);
        for (long k = 0; k < u.cols; ++k) u(dst, k) -= q * u(src, k);
    };
    auto col_sub = [&](long dst, long src, const Int& q) {
        if (q == 0) return;
        for (long k = 0; k < s.rows; ++k) s(k, dst) -= q * s(k, src);
        for (long k = 0; k < v.rows; ++k) v(k, dst) -= q * v(k, src);
    };
    auto row_swap = [&](long i, long j) {
        if (i == j) return;
        for (long k = 0; k < s.cols; ++k) swap(s(i, k), s(j, k));
        for (long k = 0; k < u.cols; ++k) swap(u(i, k), u(j, k));
    };
    auto col_swap = [&](long i, long j) {
        if (i == j) return;
        for (long k = 0; k < s.rows; ++k) swap(s(k, i), s(k, j));
        for (long k = 0; k < v.rows; ++k) swap(v(k, i), v(k, j));
    };
    auto row_neg = [&](long i) {
        for (long k = 0; k < s.cols; ++k) s(i, k) = -s(i, k);
        for (long k = 0; k < u.cols; ++k) u(i, k) = -u(i, k);
    };

    long n = std::min(m.rows, m.cols);
    for (long t = 0; t < n; ++t) {
        // locate a minimal nonzero pivot in the trailing block
        long pi = -1, pj = -1;
        for (long i = t; i < s.rows; ++i)
            for (long j = t; j < s.cols; ++j) {
                if (s(i, j) == 0) continue;
                if (pi < 0 || abs(s(i, j)) < abs(s(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        row_swap(t, pi);
        col_swap(t, pj);
        while (true) {
            if (s(t, t) < 0) row_neg(t);
            bool again = false;
            for (long i = t + 1; i < s.rows; ++i) {
                if (s(i, t) == 0) continue;
                row_sub(i, t, fdiv(s(i, t), s(t, t)));
                if (s(i, t) != 0) {
                    row_swap(t, i);
                    again = true;
                    break;
                }
            }
            if (again) continue;
            for (long j = t + 1; j < s.cols; ++j) {
                if (s(t, j) == 0) continue;
                col_sub(j, t, fdiv(s(t, j), s(t, t)));
                if (s(t, j) != 0) {
                    col_swap(t, j);
                    again = true;
                    break;
                }
            }
            if (again) continue;
            // pivot must divide the rest of the block
            bool fixed = false;
            for (long i = t + 1; i < s.rows && !fixed; ++i)
                for (long j = t + 1; j < s.cols && !fixed; ++j)
                    if (!divides(s(t, t), s(i, j))) {
                        row_sub(t, i, Int(-1)); // row_t += row_i
                        fixed = true;
                    }
            if (!fixed) break;
        }
    }
    for (long t = 0; t < n; ++t)
        if (s(t, t) != 0) {
            res.invariants.push_back(s(t, t));
            ++res.rank;
        }
    res.s = s;
    res.u = u;
    res.v = v;
    return res;
}

ZMat integer_kernel(const ZMat& m) {
    SnfResult r = snf(m);
    long k = m.cols - r.rank;
    ZMat basis(k, m.cols);
    for (long t = 0; t < k; ++t)
        for (long i = 0; i < m.cols; ++i) basis(t, i) = r.v(i, r.rank + t);
    return basis;
}

bool is_unimodular(const ZMat& m) {
    if (m.rows != m.cols) return false;
    Int d = det(m);
    return d == 1 || d == -1;
}

} // namespace hmv
