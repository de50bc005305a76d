#include "hmv/lattices.hpp"

namespace hmv {

std::vector<Int> symplectic_type(const AltGram& g) {
    if (g.G.rows % 2 != 0) throw degenerate_form("odd dimension");
    SnfResult r = snf(g.G);
    if (r.rank != g.G.rows) throw degenerate_form("degenerate alternating form");
    std::vector<Int> type;
    for (long i = 0; i < g.G.rows; i += 2) {
        if (r.invariants[static_cast<size_t>(i)] != r.invariants[static_cast<size_t>(i + 1)])
            throw error("alternating invariants do not pair up");
        type.push_back(r.invariants[static_cast<size_t>(i)]);
    }
    return type;
}

SymplecticBasis symplectic_basis(const AltGram& gram) {
    long n = gram.G.rows;
    if (n % 2 != 0) throw degenerate_form("odd dimension");
    if (det(gram.G) == 0) throw degenerate_form("degenerate alternating form");
    long g = n / 2;

    // rows of U are the working basis vectors; pairings via the fixed Gram
    ZMat U = ZMat::identity(n);
    auto pairing = [&](long i, long j) {
        Int s = 0;
        for (long k = 0; k < n; ++k) {
            if (U(i, k) == 0) continue;
            for (long l = 0; l < n; ++l) s += U(i, k) * gram.G(k, l) * U(j, l);
        }
        return s;
    };
    auto row_add = [&](long dst, long src, const Int& c) {
        for (long k = 0; k < n; ++k) U(dst, k) += c * U(src, k);
    };
    auto row_swap = [&](long i, long j) {
        if (i == j) return;
        for (long k = 0; k < n; ++k) swap(U(i, k), U(j, k));
    };
    auto row_neg = [&](long i) {
        for (long k = 0; k < n; ++k) U(i, k) = -U(i, k);
    };

    std::vector<Int> type;
    // vectors 0..2t-1 hold finished hyperbolic pairs (e_1, f_1, e_2, f_2, ...)
    for (long t = 0; t < g; ++t) {
        long base = 2 * t;
        while (true) {
            // minimal nonzero pairing among the active vectors
            long pi = -1, pj = -1;
            Int best = 0;
            for (long i = base; i < n; ++i)
                for (long j = i + 1; j < n; ++j) {
                    Int p = pairing(i, j);
                    if (p == 0) continue;
                    if (pi < 0 || abs(p) < abs(best)) {
                        pi = i;
                        pj = j;
                        best = p;
                    }
                }
            if (pi < 0) throw degenerate_form("form degenerate on residual block");
            row_swap(base, pi);
            row_swap(base + 1, pj == base ? pi : pj);
            if (pairing(base, base + 1) < 0) row_neg(base + 1);
            Int d = pairing(base, base + 1);

            // clear pairings of the remaining vectors with the pivot pair
            bool restart = false;
            for (long k = base + 2; k < n && !restart; ++k) {
                Int a = pairing(base, k);
                Int b = pairing(base + 1, k);
                Int qa = fdiv(a, d), qb = fdiv(b, d);
                // v_k += (b/d) e - (a/d) f clears exactly when d | a and d | b
                row_add(k, base, qb);
                row_add(k, base + 1, -qa);
                if (pairing(base, k) != 0 || pairing(base + 1, k) != 0) restart = true;
            }
            if (restart) continue;

            // pivot must divide all remaining pairings
            bool fixed = false;
            for (long i = base + 2; i < n && !fixed; ++i)
                for (long j = i + 1; j < n && !fixed; ++j)
                    if (!divides(d, pairing(i, j))) {
                        row_add(base, i, Int(1));
                        fixed = true;
                    }
            if (fixed) continue;
            type.push_back(d);
            break;
        }
    }

    // reorder as (e_1..e_g, f_1..f_g)
    ZMat P(n, n);
    for (long t = 0; t < g; ++t) {
        P(t, 2 * t) = 1;
        P(g + t, 2 * t + 1) = 1;
    }
    SymplecticBasis out{P * U, type};
    for (size_t i = 0; i + 1 < out.type.size(); ++i)
        if (!divides(out.type[i], out.type[i + 1])) throw error("symplectic divisibility lost");
    return out;
}

DegreeCheck sublattice_degree_check(const ZMat& sub, const AltGram& g) {
    if (sub.rows != g.G.rows || sub.cols != g.G.rows)
        throw rank_deficient("sublattice must have full rank coordinates");
    Int da = det(g.G);
    Int index = abs(det(sub));
    if (index == 0) throw rank_deficient("sublattice coordinates are singular");
    ZMat gs = sub * g.G * sub.transposed();
    Int ds = det(gs);
    if (!is_square(da) || !is_square(ds)) throw error("alternating determinant must be square");
    return {index, isqrt(abs(da)), isqrt(abs(ds))};
}

QLattice intersect_subspace(const QLattice& lat, const std::vector<std::vector<Rat>>& span_vecs) {
    long n = lat.dim();
    if (span_vecs.empty()) return QLattice::zero(n);
    QMat w(static_cast<long>(span_vecs.size()), n);
    for (size_t i = 0; i < span_vecs.size(); ++i) {
        if (static_cast<long>(span_vecs[i].size()) != n) throw error("intersect_subspace: bad vector");
        for (long j = 0; j < n; ++j) w(static_cast<long>(i), j) = span_vecs[i][j];
    }
    // x in span(w)  <=>  x orthogonal to ker(w) (dot-product complement)
    QMat normals = rational_kernel(w); // n x c, columns
    if (normals.cols == 0) return lat;  // the span is everything
    // combos c of lattice basis rows with (c * B) . normals = 0
    QMat B = lat.basis_qmat();
    QMat M = B * normals; // rank x c
    Int den;
    ZMat Mz = clear_denominators(M, den);
    // saturated left kernel: rows x with x * Mz = 0
    ZMat K = integer_kernel(Mz.transposed());
    QMat rows(K.rows, n);
    for (long i = 0; i < K.rows; ++i)
        for (long j = 0; j < n; ++j) {
            Rat s(0);
            for (long k = 0; k < lat.rank(); ++k) s += Rat(K(i, k)) * B(k, j);
            rows(i, j) = s;
        }
    return QLattice::from_qmat_rows(rows);
}

RationalBasisReps rational_basis_reps(const ZMat& sub, const std::vector<std::vector<Int>>& cls,
                                      const std::vector<Int>& orders) {
    long n = sub.rows;
    if (sub.cols != n || static_cast<long>(cls.size()) != n ||
        static_cast<long>(orders.size()) != n)
        throw error("rational_basis_reps: shape mismatch");
    for (size_t i = 0; i + 1 < orders.size(); ++i)
        if (!divides(orders[i], orders[i + 1])) throw wrong_orders("orders must form a divisor chain");
    QMat subq(sub);
    if (det(subq) == 0) throw rank_deficient("sublattice not of full rank");
    QMat sub_inv = inverse(subq);

    // R row i = coordinates of d_i * cls_i with respect to the basis 'sub'
    ZMat R(n, n);
    for (long i = 0; i < n; ++i) {
        std::vector<Rat> v(static_cast<size_t>(n));
        for (long j = 0; j < n; ++j) v[static_cast<size_t>(j)] = Rat(orders[static_cast<size_t>(i)] * cls[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        std::vector<Rat> c(static_cast<size_t>(n), Rat(0));
        for (long j = 0; j < n; ++j)
            for (long k = 0; k < n; ++k) c[static_cast<size_t>(j)] += v[static_cast<size_t>(k)] * sub_inv(k, j);
        for (long j = 0; j < n; ++j) {
            c[static_cast<size_t>(j)].canonicalize();
            if (c[static_cast<size_t>(j)].get_den() != 1)
                throw wrong_orders("d_i * cls_i does not lie in the sublattice");
            R(i, j) = c[static_cast<size_t>(j)].get_num();
        }
    }

    // W tracks the basis change: current basis mu_i = (W * sub) row i.
    // R(:,dst) -= q * R(:,src) corresponds to mu_src += q * mu_dst.
    ZMat W = ZMat::identity(n);
    auto col_op = [&](long dst, long src, const Int& q) {
        if (q == 0) return;
        for (long i = 0; i < n; ++i) R(i, dst) -= q * R(i, src);
        for (long j = 0; j < n; ++j) W(src, j) += q * W(dst, j);
    };
    auto col_swap = [&](long i, long j) {
        if (i == j) return;
        for (long r = 0; r < n; ++r) swap(R(r, i), R(r, j));
        for (long c = 0; c < n; ++c) swap(W(i, c), W(j, c));
    };
    auto col_neg = [&](long j) {
        for (long r = 0; r < n; ++r) R(r, j) = -R(r, j);
        for (long c = 0; c < n; ++c) W(j, c) = -W(j, c);
    };

    // Phase 1: bottom-up column echelon into upper triangular form.
    // Processing row i uses column ops among columns 0..i only; rows below i
    // are already zero there, so their pivots survive.  A row that is zero on
    // columns 0..i is legal only for order 1 (the class is trivial).
    for (long i = n - 1; i >= 0; --i) {
        while (true) {
            long best = -1;
            for (long j = 0; j <= i; ++j)
                if (R(i, j) != 0 && (best < 0 || abs(R(i, j)) < abs(R(i, best)))) best = j;
            if (best < 0) {
                if (orders[static_cast<size_t>(i)] != 1)
                    throw not_direct_sum("class of nontrivial order lies in the span of later ones");
                break;
            }
            col_swap(best, i);
            if (R(i, i) < 0) col_neg(i);
            bool clean = true;
            for (long j = 0; j < i; ++j) {
                if (R(i, j) == 0) continue;
                col_op(j, i, fdiv(R(i, j), R(i, i)));
                if (R(i, j) != 0) clean = false;
            }
            if (clean) break;
        }
    }

    // Phase 2 prerequisites: gcd(a_ii, d_i) = 1 follows from the direct-sum
    // and order hypotheses; verify instead of assuming.
    for (long i = 0; i < n; ++i)
        if (int_gcd(R(i, i), orders[static_cast<size_t>(i)]) != 1)
            throw not_direct_sum("diagonal multiplier shares a factor with the order");

    // Phase 2: clear entries above the diagonal modulo d_i using column ops
    // with the diagonal column (touches only rows < i).
    for (long i = n - 1; i >= 0; --i) {
        const Int& d = orders[static_cast<size_t>(i)];
        if (d == 1) continue;
        Int inv = mod_inverse(mod_floor(R(i, i), d), d);
        for (long j = i + 1; j < n; ++j) {
            if (divides(d, R(i, j))) continue;
            Int q = mod_floor(R(i, j) * inv, d);
            // R(i, j) -= q * R(i, i)  (mod d it becomes 0)
            col_op(j, i, q);
            if (!divides(d, R(i, j))) throw error("phase 2 reduction failed");
        }
    }

    RationalBasisReps out;
    out.orders = orders;
    // basis lambda_i = row i of W * sub
    ZMat lambda = W * sub;
    for (long i = 0; i < n; ++i) {
        std::vector<Int> row(static_cast<size_t>(n));
        for (long j = 0; j < n; ++j) row[static_cast<size_t>(j)] = lambda(i, j);
        out.lambda.push_back(row);
    }
    // change representatives: reps_i = cls_i - sum_{j != i} (R(i,j)/d_i) lambda_j,
    // then shift by multiples of lambda_i to land a_i in (0, d_i]
    for (long i = 0; i < n; ++i) {
        const Int& d = orders[static_cast<size_t>(i)];
        std::vector<Rat> rep(static_cast<size_t>(n));
        for (long j = 0; j < n; ++j) rep[static_cast<size_t>(j)] = Rat(cls[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        for (long j = 0; j < n; ++j) {
            if (j == i) continue;
            if (R(i, j) == 0) continue;
            Rat q(R(i, j), d);
            for (long k = 0; k < n; ++k) rep[static_cast<size_t>(k)] -= q * Rat(lambda(j, k));
        }
        Int a = R(i, i);
        // normalize a into (0, d]
        Int shift = fdiv(a - 1, d); // a - shift*d in (0, d]
        if (shift != 0)
            for (long k = 0; k < n; ++k) rep[static_cast<size_t>(k)] -= Rat(shift) * Rat(lambda(i, k));
        a -= shift * d;
        std::vector<Int> repz(static_cast<size_t>(n));
        for (long k = 0; k < n; ++k) {
            rep[static_cast<size_t>(k)].canonicalize();
            if (rep[static_cast<size_t>(k)].get_den() != 1) throw not_direct_sum("representative not integral");
            repz[static_cast<size_t>(k)] = rep[static_cast<size_t>(k)].get_num();
        }
        out.reps.push_back(repz);
        out.multipliers.push_back(a);
        if (a < 1 || a > d || int_gcd(a, d) != 1) throw error("multiplier normalization failed");
    }
    return out;
}

} // namespace hmv
