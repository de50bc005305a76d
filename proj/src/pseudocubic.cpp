#include "hmv/pseudocubic.hpp"

#include "hmv/lattices.hpp"

namespace hmv {

namespace {

QuadElem inv_sqrt(const Int& D) {
    Rat v(1, D);
    v.canonicalize();
    return QuadElem(D, Rat(0), v);
}

std::vector<Rat> to_vec(const std::array<Rat, 3>& a) { return {a[0], a[1], a[2]}; }

QMat col_vec(const std::array<Rat, 3>& a) {
    QMat m(3, 1);
    for (long i = 0; i < 3; ++i) m(i, 0) = a[static_cast<size_t>(i)];
    return m;
}

} // namespace

FLattice::FLattice(Int rad, QLattice lat) : rad_(std::move(rad)), lat_(std::move(lat)) {
    if (lat_.dim() != 3 || lat_.rank() != 3) throw error("FLattice: expected a rank-3 lattice in F");
}

FLattice FLattice::from_elements(const Int& rad, const std::vector<PCElem>& gens) {
    std::vector<std::vector<Rat>> rows;
    for (const auto& g : gens) {
        if (g.rad() != rad) throw discriminant_mismatch("FLattice generator");
        rows.push_back(to_vec(pc_coords(g)));
    }
    return FLattice(rad, QLattice::from_rows(3, rows));
}

PCElem FLattice::basis_elem(long i) const {
    auto r = lat_.basis_row(i);
    return pc_from_coords(rad_, {r[0], r[1], r[2]});
}

std::array<PCElem, 3> FLattice::basis() const {
    return {basis_elem(0), basis_elem(1), basis_elem(2)};
}

bool FLattice::contains(const PCElem& x) const { return lat_.contains(to_vec(pc_coords(x))); }

FLattice FLattice::scaled(const PCElem& a) const {
    std::vector<PCElem> gens;
    for (long i = 0; i < 3; ++i) gens.push_back(a * basis_elem(i));
    return from_elements(rad_, gens);
}

PCOrder::PCOrder(FLattice lat) : lat_(std::move(lat)) {
    if (!lat_.contains(PCElem::one(lat_.rad()))) throw error("PCOrder: does not contain (1,1)");
    for (long i = 0; i < 3; ++i)
        for (long j = i; j < 3; ++j)
            if (!lat_.contains(lat_.basis_elem(i) * lat_.basis_elem(j)))
                throw error("PCOrder: not closed under multiplication");
}

QMat pseudo_trace_gram(const Int& rad) {
    QMat g(3, 3);
    g(0, 0) = 2;
    g(1, 1) = 2 * Rat(rad);
    g(2, 2) = 1;
    return g;
}

HMap::HMap(Int rad, QMat h) : rad_(std::move(rad)), h_(std::move(h)) {
    if (h_.rows != 3 || h_.cols != 3) throw error("HMap: expected 3x3");
    QMat gh = pseudo_trace_gram(rad_) * h_;
    if (!(gh == gh.transposed())) throw error("HMap: not self-adjoint (G*H not symmetric)");
}

HMap HMap::zero(const Int& rad) { return HMap(rad, QMat(3, 3)); }

PCElem HMap::apply(const PCElem& x) const {
    QMat v = h_ * col_vec(pc_coords(x));
    return pc_from_coords(rad_, {v(0, 0), v(1, 0), v(2, 0)});
}

HMap baer_sum(const HMap& h1, const HMap& h2) {
    if (h1.rad() != h2.rad()) throw discriminant_mismatch("baer_sum");
    return HMap(h1.rad(), h1.matrix() + h2.matrix());
}

FPairLattice::FPairLattice(Int rad, QLattice lat) : rad_(std::move(rad)), lat_(std::move(lat)) {
    if (lat_.dim() != 6 || lat_.rank() != 6)
        throw error("FPairLattice: expected a rank-6 lattice in F^2");
}

FPairLattice FPairLattice::from_elements(const Int& rad, const std::vector<FPair>& gens) {
    std::vector<std::vector<Rat>> rows;
    for (const auto& g : gens) {
        auto c = fpair_coords(g);
        rows.push_back({c[0], c[1], c[2], c[3], c[4], c[5]});
    }
    return FPairLattice(rad, QLattice::from_rows(6, rows));
}

FPair FPairLattice::basis_elem(long i) const {
    auto r = lat_.basis_row(i);
    return fpair_from_coords(rad_, {r[0], r[1], r[2], r[3], r[4], r[5]});
}

std::array<Rat, 6> fpair_coords(const FPair& v) {
    auto a = pc_coords(v.first);
    auto b = pc_coords(v.second);
    return {a[0], a[1], a[2], b[0], b[1], b[2]};
}

FPair fpair_from_coords(const Int& rad, const std::array<Rat, 6>& c) {
    return {pc_from_coords(rad, {c[0], c[1], c[2]}), pc_from_coords(rad, {c[3], c[4], c[5]})};
}

Rat sympl_trp_pairing(const FPair& v, const FPair& w) {
    return trp(w.first * v.second - v.first * w.second);
}

PCOrder pc_order_from_ideal(const QIdeal& a) {
    const Int& D = a.D();
    auto [g1, g2] = a.gens();
    std::vector<PCElem> gens = {PCElem(g1, Rat(0)), PCElem(g2, Rat(0)), PCElem::one(D)};
    return PCOrder(FLattice::from_elements(D, gens));
}

namespace {

QLattice order_plus_z_lattice(const Int& D) {
    Disc d(D);
    std::vector<std::vector<Rat>> rows = {
        to_vec(pc_coords(PCElem(QuadElem::rational(D, 1), Rat(0)))),
        to_vec(pc_coords(PCElem(QuadElem::gamma(d), Rat(0)))),
        to_vec(pc_coords(PCElem(QuadElem::rational(D, 0), Rat(1)))),
    };
    return QLattice::from_rows(3, rows);
}

} // namespace

Int pc_order_degree(const PCOrder& O) {
    return O.lattice().lattice().index_in(order_plus_z_lattice(O.lattice().rad()));
}

FLattice dual_lattice(const FLattice& I) {
    QMat B = I.lattice().basis_qmat();
    QMat gram = B * pseudo_trace_gram(I.rad()) * B.transposed();
    QMat dual_rows = inverse(gram) * B;
    return FLattice(I.rad(), QLattice::from_qmat_rows(dual_rows));
}

QMat mult_matrix(const PCElem& x) {
    auto c = pc_coords(x);
    const Int& D = x.rad();
    QMat m(3, 3);
    // e1 = (1,0): diag(1,1,0); e2 = (sqrt(D),0): u+v sqrt(D) -> vD + u sqrt(D);
    // e3 = (0,1): diag(0,0,1)
    m(0, 0) = c[0];
    m(1, 1) = c[0];
    m(0, 1) = c[1] * Rat(D);
    m(1, 0) = c[1];
    m(2, 2) = c[2];
    return m;
}

QMat commutator_action(const PCElem& x, const HMap& h) {
    QMat mx = mult_matrix(x);
    return mx * h.matrix() - h.matrix() * mx;
}

namespace {

// stack the linear conditions "column-coordinates of map(x) lie in Z^3 for
// each target generator" over a parameter space of maps
QLattice solution_lattice(const std::vector<QMat>& condition_blocks) {
    long cols = condition_blocks.front().cols;
    QMat L(static_cast<long>(condition_blocks.size()) * 3, cols);
    for (size_t b = 0; b < condition_blocks.size(); ++b)
        for (long i = 0; i < 3; ++i)
            for (long j = 0; j < cols; ++j)
                L(static_cast<long>(b) * 3 + i, j) = condition_blocks[b](i, j);
    return preimage_lattice(L);
}

std::array<QMat, 3> mult_basis_mats(const Int& D) {
    PCElem e1(QuadElem::rational(D, 1), Rat(0));
    PCElem e2(QuadElem::sqrt_rad(D), Rat(0));
    PCElem e3(QuadElem::rational(D, 0), Rat(1));
    return {mult_matrix(e1), mult_matrix(e2), mult_matrix(e3)};
}

} // namespace

PCOrder coefficient_ring(const FLattice& I) {
    QMat B = I.lattice().basis_qmat();
    QMat Binv_t = inverse(B).transposed(); // column coords: c = B^-T xi
    auto mults = mult_basis_mats(I.rad());
    std::vector<QMat> blocks;
    for (long j = 0; j < 3; ++j) {
        QMat bj = col_vec(pc_coords(I.basis_elem(j)));
        QMat block(3, 3);
        for (long k = 0; k < 3; ++k) {
            QMat img = Binv_t * (mults[static_cast<size_t>(k)] * bj);
            for (long i = 0; i < 3; ++i) block(i, k) = img(i, 0);
        }
        blocks.push_back(block);
    }
    QLattice sol = solution_lattice(blocks);
    std::vector<PCElem> gens;
    for (long i = 0; i < sol.rank(); ++i) {
        auto r = sol.basis_row(i);
        gens.push_back(pc_from_coords(I.rad(), {r[0], r[1], r[2]}));
    }
    return PCOrder(FLattice::from_elements(I.rad(), gens));
}

PCOrder o_h(const FLattice& I, const HMap& h) {
    QMat B = I.lattice().basis_qmat();
    QMat Binv_t = inverse(B).transposed();
    auto mults = mult_basis_mats(I.rad());
    FLattice dual = dual_lattice(I);
    std::vector<QMat> blocks;
    for (long j = 0; j < 3; ++j) {
        QMat bj = col_vec(pc_coords(I.basis_elem(j)));
        QMat block(3, 3);
        for (long k = 0; k < 3; ++k) {
            QMat img = Binv_t * (mults[static_cast<size_t>(k)] * bj);
            for (long i = 0; i < 3; ++i) block(i, k) = img(i, 0);
        }
        blocks.push_back(block);
    }
    for (long j = 0; j < 3; ++j) {
        QMat dj = col_vec(pc_coords(dual.basis_elem(j)));
        QMat block(3, 3);
        for (long k = 0; k < 3; ++k) {
            QMat comm = mults[static_cast<size_t>(k)] * h.matrix() - h.matrix() * mults[static_cast<size_t>(k)];
            QMat img = Binv_t * (comm * dj);
            for (long i = 0; i < 3; ++i) block(i, k) = img(i, 0);
        }
        blocks.push_back(block);
    }
    QLattice sol = solution_lattice(blocks);
    std::vector<PCElem> gens;
    for (long i = 0; i < sol.rank(); ++i) {
        auto r = sol.basis_row(i);
        gens.push_back(pc_from_coords(I.rad(), {r[0], r[1], r[2]}));
    }
    return PCOrder(FLattice::from_elements(I.rad(), gens));
}

FPair eh_action(const PCElem& x, const FPair& v, const HMap& h) {
    QMat comm = commutator_action(x, h);
    QMat img = comm * col_vec(pc_coords(v.second));
    PCElem shift = pc_from_coords(x.rad(), {img(0, 0), img(1, 0), img(2, 0)});
    return {x * v.first + shift, x * v.second};
}

HMap conjugate_by(const HMap& h, const PCElem& a) {
    QMat ma = mult_matrix(a);
    return HMap(h.rad(), ma * h.matrix() * ma);
}

std::array<QMat, 6> hom_plus_basis(const Int& rad) {
    Rat D(rad);
    std::array<QMat, 6> b{QMat(3, 3), QMat(3, 3), QMat(3, 3), QMat(3, 3), QMat(3, 3), QMat(3, 3)};
    // multiplication part Hom_F: 2*M_{e1}, 2*M_{e2}, M_{e3}
    b[0](0, 0) = 2;
    b[0](1, 1) = 2;
    b[1](0, 1) = 2 * D;
    b[1](1, 0) = 2;
    b[2](2, 2) = 1;
    // orthogonal complement
    b[3](0, 0) = -D / 2;
    b[3](1, 1) = D / 2;
    b[4](0, 2) = Rat(1, 2);
    b[4](2, 0) = 1;
    b[5](1, 2) = Rat(1, 2);
    b[5](2, 1) = D;
    return b;
}

std::array<Rat, 6> hom_plus_coords(const HMap& h) {
    auto basis = hom_plus_basis(h.rad());
    QMat L(9, 6);
    std::vector<Rat> rhs(9);
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 3; ++j) {
            long r = i * 3 + j;
            for (long k = 0; k < 6; ++k) L(r, k) = basis[static_cast<size_t>(k)](i, j);
            rhs[static_cast<size_t>(r)] = h.matrix()(i, j);
        }
    auto sol = solve(L, rhs);
    if (!sol) throw error("hom_plus_coords: map is not self-adjoint");
    return {(*sol)[0], (*sol)[1], (*sol)[2], (*sol)[3], (*sol)[4], (*sol)[5]};
}

QLattice hom_plus_integral_lattice(const FLattice& I) {
    QMat B = I.lattice().basis_qmat();
    QMat Binv_t = inverse(B).transposed();
    FLattice dual = dual_lattice(I);
    auto basis = hom_plus_basis(I.rad());
    std::vector<QMat> blocks;
    for (long j = 0; j < 3; ++j) {
        QMat dj = col_vec(pc_coords(dual.basis_elem(j)));
        QMat block(3, 6);
        for (long k = 0; k < 6; ++k) {
            QMat img = Binv_t * (basis[static_cast<size_t>(k)] * dj);
            for (long i = 0; i < 3; ++i) block(i, k) = img(i, 0);
        }
        blocks.push_back(block);
    }
    return solution_lattice(blocks);
}

bool extension_class_equal(const HMap& h1, const HMap& h2, const FLattice& I) {
    if (h1.rad() != h2.rad() || h1.rad() != I.rad()) throw discriminant_mismatch();
    HMap diff(h1.rad(), h1.matrix() - h2.matrix());
    auto c = hom_plus_coords(diff);
    QLattice L = hom_plus_integral_lattice(I);
    // project modulo Hom_F: keep the complement coordinates
    std::vector<std::vector<Rat>> rows;
    for (long i = 0; i < L.rank(); ++i) {
        auto r = L.basis_row(i);
        rows.push_back({r[3], r[4], r[5]});
    }
    QLattice proj = QLattice::from_rows(3, rows);
    return proj.contains({c[3], c[4], c[5]});
}

QLattice cusp_line_lattice(const PCElem& v1, const PCElem& v2, const FPairLattice& M) {
    if (v1.x().is_zero() && v2.x().is_zero()) throw degenerate_line();
    if (v1.q() == 0 && v2.q() == 0) throw degenerate_line();
    const Int& D = M.rad();
    PCElem e1(QuadElem::rational(D, 1), Rat(0));
    PCElem e2(QuadElem::sqrt_rad(D), Rat(0));
    PCElem e3(QuadElem::rational(D, 0), Rat(1));
    std::vector<std::vector<Rat>> span;
    for (const PCElem& e : {e1, e2, e3}) {
        auto c = fpair_coords({e * v1, e * v2});
        span.push_back({c[0], c[1], c[2], c[3], c[4], c[5]});
    }
    return intersect_subspace(M.lattice(), span);
}

std::vector<FPair> standard_symplectic_generators(const QOrder& O, const QIdeal& a,
                                                  const QuadElem& eta1, const QuadElem& eta2) {
    if (!verify_smart_basis(eta1, eta2, a)) throw not_smart_basis();
    const Int& D = a.D();
    Int d = a.norm();
    QuadElem isd = inv_sqrt(D);
    QuadElem zq = QuadElem::rational(D, 0);
    PCElem zero = PCElem::zero(D);
    auto K = [&](const QuadElem& x) { return PCElem(x, Rat(0)); };
    auto Q = [&](const Rat& q) { return PCElem(zq, q); };
    (void)O;
    return {
        {K(eta1), zero},
        {K(eta2), zero},
        {Q(Rat(1)), zero},
        {zero, K(isd * eta2.conj())},
        {Q(Rat(1, d)), K(-(isd * eta1.conj()))},
        {K(Rat(1, d) * eta2), Q(Rat(-1))},
    };
}

FPairLattice standard_symplectic_module(const QOrder& O, const QIdeal& a, const QuadElem& eta1,
                                        const QuadElem& eta2) {
    return FPairLattice::from_elements(a.D(), standard_symplectic_generators(O, a, eta1, eta2));
}

} // namespace hmv
