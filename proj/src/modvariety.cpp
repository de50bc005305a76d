#include "hmv/modvariety.hpp"

namespace hmv {

namespace {

QuadElem inv_sqrt(const Int& D) {
    Rat v(1, D);
    v.canonicalize();
    return QuadElem(D, Rat(0), v);
}

QuadElem qrat(const Int& rad, const Rat& q) { return QuadElem::rational(rad, q); }

void require_smart(const QIdeal& a, const QuadElem& eta1, const QuadElem& eta2) {
    if (!verify_smart_basis(eta1, eta2, a)) throw not_smart_basis();
}

// x = p + q*w for irrational w; integer solution or nullopt
std::optional<std::pair<Int, Int>> decompose_basis(const QuadElem& x, const QuadElem& w) {
    if (w.v() == 0) return std::nullopt;
    Rat q = x.v() / w.v();
    Rat p = x.u() - q * w.u();
    p.canonicalize();
    q.canonicalize();
    if (p.get_den() != 1 || q.get_den() != 1) return std::nullopt;
    return std::pair<Int, Int>{p.get_num(), q.get_num()};
}

} // namespace

Mat2K Mat2K::identity(const Int& rad) {
    return {QuadElem::rational(rad, 1), QuadElem::rational(rad, 0), QuadElem::rational(rad, 0),
            QuadElem::rational(rad, 1)};
}

Mat2K Mat2K::zero(const Int& rad) {
    QuadElem z = QuadElem::rational(rad, 0);
    return {z, z, z, z};
}

Mat2K operator*(const Mat2K& x, const Mat2K& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
}

Mat2K operator-(const Mat2K& x, const Mat2K& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}

GammaElem::GammaElem(Mat2K a, ZMat b) : A(std::move(a)), B(std::move(b)) {
    if (B.rows != 2 || B.cols != 2) throw error("GammaElem: B must be 2x2");
    if (det(B) != 1) throw error("GammaElem: det(B) != 1");
    if (A.det() != QuadElem::rational(A.rad(), 1)) throw error("GammaElem: det(A) != 1");
}

GammaElem GammaElem::inverse() const {
    ZMat Bi(2, 2);
    Bi(0, 0) = B(1, 1);
    Bi(0, 1) = -B(0, 1);
    Bi(1, 0) = -B(1, 0);
    Bi(1, 1) = B(0, 0);
    return GammaElem(A.inverse_det1(), Bi);
}

GammaElem operator*(const GammaElem& x, const GammaElem& y) {
    return GammaElem(x.A * y.A, x.B * y.B);
}

bool in_sl2_module(const Mat2K& A, const QIdeal& a) {
    if (A.det() != QuadElem::rational(A.rad(), 1)) return false;
    Disc D(a.D());
    Int d = a.norm();
    FracIdeal order = FracIdeal::unit_ideal(D);
    FracIdeal upper = FracIdeal::from_ideal(a).conj().scaled(Rat(1, d) * QuadElem::sqrt_rad(a.D()));
    FracIdeal lower = FracIdeal::from_ideal(a).scaled(inv_sqrt(a.D()));
    return order.contains(A.a) && upper.contains(A.b) && lower.contains(A.c) && order.contains(A.d);
}

Mat2K S_matrix(const QOrder& O, const QIdeal& a, const QuadElem& eta1, const QuadElem& eta2) {
    (void)O;
    require_smart(a, eta1, eta2);
    QuadElem z = qrat(a.D(), 0);
    QuadElem s = Rat(1, a.norm()) * (QuadElem::sqrt_rad(a.D()) * eta2 / eta1.conj());
    return {z, s, qrat(a.D(), 1), z};
}

bool in_M_Dd(const Mat2K& X, const QIdeal& a, const QuadElem& eta1, const QuadElem& eta2) {
    require_smart(a, eta1, eta2);
    Disc D(a.D());
    Int d = a.norm();
    QuadElem sd = QuadElem::sqrt_rad(a.D());
    FracIdeal order = FracIdeal::unit_ideal(D);
    FracIdeal ideal = FracIdeal::from_ideal(a);
    FracIdeal i11 = order.scaled(qrat(a.D(), Rat(d)) / eta2);
    FracIdeal i12 = order.scaled(sd / eta1.conj());
    FracIdeal i21 = ideal.scaled(qrat(a.D(), Rat(d)) / (sd * eta2));
    FracIdeal i22 = ideal.scaled(inv(eta1.conj()));
    return i11.contains(X.a) && i12.contains(X.b) && i21.contains(X.c) && i22.contains(X.d);
}

bool in_gamma(const GammaElem& g, const QIdeal& a, const QuadElem& eta1, const QuadElem& eta2) {
    if (!in_sl2_module(g.A, a)) return false;
    Mat2K S = S_matrix(QOrder(Disc(a.D())), a, eta1, eta2);
    QuadElem s = S.b;
    // S B S^-1 = [[b4, s b3], [b2 / s, b1]]
    QuadElem b1 = qrat(a.D(), Rat(g.B(0, 0))), b2 = qrat(a.D(), Rat(g.B(0, 1)));
    QuadElem b3 = qrat(a.D(), Rat(g.B(1, 0))), b4 = qrat(a.D(), Rat(g.B(1, 1)));
    Mat2K sbs{b4, s * b3, b2 / s, b1};
    return in_M_Dd(g.A - sbs, a, eta1, eta2);
}

bool in_gamma_lb_tilde(const Mat2K& A, const QIdeal& a) {
    if (A.det() != QuadElem::rational(A.rad(), 1)) return false;
    Disc D(a.D());
    QuadElem one = qrat(a.D(), 1);
    FracIdeal ideal = FracIdeal::from_ideal(a);
    FracIdeal upper = FracIdeal::unit_ideal(D).scaled(QuadElem::sqrt_rad(a.D()));
    FracIdeal lower = FracIdeal::from_ideal(ideal_mul(a, a)).scaled(inv_sqrt(a.D()));
    return ideal.contains(A.a - one) && upper.contains(A.b) && lower.contains(A.c) &&
           ideal.contains(A.d - one);
}

bool in_gamma_lb(const GammaElem& g, const QIdeal& a) {
    if (!in_gamma_lb_tilde(g.A, a)) return false;
    const Int d = a.norm();
    return mod_floor(g.B(0, 0) - 1, d) == 0 && mod_floor(g.B(0, 1), d) == 0 &&
           mod_floor(g.B(1, 0), d) == 0 && mod_floor(g.B(1, 1) - 1, d) == 0;
}

bool in_gamma_ub(const GammaElem& g, const QIdeal& a) { return in_sl2_module(g.A, a); }

ZMat phi_reduction(const Mat2K& A, const QIdeal& a) {
    if (!a.is_primitive()) throw not_primitive(a.str());
    QOrder O((Disc(a.D())));
    if (int_gcd(a.norm(), O.f) != 1) throw not_coprime_to_conductor();
    const Int d = a.norm();
    QuadElem omega = a.second_gen();
    QuadElem sd = QuadElem::sqrt_rad(a.D());

    auto d1 = decompose_basis(A.a, omega);                                  // a1 = x1 + y1 w
    auto d2 = decompose_basis(A.b / sd, Rat(1, d) * omega.conj());          // a2/sd = x2 + y2 w^s/d
    auto d3 = decompose_basis(A.c * sd, omega);                             // a3 sd = x3' + y3 w
    auto d4 = decompose_basis(A.d, omega);
    if (!d1 || !d2 || !d3 || !d4) throw decomposition_fails();
    // lower left entry is (1/sqrt(D)) (x3 d + y3 w)
    if (!divides(d, d3->first)) throw decomposition_fails("lower-left entry not in the ideal");
    Int x3 = exact_div(d3->first, d);
    Rat trw = omega.trace();
    Rat nw = omega.norm();
    if (trw.get_den() != 1 || nw.get_den() != 1) throw error("phi_reduction: non-integral data");
    Int nw_over_d = exact_div(nw.get_num(), d); // d divides N(omega)

    ZMat m(2, 2);
    m(0, 0) = mod_floor(d1->first, d);
    m(0, 1) = mod_floor(d2->second, d);
    m(1, 0) = mod_floor(x3 * trw.get_num() + d3->second * nw_over_d, d);
    m(1, 1) = mod_floor(d4->first, d);
    if (mod_floor(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) - 1, d) != 0)
        throw decomposition_fails("phi image does not have determinant 1");
    return m;
}

Int sl2_zd_order(const Int& d) {
    if (d < 1) throw error("sl2_zd_order: d must be positive");
    if (d == 1) return 1;
    Int num = d * d * d;
    for (const auto& [p, k] : factorize(d)) {
        (void)k;
        num = exact_div(num, p * p);
        num *= (p * p - 1);
    }
    return num;
}

LinFormMat period_matrix3(const QOrder& O, const QIdeal& a, const QuadElem& eta1,
                          const QuadElem& eta2) {
    require_smart(a, eta1, eta2);
    const Int& D = a.D();
    Int d = a.norm();
    QuadElem isd = inv_sqrt(D);
    ZLinForm z(D);
    LinFormMat pi(3, LinFormRow(6, z));
    pi[0][0] = ZLinForm::constant(eta1);
    pi[0][1] = ZLinForm::constant(eta2);
    pi[0][3] = ZLinForm::variable(isd * eta2.conj(), 1);
    pi[0][4] = ZLinForm::variable(-(isd * eta1.conj()), 1);
    pi[0][5] = ZLinForm::constant(Rat(1, d) * eta2);
    pi[1][0] = ZLinForm::constant(eta1.conj());
    pi[1][1] = ZLinForm::constant(eta2.conj());
    pi[1][3] = ZLinForm::variable(-(isd * eta2), 2);
    pi[1][4] = ZLinForm::variable(isd * eta1, 2);
    pi[1][5] = ZLinForm::constant(Rat(1, d) * eta2.conj());
    pi[2][2] = ZLinForm::constant(qrat(D, 1));
    pi[2][4] = ZLinForm::constant(qrat(D, Rat(1, d)));
    pi[2][5] = ZLinForm::variable(qrat(D, Rat(-1, d)), 3);
    (void)O;
    return pi;
}

LinFormMat period_matrix2(const QOrder& O, const QIdeal& a, const QuadElem& eta1,
                          const QuadElem& eta2) {
    require_smart(a, eta1, eta2);
    const Int& D = a.D();
    Int d = a.norm();
    QuadElem isd = inv_sqrt(D);
    ZLinForm z(D);
    LinFormMat pi(2, LinFormRow(4, z));
    pi[0][0] = ZLinForm::constant(eta1);
    pi[0][1] = ZLinForm::constant(eta2);
    pi[0][2] = ZLinForm::variable(isd * eta2.conj(), 1);
    pi[0][3] = ZLinForm::variable(Rat(-d) * (isd * eta1.conj()), 1);
    pi[1][0] = ZLinForm::constant(eta1.conj());
    pi[1][1] = ZLinForm::constant(eta2.conj());
    pi[1][2] = ZLinForm::variable(-(isd * eta2), 2);
    pi[1][3] = ZLinForm::variable(Rat(d) * (isd * eta1), 2);
    (void)O;
    return pi;
}

QMat M_of(const GammaElem& g, const QIdeal& a, const QuadElem& eta1, const QuadElem& eta2) {
    require_smart(a, eta1, eta2);
    const Int& D = a.D();
    Int d = a.norm();
    const QuadElem &a1 = g.A.a, &a2 = g.A.b, &a3 = g.A.c, &a4 = g.A.d;
    Rat b1(g.B(0, 0)), b2(g.B(0, 1)), b3(g.B(1, 0)), b4(g.B(1, 1));
    QuadElem isd = inv_sqrt(D);
    QuadElem e1 = eta1, e2 = eta2, e1s = eta1.conj(), e2s = eta2.conj();
    QuadElem n1 = qrat(D, eta1.norm()), n2 = qrat(D, eta2.norm());
    Rat invD(1, D);
    invD.canonicalize();
    Rat invd(1, d);

    auto tr = [](const QuadElem& x) { return x.trace(); };
    QMat m(6, 6);
    m(0, 0) = tr(-(e1 * e2s * a4 * isd));
    m(0, 1) = tr(-(n2 * a4 * isd));
    m(0, 3) = -invD * tr(e2s * e2s * a2);
    m(0, 4) = invD * tr(e1s * e2s * a2);
    m(0, 5) = -invd * tr(n2 * a4 * isd);
    m(1, 0) = tr(n1 * a4 * isd);
    m(1, 1) = tr(e1s * e2 * a4 * isd);
    m(1, 2) = b3;
    m(1, 3) = invD * tr(e1s * e2s * a2);
    m(1, 4) = b3 * invd - invD * tr(e1s * e1s * a2);
    m(1, 5) = -b1 * invd + invd * tr(e1s * e2 * a4 * isd);
    m(2, 0) = invd * tr(e1 * e2 * a3);
    m(2, 1) = invd * tr(e2 * e2 * a3);
    m(2, 2) = b4;
    m(2, 3) = invd * tr(n2 * a1 * isd);
    m(2, 4) = b4 * invd - invd * tr(e1s * e2 * a1 * isd);
    m(2, 5) = -b2 * invd + invd * invd * tr(e2 * e2 * a3);
    m(3, 0) = -tr(e1 * e1 * a3);
    m(3, 1) = -tr(e1 * e2 * a3);
    m(3, 3) = tr(-(e1 * e2s * a1 * isd));
    m(3, 4) = tr(n1 * a1 * isd);
    m(3, 5) = -invd * tr(e1 * e2 * a3);
    m(4, 0) = -tr(e1 * e2 * a3);
    m(4, 1) = -tr(e2 * e2 * a3);
    m(4, 3) = tr(-(n2 * a1 * isd));
    m(4, 4) = tr(e1s * e2 * a1 * isd);
    m(4, 5) = -invd * tr(e2 * e2 * a3);
    m(5, 2) = -Rat(d) * b3;
    m(5, 4) = -b3;
    m(5, 5) = b1;
    for (auto& e : m.a) e.canonicalize();
    return m;
}

namespace {

struct MoebiusRow {
    ZLinForm den; // gamma z_i + delta
    ZLinForm num; // alpha z_i + beta
};

// generic identity check: Pi_z * M = diag(den_i) * Pi_z with z_i replaced by
// num_i/den_i, cleared row-wise
bool linform_identity(const LinFormMat& pi, const QMat& M, const std::vector<MoebiusRow>& rows) {
    long r = static_cast<long>(pi.size());
    long c = static_cast<long>(pi[0].size());
    if (M.rows != c || M.cols != c) throw error("linform_identity: shape mismatch");
    const Int& rad = pi[0][0].rad();
    for (long i = 0; i < r; ++i) {
        int var = static_cast<int>(i + 1);
        for (long j = 0; j < c; ++j) {
            ZLinForm lhs(rad);
            for (long k = 0; k < c; ++k)
                if (M(k, j) != 0) lhs = lhs + M(k, j) * pi[i][static_cast<size_t>(k)];
            // entry c0 + c_var z_var: substitute and clear the denominator
            const ZLinForm& e = pi[i][static_cast<size_t>(j)];
            if (!e.pure_in(var)) throw error("period matrix row mixes variables");
            QuadElem c0 = e.c[0];
            QuadElem cv = e.c[static_cast<size_t>(var)];
            ZLinForm rhs = c0 * rows[static_cast<size_t>(i)].den + cv * rows[static_cast<size_t>(i)].num;
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

std::vector<MoebiusRow> moebius_rows3(const GammaElem& g) {
    const Int& rad = g.A.rad();
    auto lin = [&](const QuadElem& hi, const QuadElem& lo, int var) {
        return ZLinForm::variable(hi, var) + ZLinForm::constant(lo);
    };
    QuadElem b1 = qrat(rad, Rat(g.B(0, 0))), b2 = qrat(rad, Rat(g.B(0, 1)));
    QuadElem b3 = qrat(rad, Rat(g.B(1, 0))), b4 = qrat(rad, Rat(g.B(1, 1)));
    return {
        {lin(g.A.c, g.A.d, 1), lin(g.A.a, g.A.b, 1)},
        {lin(g.A.c.conj(), g.A.d.conj(), 2), lin(g.A.a.conj(), g.A.b.conj(), 2)},
        {lin(b3, b4, 3), lin(b1, b2, 3)},
    };
}

} // namespace

bool period_identity_holds(const GammaElem& g, const QMat& M, const QIdeal& a,
                           const QuadElem& eta1, const QuadElem& eta2) {
    LinFormMat pi = period_matrix3(QOrder(Disc(a.D())), a, eta1, eta2);
    return linform_identity(pi, M, moebius_rows3(g));
}

bool verify_period_identity(const GammaElem& g, const QIdeal& a, const QuadElem& eta1,
                            const QuadElem& eta2) {
    if (!in_gamma(g, a, eta1, eta2)) throw not_in_gamma();
    return period_identity_holds(g, M_of(g, a, eta1, eta2), a, eta1, eta2);
}

QMat rational_rep2(const Mat2K& A, const QIdeal& a, const QuadElem& eta1, const QuadElem& eta2) {
    require_smart(a, eta1, eta2);
    const Int& D = a.D();
    Int d = a.norm();
    QuadElem isd = inv_sqrt(D);
    // basis of O_D + (1/sqrt(D)) a
    QuadElem zero = qrat(D, 0);
    std::vector<std::pair<QuadElem, QuadElem>> basis = {
        {eta1, zero},
        {eta2, zero},
        {zero, isd * eta2.conj()},
        {zero, Rat(-d) * (isd * eta1.conj())},
    };
    // F(x, y) = (x a1 - y a2, -x a3 + y a4)
    auto F = [&](const std::pair<QuadElem, QuadElem>& v) {
        return std::pair<QuadElem, QuadElem>{v.first * A.a - v.second * A.b,
                                             -(v.first * A.c) + v.second * A.d};
    };
    // coordinates of (x, y) in the basis: x = c1 eta1 + c2 eta2,
    // y = c3 (isd eta2^s) + c4 (-d isd eta1^s)
    auto coords = [&](const std::pair<QuadElem, QuadElem>& v) {
        QMat m1(2, 2), m2(2, 2);
        m1(0, 0) = eta1.u();
        m1(0, 1) = eta2.u();
        m1(1, 0) = eta1.v();
        m1(1, 1) = eta2.v();
        QuadElem g3 = basis[2].second, g4 = basis[3].second;
        m2(0, 0) = g3.u();
        m2(0, 1) = g4.u();
        m2(1, 0) = g3.v();
        m2(1, 1) = g4.v();
        auto s1 = solve(m1, {v.first.u(), v.first.v()});
        auto s2 = solve(m2, {v.second.u(), v.second.v()});
        if (!s1 || !s2) throw error("rational_rep2: basis solve failed");
        return std::array<Rat, 4>{(*s1)[0], (*s1)[1], (*s2)[0], (*s2)[1]};
    };
    QMat R(4, 4);
    for (long j = 0; j < 4; ++j) {
        auto c = coords(F(basis[static_cast<size_t>(j)]));
        for (long i = 0; i < 4; ++i) R(i, j) = c[static_cast<size_t>(i)];
    }
    return R;
}

bool verify_period_identity2(const Mat2K& A, const QIdeal& a, const QuadElem& eta1,
                             const QuadElem& eta2) {
    QMat R = rational_rep2(A, a, eta1, eta2);
    QMat Rinv = inverse(R);
    LinFormMat pi = period_matrix2(QOrder(Disc(a.D())), a, eta1, eta2);
    auto lin = [&](const QuadElem& hi, const QuadElem& lo, int var) {
        return ZLinForm::variable(hi, var) + ZLinForm::constant(lo);
    };
    std::vector<MoebiusRow> rows = {
        {lin(A.c, A.d, 1), lin(A.a, A.b, 1)},
        {lin(A.c.conj(), A.d.conj(), 2), lin(A.a.conj(), A.b.conj(), 2)},
    };
    return linform_identity(pi, Rinv, rows);
}

bool is_symplectic_module_iso(const Mat2K& M, const QIdeal& a, const QIdeal& b) {
    if (a.norm() != b.norm()) throw norm_mismatch();
    if (M.det() != QuadElem::rational(M.rad(), 1)) return false;
    Disc D(a.D());
    QuadElem sd = QuadElem::sqrt_rad(a.D());
    FracIdeal order = FracIdeal::unit_ideal(D);
    FracIdeal a_inv = ideal_inverse(a);
    FracIdeal i12 = a_inv.scaled(sd);
    FracIdeal i21 = FracIdeal::from_ideal(b).scaled(inv_sqrt(a.D()));
    FracIdeal i22 = FracIdeal::from_ideal(ideal_mul(b, ideal_conj(a))).scaled(qrat(a.D(), Rat(1, a.norm())));
    return order.contains(M.a) && i12.contains(M.b) && i21.contains(M.c) && i22.contains(M.d);
}

Int count_components(const QOrder& O, const Int& d) {
    if (!satisfies_pfc(d, O)) return 0;
    unsigned s = 0;
    for (const auto& [p, k] : factorize(d)) {
        (void)k;
        if (prime_splitting(p, O).tag == SplitTag::Split) ++s;
    }
    return int_pow(2, s);
}

namespace {

Int rnd_small(std::mt19937& rng, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    return Int(dist(rng));
}

QuadElem random_order_elem(std::mt19937& rng, const QOrder& O, int height) {
    return from_order_coords(O.D, Rat(rnd_small(rng, -height, height)),
                             Rat(rnd_small(rng, -height, height)));
}

QuadElem random_ideal_elem(std::mt19937& rng, const QIdeal& I, int height) {
    auto [g1, g2] = I.gens();
    return Rat(rnd_small(rng, -height, height)) * g1 + Rat(rnd_small(rng, -height, height)) * g2;
}

} // namespace

Mat2K random_gamma_lb_tilde(std::mt19937& rng, const QOrder& O, const QIdeal& a, int len) {
    const Int& D = a.D();
    QIdeal a2 = ideal_mul(a, a);
    QuadElem sd = QuadElem::sqrt_rad(D);
    QuadElem isd = inv_sqrt(D);
    Mat2K m = Mat2K::identity(D);
    QuadElem zero = qrat(D, 0), one = qrat(D, 1);
    for (int i = 0; i < len; ++i) {
        if (rnd_small(rng, 0, 1) == 0) {
            QuadElem t = random_order_elem(rng, O, 2);
            m = m * Mat2K{one, sd * t, zero, one};
        } else {
            QuadElem s = random_ideal_elem(rng, a2, 2);
            m = m * Mat2K{one, zero, isd * s, one};
        }
    }
    return m;
}

ZMat random_principal_congruence(std::mt19937& rng, const Int& d, int len) {
    ZMat m = ZMat::identity(2);
    for (int i = 0; i < len; ++i) {
        ZMat e = ZMat::identity(2);
        Int k = rnd_small(rng, -2, 2) * d;
        if (rnd_small(rng, 0, 1) == 0)
            e(0, 1) = k;
        else
            e(1, 0) = k;
        m = m * e;
    }
    return m;
}

GammaElem random_gamma_lb(std::mt19937& rng, const QOrder& O, const QIdeal& a, int len) {
    return GammaElem(random_gamma_lb_tilde(rng, O, a, len),
                     random_principal_congruence(rng, a.norm(), len));
}

Mat2K random_sl2_module(std::mt19937& rng, const QOrder& O, const QIdeal& a, int len) {
    const Int& D = a.D();
    QuadElem sd = QuadElem::sqrt_rad(D);
    QuadElem isd = inv_sqrt(D);
    Mat2K m = Mat2K::identity(D);
    QuadElem zero = qrat(D, 0), one = qrat(D, 1);
    QIdeal ac = ideal_conj(a);
    (void)O;
    for (int i = 0; i < len; ++i) {
        if (rnd_small(rng, 0, 1) == 0) {
            QuadElem beta = Rat(1, a.norm()) * (sd * random_ideal_elem(rng, ac, 2));
            m = m * Mat2K{one, beta, zero, one};
        } else {
            QuadElem gam = isd * random_ideal_elem(rng, a, 2);
            m = m * Mat2K{one, zero, gam, one};
        }
    }
    return m;
}

} // namespace hmv
