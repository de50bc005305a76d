#include "hmv/orders.hpp"

#include <algorithm>

namespace hmv {

namespace {

QuadElem inv_sqrt(const Disc& D) {
    // 1/sqrt(D) = sqrt(D)/D
    Rat v(1, D.D);
    v.canonicalize();
    return QuadElem(D.D, Rat(0), v);
}

Int quad_int_norm(const QuadElem& x) {
    Rat n = x.norm();
    if (n.get_den() != 1) throw error("expected integral norm");
    return n.get_num();
}

} // namespace

QOrder::QOrder(const Disc& d) : D(d), f(1), gamma(QuadElem::gamma(d)) {
    for (Int c = 1; c * c <= abs(D.D); ++c) {
        if (!divides(c * c, D.D)) continue;
        Int q = exact_div(D.D, c * c);
        Int r = mod_floor(q, 4);
        if (r == 0 || r == 1) f = c;
    }
}

std::pair<Rat, Rat> order_coords(const QuadElem& x, const Disc& D) {
    if (x.rad() != D.D) throw discriminant_mismatch("order_coords");
    // x = c1 * 1 + cg * gamma with gamma = D/2 + sqrt(D)/2
    Rat cg = 2 * x.v();
    Rat c1 = x.u() - cg * Rat(D.D, 2);
    c1.canonicalize();
    cg.canonicalize();
    return {c1, cg};
}

QuadElem from_order_coords(const Disc& D, const Rat& c1, const Rat& cg) {
    return QuadElem::rational(D.D, c1) + cg * QuadElem::gamma(D);
}

QIdeal::QIdeal(const Disc& D, Int n, Int a, Int b) : D_(D.D), n_(std::move(n)), a_(std::move(a)), b_(std::move(b)) {
    if (n_ <= 0 || b_ <= 0) throw not_an_ideal("normal form needs n, b > 0");
    a_ = mod_floor(a_, n_);
    if (!divides(b_, a_) || !divides(b_, n_)) throw not_an_ideal("b must divide a and n");
    Int nw = quad_int_norm(second_gen());
    if (!divides(n_ * b_, nw)) throw not_an_ideal("n must divide N(a + b*gamma)/b");
}

QuadElem QIdeal::second_gen() const {
    Disc d(D_);
    return QuadElem::rational(D_, Rat(a_)) + Rat(b_) * QuadElem::gamma(d);
}

std::pair<QuadElem, QuadElem> QIdeal::gens() const {
    return {QuadElem::rational(D_, Rat(n_)), second_gen()};
}

std::string QIdeal::str() const {
    std::string w;
    if (a_ != 0) w = a_.get_str() + " + ";
    if (b_ == 1)
        w += "g";
    else
        w += b_.get_str() + "*g";
    return "<" + n_.get_str() + ", " + w + ">";
}

FracIdeal::FracIdeal(const Disc& D, QLattice lat) : D_(D.D), lat_(std::move(lat)) {
    if (lat_.dim() != 2 || lat_.rank() != 2) throw error("FracIdeal: expected a rank-2 lattice");
}

FracIdeal FracIdeal::from_elements(const Disc& D, const std::vector<QuadElem>& gens) {
    std::vector<std::vector<Rat>> rows;
    for (const auto& g : gens) {
        auto [c1, cg] = order_coords(g, D);
        rows.push_back({c1, cg});
    }
    return FracIdeal(D, QLattice::from_rows(2, rows));
}

FracIdeal FracIdeal::from_ideal(const QIdeal& I) {
    Disc D(I.D());
    auto [g1, g2] = I.gens();
    return from_elements(D, {g1, g2});
}

FracIdeal FracIdeal::unit_ideal(const Disc& D) {
    return from_elements(D, {QuadElem::rational(D.D, 1), QuadElem::gamma(D)});
}

bool FracIdeal::contains(const QuadElem& x) const {
    auto [c1, cg] = order_coords(x, Disc(D_));
    return lat_.contains({c1, cg});
}

std::pair<QuadElem, QuadElem> FracIdeal::gens() const {
    Disc D(D_);
    auto r0 = lat_.basis_row(0);
    auto r1 = lat_.basis_row(1);
    return {from_order_coords(D, r0[0], r0[1]), from_order_coords(D, r1[0], r1[1])};
}

FracIdeal FracIdeal::scaled(const QuadElem& c) const {
    auto [g1, g2] = gens();
    return from_elements(Disc(D_), {c * g1, c * g2});
}

FracIdeal FracIdeal::conj() const {
    auto [g1, g2] = gens();
    return from_elements(Disc(D_), {g1.conj(), g2.conj()});
}

QIdeal ideal_from_generators(const std::vector<QuadElem>& gens, const QOrder& O) {
    bool all_zero = true;
    for (const auto& g : gens)
        if (!g.is_zero()) all_zero = false;
    if (gens.empty() || all_zero) throw zero_ideal();

    // rows in (gamma-coordinate, 1-coordinate) order so the HNF lands
    // directly in the <n, a + b*gamma> shape
    std::vector<QuadElem> all;
    for (const auto& g : gens) {
        all.push_back(g);
        all.push_back(g * O.gamma);
    }
    QMat m(static_cast<long>(all.size()), 2);
    for (size_t i = 0; i < all.size(); ++i) {
        auto [c1, cg] = order_coords(all[i], O.D);
        m(static_cast<long>(i), 0) = cg;
        m(static_cast<long>(i), 1) = c1;
    }
    Int den;
    ZMat z = clear_denominators(m, den);
    if (den != 1) throw not_an_ideal("generators do not span an integral ideal");
    HnfResult h = hnf(z);
    if (h.rank != 2) throw not_an_ideal("module is not of full rank");
    // rows: (b, a) and (0, n)
    return QIdeal(O.D, h.h(1, 1), h.h(0, 1), h.h(0, 0));
}

Int ideal_norm(const QIdeal& I) { return I.norm(); }

bool is_primitive(const QIdeal& I) { return I.is_primitive(); }

bool is_invertible(const QIdeal& I) {
    // <alpha, beta> invertible  <=>  gcd(N(alpha), N(beta), tr(alpha^sig beta)) = norm
    auto [alpha, beta] = I.gens();
    Int na = quad_int_norm(alpha);
    Rat tr = (alpha.conj() * beta).trace();
    if (tr.get_den() != 1) throw error("unexpected non-integral trace");
    Int g = int_gcd(int_gcd(abs(na), abs(quad_int_norm(beta))), abs(tr.get_num()));
    return g == I.norm();
}

QIdeal ideal_conj(const QIdeal& I) {
    QOrder O((Disc(I.D())));
    auto [g1, g2] = I.gens();
    return ideal_from_generators({g1, g2.conj()}, O);
}

QIdeal ideal_mul(const QIdeal& I, const QIdeal& J) {
    if (I.D() != J.D()) throw discriminant_mismatch("ideal_mul");
    QOrder O((Disc(I.D())));
    auto [a1, a2] = I.gens();
    auto [b1, b2] = J.gens();
    return ideal_from_generators({a1 * b1, a1 * b2, a2 * b1, a2 * b2}, O);
}

FracIdeal ideal_inverse(const QIdeal& I) {
    if (!is_invertible(I)) throw not_invertible(I.str());
    Rat s(1, I.norm());
    auto [g1, g2] = I.gens();
    Disc D(I.D());
    return FracIdeal::from_elements(D, {s * g1.conj(), s * g2.conj()});
}

FracIdeal inverse_different(const QIdeal& I) {
    Disc D(I.D());
    QuadElem c = Rat(1, I.norm()) * inv_sqrt(D);
    auto [g1, g2] = I.gens();
    return FracIdeal::from_elements(D, {c * g1.conj(), c * g2.conj()});
}

FracIdeal inverse_different(const QOrder& O) {
    QuadElem c = inv_sqrt(O.D);
    return FracIdeal::from_elements(O.D, {c, c * O.gamma.conj()});
}

SplitType prime_splitting(const Int& p, const QOrder& O) {
    if (p < 2 || !is_prime(p)) throw error("prime_splitting: p must be prime");
    if (divides(p, O.f)) throw conductor_divides("p divides the conductor");
    const Int& D = O.D.D;

    SplitTag tag;
    if (p == 2) {
        if (divides(2, D))
            tag = SplitTag::Ramified;
        else if (mod_floor(D, 8) == 1)
            tag = SplitTag::Split;
        else
            tag = SplitTag::Inert; // D = 5 mod 8
    } else {
        if (divides(p, D))
            tag = SplitTag::Ramified;
        else {
            int leg = mpz_legendre(D.get_mpz_t(), p.get_mpz_t());
            tag = (leg == 1) ? SplitTag::Split : SplitTag::Inert;
        }
    }

    // roots of c^2 + c D + (D^2 - D)/4 = N(c + gamma) modulo p
    std::vector<Int> roots;
    Int n0 = exact_div(D * D - D, 4);
    for (Int c = 0; c < p; ++c)
        if (mod_floor(c * c + c * D + n0, p) == 0) roots.push_back(c);

    SplitType st{tag, std::nullopt, std::nullopt};
    if (tag == SplitTag::Inert) {
        if (!roots.empty()) throw error("splitting inconsistency (inert with roots)");
        return st;
    }
    if (tag == SplitTag::Ramified) {
        if (roots.size() != 1) throw error("splitting inconsistency (ramified)");
        st.prime_ideal = QIdeal(O.D, p, roots[0], 1);
        return st;
    }
    if (roots.size() != 2) throw error("splitting inconsistency (split)");
    st.prime_ideal = QIdeal(O.D, p, roots[0], 1);
    st.conj_prime_ideal = QIdeal(O.D, p, roots[1], 1);
    return st;
}

bool satisfies_pfc(const Int& d, const QOrder& O) {
    if (d < 1) throw error("satisfies_pfc: d must be positive");
    if (int_gcd(d, O.f) != 1) throw not_coprime_to_conductor("gcd(d, conductor) != 1");
    for (const auto& [p, k] : factorize(d)) {
        SplitType st = prime_splitting(p, O);
        if (st.tag == SplitTag::Inert) return false;
        if (st.tag == SplitTag::Ramified && k != 1) return false;
    }
    return true;
}

namespace {

QIdeal ideal_pow(const QIdeal& I, unsigned k) {
    QIdeal r(Disc(I.D()), 1, 0, 1);
    for (unsigned i = 0; i < k; ++i) r = ideal_mul(r, I);
    return r;
}

} // namespace

std::vector<QIdeal> primitive_ideals_of_norm(const Int& d, const QOrder& O) {
    if (!satisfies_pfc(d, O)) return {};
    std::vector<QIdeal> result{QIdeal(O.D, 1, 0, 1)};
    for (const auto& [p, k] : factorize(d)) {
        SplitType st = prime_splitting(p, O);
        std::vector<QIdeal> factors;
        if (st.tag == SplitTag::Ramified)
            factors.push_back(*st.prime_ideal);
        else {
            factors.push_back(ideal_pow(*st.prime_ideal, k));
            factors.push_back(ideal_pow(*st.conj_prime_ideal, k));
        }
        std::vector<QIdeal> next;
        for (const auto& base : result)
            for (const auto& f : factors) next.push_back(ideal_mul(base, f));
        result = std::move(next);
    }
    for (const auto& I : result)
        if (!I.is_primitive() || I.norm() != d) throw error("primitive ideal construction failed");
    return result;
}

std::pair<QuadElem, QuadElem> smart_basis(const QIdeal& I) {
    if (!I.is_primitive()) throw not_primitive(I.str());
    QOrder O((Disc(I.D())));
    if (int_gcd(I.norm(), O.f) != 1) throw wrong_norm("norm not coprime to the conductor");
    const Int& d = I.n();
    Int a0 = mod_floor(-(I.a() + I.D()), d);
    QuadElem eta1 = QuadElem::rational(I.D(), 1);
    QuadElem eta2 = QuadElem::rational(I.D(), Rat(a0)) + QuadElem::gamma(O.D);
    if (!verify_smart_basis(eta1, eta2, I)) throw not_smart_basis("postcondition failed");
    return {eta1, eta2};
}

bool verify_smart_basis(const QuadElem& eta1, const QuadElem& eta2, const QIdeal& I) {
    Disc D(I.D());
    Int d = I.norm();
    // basis of O_D with the orientation fixed by the sign convention
    auto [a1, b1] = order_coords(eta1, D);
    auto [a2, b2] = order_coords(eta2, D);
    if (a1.get_den() != 1 || b1.get_den() != 1 || a2.get_den() != 1 || b2.get_den() != 1)
        return false;
    Rat detA = a1 * b2 - a2 * b1;
    if (abs(detA) != 1) return false;
    // sign convention
    if ((eta1 * eta2.conj()).antiinv() != Rat(-1, 2)) return false;
    // (eta2^sigma, d eta1^sigma) must be a Z-basis of I
    FracIdeal FI = FracIdeal::from_ideal(I);
    QuadElem m1 = eta2.conj(), m2 = Rat(d) * eta1.conj();
    auto coords_of = [&](const QuadElem& x) {
        auto [c1, cg] = order_coords(x, D);
        return FI.lattice().coords({c1, cg});
    };
    auto c1 = coords_of(m1);
    auto c2 = coords_of(m2);
    if (!c1 || !c2) return false;
    Int dt = (*c1)[0] * (*c2)[1] - (*c1)[1] * (*c2)[0];
    if (abs(dt) != 1) return false;
    // symplectic Gram of the induced basis of O_D + (1/sqrt(D)) I
    QuadElem zero = QuadElem::rational(I.D(), 0);
    QuadElem isq = inv_sqrt(D);
    std::vector<std::pair<QuadElem, QuadElem>> basis = {
        {eta1, zero},
        {eta2, zero},
        {zero, isq * eta2.conj()},
        {zero, Rat(-d) * (isq * eta1.conj())},
    };
    QMat gram(4, 4);
    for (long i = 0; i < 4; ++i)
        for (long j = 0; j < 4; ++j)
            gram(i, j) = trace_pairing(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)]);
    QMat expected(4, 4);
    expected(0, 2) = 1;
    expected(1, 3) = Rat(d);
    expected(2, 0) = -1;
    expected(3, 1) = Rat(-d);
    return gram == expected;
}

Rat trace_pairing(const std::pair<QuadElem, QuadElem>& v, const std::pair<QuadElem, QuadElem>& w) {
    return (w.first * v.second - v.first * w.second).trace();
}

std::pair<Int, Int> pairing_type(const QIdeal& I, const QOrder& O, PairingSide side) {
    QuadElem zero = QuadElem::rational(I.D(), 0);
    QuadElem isq = inv_sqrt(O.D);
    auto [g1, g2] = I.gens();
    std::vector<std::pair<QuadElem, QuadElem>> basis;
    if (side == PairingSide::IdealPlusDual) {
        // a + O_D^vee
        basis = {{g1, zero}, {g2, zero}, {zero, isq}, {zero, isq * O.gamma.conj()}};
    } else {
        // O_D + (1/sqrt(D)) a
        basis = {{QuadElem::rational(I.D(), 1), zero},
                 {O.gamma, zero},
                 {zero, isq * g1},
                 {zero, isq * g2}};
    }
    QMat gram(4, 4);
    for (long i = 0; i < 4; ++i)
        for (long j = 0; j < 4; ++j)
            gram(i, j) = trace_pairing(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)]);
    if (!gram.is_integral()) throw error("pairing_type: non-integral Gram matrix");
    SnfResult r = snf(gram.to_z());
    if (r.rank != 4) throw degenerate_form("pairing_type: degenerate pairing");
    if (r.invariants[0] != r.invariants[1] || r.invariants[2] != r.invariants[3])
        throw error("pairing_type: invariants do not pair up");
    return {r.invariants[0], r.invariants[2]};
}

} // namespace hmv
