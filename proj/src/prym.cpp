#include "hmv/prym.hpp"

namespace hmv {

MuElem operator+(const MuElem& a, const MuElem& b) { return {a.alpha + b.alpha, a.beta + b.beta}; }

MuElem operator-(const MuElem& a, const MuElem& b) { return {a.alpha - b.alpha, a.beta - b.beta}; }

MuElem operator*(const MuElem& a, const MuElem& b) {
    QuadElem mu2 = a.mu_squared();
    return {a.alpha * b.alpha + a.beta * b.beta * mu2, a.alpha * b.beta + a.beta * b.alpha};
}

MuElem operator*(const QuadElem& c, const MuElem& a) { return {c * a.alpha, c * a.beta}; }

PrymInstance::PrymInstance(long n_, int sign_) : n(n_), m(2 * n_ + 1), D(4 * (2 * n_ + 1)), sign(sign_) {
    if (n < 1) throw error("PrymInstance: n must be positive");
    if (is_square(m)) throw square_discriminant("2n+1 = " + m.get_str() + " is a square");
    if (sign != 1 && sign != -1) throw error("PrymInstance: sign must be +-1");
}

ZMat an_matrix(long n) {
    ZMat a(6, 6);
    a(0, 4) = 1;
    a(0, 5) = 1;
    a(1, 4) = n;
    a(2, 3) = 1;
    a(2, 4) = 1;
    a(3, 2) = n;
    a(4, 0) = 1;
    a(4, 1) = 1;
    a(4, 2) = 1;
    a(5, 0) = n;
    return a;
}

namespace {

// exact characteristic polynomial coefficients (degree 6, monic) by
// interpolation at the integers 0..6
std::vector<Rat> char_poly_coeffs(const ZMat& a) {
    long n = a.rows;
    std::vector<Rat> values;
    for (long x = 0; x <= n; ++x) {
        QMat m(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) m(i, j) = Rat((i == j ? Int(x) : Int(0)) - a(i, j));
        values.push_back(det(m));
    }
    QMat vand(n + 1, n + 1);
    for (long i = 0; i <= n; ++i) {
        Rat p(1);
        for (long j = 0; j <= n; ++j) {
            vand(i, j) = p;
            p *= Rat(i);
        }
    }
    auto sol = solve(vand, values);
    if (!sol) throw error("char_poly interpolation failed");
    return *sol; // coefficient of x^j at index j
}

} // namespace

bool char_poly_check(long n) {
    auto c = char_poly_coeffs(an_matrix(n));
    Int N(n);
    // (x^2 - n)(x^4 - 2(n+1) x^2 + n^2)
    std::vector<Rat> expect = {Rat(-N * N * N), Rat(0), Rat(3 * N * N + 2 * N), Rat(0),
                               Rat(-(3 * N + 2)),  Rat(0), Rat(1)};
    return c == expect;
}

bool eigen_checks(long n) {
    PrymInstance inst(n, 1);
    const Int& m = inst.m;
    QuadElem s = QuadElem::sqrt_rad(m);
    QuadElem one = QuadElem::rational(m, 1);
    QuadElem mu2 = QuadElem(m, Rat(n + 1), Rat(1));
    // (1 + sqrt(2n+1))^2 = 2 mu^2
    if ((one + s) * (one + s) != Rat(2) * mu2) return false;

    // h over the mu-tower, using sqrt(2) = (1 + sqrt(2n+1)) / mu
    QuadElem zero = QuadElem::rational(m, 0);
    MuElem mu_over_n{zero, QuadElem::rational(m, Rat(1, n))};
    MuElem sqrt2{zero, (one + s) / mu2}; // (1+s) mu / mu^2
    MuElem h4{one, zero};
    MuElem sqrt2_mu_over_n{Rat(1, n) * (one + s), zero}; // sqrt(2) mu = 1 + s
    std::vector<MuElem> h = {mu_over_n, sqrt2, mu_over_n, h4, sqrt2_mu_over_n, h4};

    ZMat a = an_matrix(n);
    MuElem mu = MuElem::mu(m);
    for (long i = 0; i < 6; ++i) {
        MuElem lhs = MuElem::zero(m);
        for (long j = 0; j < 6; ++j)
            if (a(i, j) != 0) lhs = lhs + QuadElem::rational(m, Rat(a(i, j))) * h[static_cast<size_t>(j)];
        if (lhs != mu * h[static_cast<size_t>(i)]) return false;
    }
    return true;
}

namespace {

struct MuMat2 {
    MuElem a, b, c, d;
};

MuMat2 mul(const MuMat2& x, const MuMat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
}

MuMat2 mat_pow(const MuMat2& base, const MuMat2& base_inv, const MuMat2& id, Int e) {
    MuMat2 b = base;
    if (e < 0) {
        b = base_inv;
        e = -e;
    }
    MuMat2 r = id;
    while (e > 0) {
        if (mod_floor(e, 2) == 1) r = mul(r, b);
        b = mul(b, b);
        e = fdiv(e, 2);
    }
    return r;
}

} // namespace

QuadElem dehn_trace(long n, const Int& k, const Int& l) {
    PrymInstance inst(n, 1);
    const Int& m = inst.m;
    QuadElem zero = QuadElem::rational(m, 0);
    QuadElem one = QuadElem::rational(m, 1);
    MuElem z = MuElem::zero(m), o{one, zero}, mu = MuElem::mu(m);
    MuMat2 id{o, z, z, o};
    MuMat2 ah{o, mu, z, o}, ah_inv{o, MuElem{zero, QuadElem::rational(m, -1)}, z, o};
    MuMat2 av{o, z, MuElem{zero, QuadElem::rational(m, -1)}, o}, av_inv{o, z, mu, o};
    MuMat2 p = mul(mat_pow(ah, ah_inv, id, k), mat_pow(av, av_inv, id, l));
    MuElem tr = p.a + p.d;
    QuadElem mu2 = QuadElem(m, Rat(n + 1), Rat(1));
    QuadElem expect = QuadElem::rational(m, 2) - Rat(k * l) * mu2;
    if (tr.beta != zero || tr.alpha != expect) throw error("dehn trace mismatch");
    return expect;
}

bool is_hyperbolic(long n, const Int& k, const Int& l, unsigned precision_bits) {
    if (k * l == 0) return false; // trace exactly 2
    QuadElem tr = dehn_trace(n, k, l);
    for (unsigned bits = precision_bits;; bits *= 2) {
        RatInterval root = sqrt_interval(tr.rad(), bits);
        RatInterval val = RatInterval::point(tr.u()) + scale(tr.v(), root);
        RatInterval a = iabs(val);
        if (a.strictly_above(Rat(2))) return true;
        if (a.strictly_below(Rat(2))) return false;
        if (bits > 16 * precision_bits + 4096) throw error("is_hyperbolic: cannot separate from 2");
    }
}

PrymData prym_data(long n, int sign) {
    PrymInstance inst(n, sign);
    const Int& m = inst.m;
    const Int& D = inst.D;
    QuadElem s = QuadElem::sqrt_rad(m);
    QuadElem res13 = Rat(1, 2) * (QuadElem::rational(m, 1) + s);
    std::array<QuadElem, 3> residues = {res13, QuadElem::rational(m, 1), res13};
    // sqrt(2n+1) = sqrt(D)/2 inside F
    Rat v = Rat(sign) * Rat(1, 4);
    QuadElem x1(D, Rat(1, 2), v);
    std::array<PCElem, 3> weights = {PCElem(x1, Rat(1)), PCElem(QuadElem::rational(D, 1), Rat(0)),
                                     PCElem(x1, Rat(-1))};
    return PrymData{inst, residues, weights};
}

PrymReport prym_pipeline(long n, int sign) {
    PrymData data = prym_data(n, sign);
    const Int& m = data.inst.m;
    PrymReport rep{data.inst, {}, {Int(0), Int(0), Int(0)}, ""};
    auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
        rep.checks.push_back({name, pass, detail});
    };

    add("char_poly", char_poly_check(n));
    add("eigenvector", eigen_checks(n));

    std::vector<QVec3> images;
    for (const auto& w : data.weights) images.push_back(q_map(w));
    Rat sgn(sign);
    QVec3 q1{{Rat(2 * n * m), Rat(1), sgn * Rat(2 * m)}};
    QVec3 q2{{Rat(-4 * m), Rat(0), Rat(0)}};
    QVec3 q3{{Rat(2 * n * m), Rat(-1), -sgn * Rat(2 * m)}};
    add("q_images", images[0] == q1 && images[1] == q2 && images[2] == q3);

    QVec3 combo{{Rat(0), Rat(0), Rat(0)}};
    for (int c = 0; c < 3; ++c)
        combo.v[static_cast<size_t>(c)] = images[0].v[static_cast<size_t>(c)] +
                                          Rat(n) * images[1].v[static_cast<size_t>(c)] +
                                          images[2].v[static_cast<size_t>(c)];
    add("convex_identity", combo.is_zero(), "Q(r1) + n Q(r2) + Q(r3)");

    Weighting weighting(StratumKind::Trinodal, data.weights);
    add("admissible", is_admissible(weighting));

    bool interior = true;
    for (size_t drop = 0; drop < 3; ++drop) {
        std::vector<QVec3> sub;
        for (size_t i = 0; i < 3; ++i)
            if (i != drop) sub.push_back(images[i]);
        if (admissibility_certificate(sub).admissible) interior = false;
    }
    add("interiority", interior, "every weight is needed");

    auto s = dual_basis(data.weights);
    const Int& D = data.inst.D;
    Rat vv = Rat(sign) * Rat(1, 4 * m);
    PCElem s1_expect(QuadElem(D, Rat(0), vv), Rat(1, 2));
    PCElem s2_expect(QuadElem(D, Rat(1, 2), -vv), Rat(0));
    PCElem s3_expect(QuadElem(D, Rat(0), vv), Rat(-1, 2));
    add("dual_basis", s[0] == s1_expect && s[1] == s2_expect && s[2] == s3_expect);

    auto kern = exponent_lattice(s);
    bool kern_ok = kern.size() == 1 && kern[0] == std::array<Int, 3>{Int(1), Int(0), Int(-1)};
    add("exponent_lattice", kern_ok, "Z (1, 0, -1)");

    if (kern_ok) {
        // orient the single relation as p12 / p23
        rep.equation_exponents = {Int(-1), Int(0), Int(1)};
        rep.equation = "p12/p23 = e(-(b12-b23))";
        add("equation", true, rep.equation);
    } else {
        add("equation", false, "unexpected exponent lattice");
    }
    return rep;
}

} // namespace hmv
