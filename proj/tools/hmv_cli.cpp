// command line front end: exact computations with real quadratic orders,
// Hilbert modular groups and weighted boundary strata
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <sstream>

#include "hmv/boundary.hpp"
#include "hmv/interval.hpp"
#include "hmv/io.hpp"
#include "hmv/lattices.hpp"
#include "hmv/modvariety.hpp"
#include "hmv/orders.hpp"
#include "hmv/prym.hpp"
#include "hmv/pseudocubic.hpp"

using json = nlohmann::ordered_json;
using namespace hmv;

namespace {

constexpr int EXIT_TRUE = 0;

int rnd(std::mt19937& rng, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng);
}

Rat rnd_rat_cli(std::mt19937& rng) {
    Rat q(rnd(rng, -8, 8), rnd(rng, 1, 2));
    q.canonicalize();
    return q;
}

constexpr int EXIT_FALSE = 1;
constexpr int EXIT_USAGE = 2;
constexpr int EXIT_DOMAIN = 3;

json ideal_json(const QIdeal& I) {
    return json{{"n", I.n().get_str()},
                {"a", I.a().get_str()},
                {"b", I.b().get_str()},
                {"norm", I.norm().get_str()},
                {"primitive", is_primitive(I)},
                {"invertible", is_invertible(I)},
                {"text", I.str()}};
}

json qvec_json(const QVec3& v) {
    return json::array({rat_str(v.v[0]), rat_str(v.v[1]), rat_str(v.v[2])});
}

json qmat_json(const QMat& m) {
    json rows = json::array();
    for (long i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (long j = 0; j < m.cols; ++j) row.push_back(rat_str(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json eq_json(const CrossRatioEq& e) {
    return json{{"exponents", json::array({e.exponents[0].get_str(), e.exponents[1].get_str(),
                                           e.exponents[2].get_str()})},
                {"phase_num", e.phase.get_num().get_str()},
                {"phase_den", e.phase.get_den().get_str()},
                {"text", e.str()}};
}

std::string quad_mat_str(const Mat2K& m) {
    return "[[" + m.a.str() + ", " + m.b.str() + "], [" + m.c.str() + ", " + m.d.str() + "]]";
}

struct CmdContext {
    bool json_mode = false;
    std::ostream* out = &std::cout;
};

GammaElem parse_pair_arg(const std::string& arg, const Int& D) {
    auto halves = split_top_level(arg, ';');
    if (halves.size() != 2) throw parse_error("--pair/--check expects \"A;B\" with 4+4 entries");
    return GammaElem(parse_mat2k(halves[0], D), parse_zmat2(halves[1]));
}

std::array<PCElem, 3> parse_weights_arg(const std::string& arg, const Int& D) {
    auto parts = split_top_level(arg, ',');
    if (parts.size() != 3) throw parse_error("--weights expects three elements \"(x;q),(x;q),(x;q)\"");
    return {parse_pc(parts[0], D), parse_pc(parts[1], D), parse_pc(parts[2], D)};
}

QMat parse_bmat_arg(const std::string& arg) {
    auto parts = split_top_level(arg, ',');
    QMat b(3, 3);
    if (parts.size() == 9) {
        for (int i = 0; i < 9; ++i) b(i / 3, i % 3) = parse_rat(parts[static_cast<size_t>(i)]);
    } else if (parts.size() == 6) {
        // upper triangle b11,b12,b13,b22,b23,b33
        int idx = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) b(i, j) = b(j, i) = parse_rat(parts[static_cast<size_t>(idx++)]);
    } else {
        throw parse_error("--h expects 9 entries (row-major) or 6 (upper triangle)");
    }
    return b;
}

// ---- subcommand implementations ------------------------------------------

int cmd_ideal(const CmdContext& ctx, const Int& D, const std::string& norm_arg,
              const std::string& gens_arg, const std::string& invert_arg,
              const std::string& mul_arg) {
    Disc disc(D);
    QOrder O(disc);
    json out{{"D", D.get_str()}, {"conductor", O.f.get_str()}};
    std::ostringstream text;
    int rc = EXIT_TRUE;

    if (!norm_arg.empty()) {
        Int d(norm_arg);
        auto ideals = primitive_ideals_of_norm(d, O);
        out["pfc"] = satisfies_pfc(d, O);
        out["ideals"] = json::array();
        for (const auto& I : ideals) out["ideals"].push_back(ideal_json(I));
        text << "primitive ideals of norm " << d.get_str() << " in O_" << D.get_str() << ": "
             << ideals.size() << "\n";
        for (const auto& I : ideals) text << "  " << I.str() << "\n";
        if (ideals.empty()) rc = EXIT_FALSE;
    } else if (!gens_arg.empty()) {
        std::vector<QuadElem> gens;
        for (const auto& g : split_top_level(gens_arg, ',')) gens.push_back(parse_quad(g, D));
        QIdeal I = ideal_from_generators(gens, O);
        out["ideal"] = ideal_json(I);
        text << I.str() << "  norm " << I.norm().get_str() << (is_invertible(I) ? "" : "  (not invertible)")
             << "\n";
    } else if (!invert_arg.empty()) {
        QIdeal I = parse_ideal(invert_arg, disc);
        FracIdeal inv = ideal_inverse(I);
        auto [g1, g2] = inv.gens();
        out["ideal"] = ideal_json(I);
        out["inverse_gens"] = json::array({g1.str(), g2.str()});
        text << I.str() << "^-1 = <" << g1.str() << ", " << g2.str() << ">_Z\n";
    } else if (!mul_arg.empty()) {
        auto halves = split_top_level(mul_arg, ';');
        if (halves.size() != 2) throw parse_error("--mul expects \"<I>;<J>\"");
        QIdeal I = parse_ideal(halves[0], disc), J = parse_ideal(halves[1], disc);
        QIdeal P = ideal_mul(I, J);
        out["product"] = ideal_json(P);
        text << I.str() << " * " << J.str() << " = " << P.str() << "\n";
    } else {
        throw parse_error("ideal: one of --norm/--gens/--invert/--mul is required");
    }
    if (ctx.json_mode)
        *ctx.out << out.dump() << "\n";
    else
        *ctx.out << text.str();
    return rc;
}

int cmd_classify(const CmdContext& ctx, const Int& D, const Int& d) {
    Disc disc(D);
    QOrder O(disc);
    bool pfc = satisfies_pfc(d, O);
    auto ideals = primitive_ideals_of_norm(d, O);
    json out{{"D", D.get_str()},
             {"d", d.get_str()},
             {"pfc", pfc},
             {"components", count_components(O, d).get_str()},
             {"ideals", json::array()}};
    std::ostringstream text;
    text << "D = " << D.get_str() << ", d = " << d.get_str() << ": pfc "
         << (pfc ? "holds" : "fails") << ", " << ideals.size() << " component(s)\n";
    for (const auto& I : ideals) {
        auto [e1, e2] = smart_basis(I);
        json j = ideal_json(I);
        j["eta1"] = e1.str();
        j["eta2"] = e2.str();
        out["ideals"].push_back(j);
        text << "  " << I.str() << "  smart basis eta1 = " << e1.str()
             << ", eta2 = " << e2.str() << "\n";
    }
    if (ctx.json_mode)
        *ctx.out << out.dump() << "\n";
    else
        *ctx.out << text.str();
    return pfc ? EXIT_TRUE : EXIT_FALSE;
}

QIdeal pick_ideal(const QOrder& O, const Int& d, const std::string& ideal_arg) {
    if (!ideal_arg.empty()) return parse_ideal(ideal_arg, O.D);
    auto ideals = primitive_ideals_of_norm(d, O);
    if (ideals.empty()) throw not_an_ideal("no primitive ideal of norm " + d.get_str());
    return ideals.front();
}

int cmd_group(const CmdContext& ctx, const Int& D, const Int& d, const std::string& check_arg,
              const std::string& ideal_arg) {
    Disc disc(D);
    QOrder O(disc);
    QIdeal a = pick_ideal(O, d, ideal_arg);
    auto [e1, e2] = smart_basis(a);
    GammaElem g = parse_pair_arg(check_arg, D);
    bool lb = in_gamma_lb(g, a);
    bool mid = in_gamma(g, a, e1, e2);
    bool ub = in_gamma_ub(g, a);
    json out{{"D", D.get_str()}, {"d", d.get_str()}, {"ideal", a.str()},
             {"in_gamma_lb", lb},  {"in_gamma", mid},  {"in_gamma_ub", ub}};
    std::ostringstream text;
    text << "ideal " << a.str() << "\n"
         << "A = " << quad_mat_str(g.A) << "\n"
         << "in Gamma_lb: " << (lb ? "yes" : "no") << "\n"
         << "in Gamma_{D,d}(eta1,eta2): " << (mid ? "yes" : "no") << "\n"
         << "in Gamma_ub: " << (ub ? "yes" : "no") << "\n";
    if (ub) {
        ZMat phi = phi_reduction(g.A, a);
        out["phi"] = json::array({phi(0, 0).get_str(), phi(0, 1).get_str(), phi(1, 0).get_str(),
                                  phi(1, 1).get_str()});
        text << "phi(A) mod " << d.get_str() << " = [[" << phi(0, 0).get_str() << ", "
             << phi(0, 1).get_str() << "], [" << phi(1, 0).get_str() << ", "
             << phi(1, 1).get_str() << "]]\n";
    }
    if (ctx.json_mode)
        *ctx.out << out.dump() << "\n";
    else
        *ctx.out << text.str();
    return mid ? EXIT_TRUE : EXIT_FALSE;
}

int cmd_cocycle(const CmdContext& ctx, const Int& D, const Int& d, const std::string& pair_arg,
                const std::string& ideal_arg, bool verify_period) {
    Disc disc(D);
    QOrder O(disc);
    QIdeal a = pick_ideal(O, d, ideal_arg);
    auto [e1, e2] = smart_basis(a);
    GammaElem g = parse_pair_arg(pair_arg, D);
    QMat m = M_of(g, a, e1, e2);
    bool integral = m.is_integral();
    bool member = in_gamma(g, a, e1, e2);
    // twisted cocycle on (g, g) and against the inverse
    GammaElem gg(g.A * g.A, g.B * g.B);
    QMat mi = M_of(g.inverse(), a, e1, e2);
    bool cocycle_ok = (m * m == M_of(gg, a, e1, e2)) && (mi * m == QMat::identity(6));

    json out{{"D", D.get_str()},     {"d", d.get_str()},       {"ideal", a.str()},
             {"M", qmat_json(m)},    {"integral", integral},   {"in_gamma", member},
             {"cocycle", cocycle_ok}};
    std::ostringstream text;
    text << "ideal " << a.str() << "\nM(A,B) =\n";
    for (long i = 0; i < 6; ++i) {
        text << "  [";
        for (long j = 0; j < 6; ++j) text << (j ? ", " : "") << rat_str(m(i, j));
        text << "]\n";
    }
    text << "integral: " << (integral ? "yes" : "no") << "\n"
         << "in Gamma: " << (member ? "yes" : "no") << "\n"
         << "cocycle identity: " << (cocycle_ok ? "holds" : "fails") << "\n";
    bool ok = cocycle_ok && (!member || integral);
    if (verify_period) {
        bool period = member && verify_period_identity(g, a, e1, e2);
        out["period_identity"] = period;
        text << "period identity: " << (period ? "holds" : (member ? "fails" : "not in Gamma"))
             << "\n";
        ok = ok && (!member || period);
    }
    if (ctx.json_mode)
        *ctx.out << out.dump() << "\n";
    else
        *ctx.out << text.str();
    return ok ? EXIT_TRUE : EXIT_FALSE;
}

int cmd_admissible(const CmdContext& ctx, const Int& D, const std::string& weights_arg) {
    auto weights = parse_weights_arg(weights_arg, D);
    Weighting w(StratumKind::Trinodal, weights);
    AdmissibilityCert cert = admissibility_certificate(w);
    json out{{"D", D.get_str()}, {"admissible", cert.admissible}, {"q_images", json::array()}};
    std::ostringstream text;
    for (const auto& r : weights) {
        out["q_images"].push_back(qvec_json(q_map(r)));
        QVec3 q = q_map(r);
        text << "Q" << r.str() << " = (" << rat_str(q.v[0]) << ", " << rat_str(q.v[1]) << ", "
             << rat_str(q.v[2]) << ")\n";
    }
    text << "admissible: " << (cert.admissible ? "yes" : "no") << "\n";
    if (cert.admissible) {
        json combo = json::array();
        text << "interior combination:";
        for (const auto& c : cert.interior_combination) {
            combo.push_back(rat_str(c));
            text << " " << rat_str(c);
        }
        out["interior_combination"] = combo;
        text << "\n";
    } else if (cert.separating_functional) {
        out["separating_functional"] = qvec_json(*cert.separating_functional);
        text << "separating functional: (" << rat_str(cert.separating_functional->v[0]) << ", "
             << rat_str(cert.separating_functional->v[1]) << ", "
             << rat_str(cert.separating_functional->v[2]) << ")\n";
    }
    if (ctx.json_mode)
        *ctx.out << out.dump() << "\n";
    else
        *ctx.out << text.str();
    return cert.admissible ? EXIT_TRUE : EXIT_FALSE;
}

int cmd_crossratio(const CmdContext& ctx, const Int& D, const std::string& weights_arg,
                   const std::string& h_arg, const std::string& stratum_arg,
                   const std::string& point_arg, const std::string& mode_arg,
                   unsigned precision) {
    auto weights = parse_weights_arg(weights_arg, D);
    StratumKind kind =
        (stratum_arg == "nontrinodal") ? StratumKind::NiceNonTrinodal : StratumKind::Trinodal;
    Weighting w(kind, weights);
    QMat b = h_arg.empty() ? QMat(3, 3) : parse_bmat_arg(h_arg);
    std::vector<CrossRatioEq> eqs = (kind == StratumKind::Trinodal)
                                        ? cross_ratio_equations(w, b)
                                        : nontrinodal_equations(w, b);
    json out{{"D", D.get_str()},
             {"stratum", kind == StratumKind::Trinodal ? "trinodal" : "nontrinodal"},
             {"equations", json::array()}};
    std::ostringstream text;
    text << "rank " << eqs.size() << " exponent lattice\n";
    for (const auto& e : eqs) {
        out["equations"].push_back(eq_json(e));
        text << "  " << e.str() << "\n";
    }
    int rc = EXIT_TRUE;
    if (!point_arg.empty()) {
        auto parts = split_top_level(point_arg, ',');
        CheckMode mode = (mode_arg == "numeric") ? CheckMode::Numeric : CheckMode::Exact;
        bool holds;
        if (kind == StratumKind::Trinodal) {
            if (parts.size() != 6) throw parse_error("--point expects 6 points for trinodal");
            std::array<ProjPoint, 6> pts;
            for (int i = 0; i < 6; ++i) pts[static_cast<size_t>(i)] = parse_proj_point(parts[static_cast<size_t>(i)]);
            holds = satisfies_sh(pts, eqs, mode, precision);
        } else {
            if (parts.size() != 8) throw parse_error("--point expects 8 points for nontrinodal");
            std::array<ProjPoint, 8> pts;
            for (int i = 0; i < 8; ++i) pts[static_cast<size_t>(i)] = parse_proj_point(parts[static_cast<size_t>(i)]);
            holds = satisfies_sh_nontrinodal(pts, eqs, mode, precision);
        }
        out["point_satisfies"] = holds;
        text << "point satisfies the equations: " << (holds ? "yes" : "no") << "\n";
        if (mode == CheckMode::Numeric && kind == StratumKind::Trinodal) {
            std::array<ProjPoint, 6> pts;
            for (int i = 0; i < 6; ++i) pts[static_cast<size_t>(i)] = parse_proj_point(parts[static_cast<size_t>(i)]);
            json dists = json::array();
            for (const RatInterval& d2 : sh_distances(pts, eqs, precision)) {
                RatInterval dy = to_dyadic(d2, precision + 8);
                dists.push_back(json::array({rat_str(dy.lo), rat_str(dy.hi)}));
            }
            out["distance2_intervals"] = dists;
        }
        rc = holds ? EXIT_TRUE : EXIT_FALSE;
    }
    if (ctx.json_mode)
        *ctx.out << out.dump() << "\n";
    else
        *ctx.out << text.str();
    return rc;
}

int cmd_prym(const CmdContext& ctx, long n, const std::string& sign_arg) {
    int sign = (sign_arg == "-") ? -1 : 1;
    PrymReport rep = prym_pipeline(n, sign);
    json out{{"n", n},
             {"sign", sign > 0 ? "+" : "-"},
             {"D", rep.inst.D.get_str()},
             {"checks", json::array()},
             {"equation", rep.equation},
             {"all_pass", rep.all_pass()}};
    std::ostringstream text;
    text << "T_" << n << " (sign " << (sign > 0 ? "+" : "-") << "), D = " << rep.inst.D.get_str()
         << "\n";
    for (const auto& c : rep.checks) {
        out["checks"].push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        text << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) text << "  (" << c.detail << ")";
        text << "\n";
    }
    text << rep.equation << "\n";
    if (ctx.json_mode)
        *ctx.out << out.dump() << "\n";
    else
        *ctx.out << text.str();
    return rep.all_pass() ? EXIT_TRUE : EXIT_FALSE;
}

// ---- verify suites --------------------------------------------------------

struct SuiteResult {
    std::vector<std::pair<std::string, bool>> props;
    bool all() const {
        for (const auto& [n, p] : props)
            if (!p) return false;
        return true;
    }
};

SuiteResult suite_ideals(std::mt19937& rng) {
    SuiteResult r;
    bool mul_conj = true, norm_mult = true;
    for (int t = 0; t < 120; ++t) {
        Int D = 4 * (rnd(rng, -20, 20));
        Int rem = rnd(rng, 0, 1);
        D += rem; // 0 or 1 mod 4
        if (D == 0 || is_square(D)) continue;
        Disc disc(D);
        QOrder O(disc);
        Int n(rnd(rng, 1, 12)), a(rnd(rng, 0, 11)), b(1);
        QIdeal I(disc, 1, 0, 1);
        try {
            I = QIdeal(disc, n, a, b);
        } catch (const not_an_ideal&) {
            continue;
        }
        if (!is_invertible(I)) continue;
        QIdeal p = ideal_mul(I, ideal_conj(I));
        QIdeal expect = ideal_from_generators({QuadElem::rational(D, Rat(I.norm()))}, O);
        if (p != expect) mul_conj = false;
        QIdeal J(disc, 1, 0, 1);
        if (ideal_mul(I, J).norm() != I.norm()) norm_mult = false;
    }
    r.props.emplace_back("ideal times conjugate is the norm ideal", mul_conj);
    r.props.emplace_back("norm multiplicative with invertible factor", norm_mult);
    return r;
}

SuiteResult suite_classify(std::mt19937& rng) {
    (void)rng;
    SuiteResult r;
    bool count_ok = true, smart_ok = true;
    for (Int D : {Int(5), Int(8), Int(12), Int(13), Int(17), Int(21), Int(24), Int(28), Int(29),
                  Int(33)}) {
        QOrder O((Disc(D)));
        for (Int d = 1; d <= 30; ++d) {
            if (int_gcd(d, O.f) != 1) continue;
            auto ideals = primitive_ideals_of_norm(d, O);
            bool pfc = satisfies_pfc(d, O);
            if (pfc != !ideals.empty()) count_ok = false;
            if (Int(ideals.size()) != count_components(O, d) && pfc) count_ok = false;
            for (const auto& I : ideals) {
                auto [e1, e2] = smart_basis(I);
                if (!verify_smart_basis(e1, e2, I)) smart_ok = false;
            }
        }
    }
    r.props.emplace_back("pfc iff nonempty, count 2^s", count_ok);
    r.props.emplace_back("smart basis postconditions", smart_ok);
    return r;
}

SuiteResult suite_gamma(std::mt19937& rng) {
    SuiteResult r;
    bool membership = true, integral = true, cocycle = true, period = true, witness = true;
    for (auto [D, d] : std::vector<std::pair<Int, Int>>{{Int(5), Int(11)}, {Int(8), Int(7)},
                                                        {Int(13), Int(3)}}) {
        QOrder O((Disc(D)));
        QIdeal a = primitive_ideals_of_norm(d, O).front();
        auto [e1, e2] = smart_basis(a);
        for (int t = 0; t < 25; ++t) {
            GammaElem g = random_gamma_lb(rng, O, a, 5);
            if (!in_gamma(g, a, e1, e2)) membership = false;
            QMat m = M_of(g, a, e1, e2);
            if (!m.is_integral()) integral = false;
            GammaElem h = random_gamma_lb(rng, O, a, 4);
            GammaElem prod(g.A * h.A, g.B * h.B);
            if (!(M_of(h, a, e1, e2) * m == M_of(prod, a, e1, e2))) cocycle = false;
            if (!verify_period_identity(g, a, e1, e2)) period = false;
        }
        ZMat t(2, 2);
        t(0, 0) = 1;
        t(0, 1) = 1;
        t(1, 1) = 1;
        GammaElem shear(Mat2K::identity(D), t);
        if (M_of(shear, a, e1, e2).is_integral()) witness = false;
    }
    r.props.emplace_back("lower-bound words lie in Gamma", membership);
    r.props.emplace_back("M(A,B) integral on Gamma", integral);
    r.props.emplace_back("twisted cocycle identity", cocycle);
    r.props.emplace_back("period identity", period);
    r.props.emplace_back("non-integral witness outside Gamma", witness);
    return r;
}

SuiteResult suite_phi(std::mt19937& rng) {
    SuiteResult r;
    bool hom = true, kernel = true, order_ok = true;
    for (auto [D, d] : std::vector<std::pair<Int, Int>>{{Int(5), Int(11)}, {Int(8), Int(7)},
                                                        {Int(13), Int(3)}}) {
        QOrder O((Disc(D)));
        QIdeal a = primitive_ideals_of_norm(d, O).front();
        for (int t = 0; t < 30; ++t) {
            Mat2K A = random_sl2_module(rng, O, a, 5);
            Mat2K B = random_sl2_module(rng, O, a, 4);
            ZMat pa = phi_reduction(A, a), pb = phi_reduction(B, a);
            ZMat pab = phi_reduction(A * B, a);
            ZMat comp = pa * pb;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    if (mod_floor(pab(i, j) - comp(i, j), a.n()) != 0) hom = false;
            bool is_id = pa == ZMat::identity(2);
            if (is_id != in_gamma_lb_tilde(A, a)) kernel = false;
        }
    }
    for (long d = 1; d <= 12; ++d) {
        Int count(0);
        for (long x = 0; x < d; ++x)
            for (long y = 0; y < d; ++y)
                for (long z = 0; z < d; ++z)
                    for (long w = 0; w < d; ++w)
                        if (((x * w - y * z) % d + d) % d == 1 % d) count += 1;
        if (sl2_zd_order(Int(d)) != count) order_ok = false;
    }
    r.props.emplace_back("phi is a homomorphism mod d", hom);
    r.props.emplace_back("kernel of phi is the lower bound factor", kernel);
    r.props.emplace_back("|SL2(Z/d)| formula", order_ok);
    return r;
}

SuiteResult suite_admissibility(std::mt19937& rng) {
    SuiteResult r;
    bool cert_ok = true, worked_ok = true;
    for (Int D : {Int(5), Int(8), Int(13), Int(17)}) {
        for (int t = 0; t < 200; ++t) {
            std::vector<QVec3> images;
            for (int i = 0; i < 3; ++i) {
                QuadElem x(D, rnd_rat_cli(rng), rnd_rat_cli(rng));
                PCElem w(x, rnd_rat_cli(rng));
                if (w.is_zero()) w = PCElem::one(D);
                images.push_back(q_map(w));
            }
            AdmissibilityCert cert = admissibility_certificate(images);
            if (cert.admissible) {
                QVec3 sum{{Rat(0), Rat(0), Rat(0)}};
                for (size_t i = 0; i < images.size(); ++i) {
                    if (cert.interior_combination[i] <= 0) cert_ok = false;
                    for (int c = 0; c < 3; ++c)
                        sum.v[static_cast<size_t>(c)] += cert.interior_combination[i] * images[i].v[static_cast<size_t>(c)];
                }
                if (!sum.is_zero()) cert_ok = false;
            } else if (cert.separating_functional) {
                bool strict = false;
                for (const auto& q : images) {
                    Rat s = dot(*cert.separating_functional, q);
                    if (s < 0) cert_ok = false;
                    if (s > 0) strict = true;
                }
                if (!strict) cert_ok = false;
            } else {
                cert_ok = false;
            }
        }
        // the two worked examples
        std::array<PCElem, 3> r1 = {PCElem(QuadElem::rational(D, 1), Rat(0)),
                                    PCElem(QuadElem::sqrt_rad(D), Rat(0)),
                                    PCElem(QuadElem::rational(D, 0), Rat(1))};
        std::array<PCElem, 3> r2 = {PCElem(QuadElem::rational(D, 1), Rat(D, 2)),
                                    PCElem(QuadElem::rational(D, 1), Rat(-D, 2)),
                                    PCElem(QuadElem::sqrt_rad(D), Rat(0))};
        if (!is_admissible(Weighting(StratumKind::Trinodal, r1))) worked_ok = false;
        if (!is_admissible(Weighting(StratumKind::Trinodal, r2))) worked_ok = false;
    }
    r.props.emplace_back("certificates are self-checking", cert_ok);
    r.props.emplace_back("worked examples admissible", worked_ok);
    return r;
}

SuiteResult suite_lattices(std::mt19937& rng) {
    SuiteResult r;
    bool snf_ok = true, sympl_ok = true, degree_ok = true;
    for (int t = 0; t < 60; ++t) {
        long n = 2 * rnd(rng, 1, 3);
        ZMat g(n, n);
        do {
            for (long i = 0; i < n; ++i)
                for (long j = i + 1; j < n; ++j) {
                    g(i, j) = rnd(rng, -15, 15);
                    g(j, i) = -g(i, j);
                }
        } while (det(g) == 0);
        SymplecticBasis sb = symplectic_basis(AltGram(g));
        ZMat std_form(n, n);
        for (long i = 0; i < n / 2; ++i) {
            std_form(i, n / 2 + i) = sb.type[static_cast<size_t>(i)];
            std_form(n / 2 + i, i) = -sb.type[static_cast<size_t>(i)];
        }
        if (!(sb.U * g * sb.U.transposed() == std_form)) sympl_ok = false;
        if (symplectic_type(AltGram(g)) != sb.type) snf_ok = false;
        ZMat sub(n, n);
        do {
            for (long i = 0; i < n; ++i)
                for (long j = 0; j < n; ++j) sub(i, j) = rnd(rng, -3, 3);
        } while (det(sub) == 0);
        DegreeCheck dc = sublattice_degree_check(sub, AltGram(g));
        if (dc.deg_sub != dc.index * dc.deg_ambient) degree_ok = false;
    }
    r.props.emplace_back("symplectic reduction reaches the standard form", sympl_ok);
    r.props.emplace_back("types match the Smith normal form", snf_ok);
    r.props.emplace_back("degree-index product law", degree_ok);
    return r;
}

SuiteResult suite_pseudocubic(std::mt19937& rng) {
    SuiteResult r;
    bool dual_ok = true, equiv_ok = true, gram_ok = true;
    Int D(5);
    auto rnd_rat3 = [&](int h) {
        Rat q(rnd(rng, -h, h), rnd(rng, 1, 3));
        q.canonicalize();
        return q;
    };
    for (int t = 0; t < 60; ++t) {
        std::vector<PCElem> gens;
        for (int i = 0; i < 3; ++i)
            gens.push_back(PCElem(QuadElem(D, rnd_rat3(6), rnd_rat3(6)), rnd_rat3(6)));
        FLattice I(D, QLattice::standard(3));
        try {
            I = FLattice::from_elements(D, gens);
        } catch (const error&) {
            continue;
        }
        if (dual_lattice(dual_lattice(I)) != I) dual_ok = false;
        QMat S(3, 3);
        for (long i = 0; i < 3; ++i)
            for (long j = i; j < 3; ++j) S(i, j) = S(j, i) = rnd_rat3(4);
        HMap h(D, inverse(pseudo_trace_gram(D)) * S);
        PCElem a(QuadElem::rational(D, 0), Rat(0));
        do {
            a = PCElem(QuadElem(D, rnd_rat3(4), rnd_rat3(4)), rnd_rat3(4));
        } while (a.q() == 0 || a.x().is_zero() || a.x().norm() == 0);
        if (o_h(I, h) != o_h(I.scaled(a), conjugate_by(h, a))) equiv_ok = false;
    }
    for (auto [DD, d] : std::vector<std::pair<Int, Int>>{{Int(5), Int(11)}, {Int(8), Int(7)},
                                                         {Int(13), Int(3)}}) {
        QOrder O((Disc(DD)));
        for (const QIdeal& a : primitive_ideals_of_norm(d, O)) {
            auto [e1, e2] = smart_basis(a);
            auto gens = standard_symplectic_generators(O, a, e1, e2);
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j) {
                    Rat expect(0);
                    if (j == i + 3) expect = 1;
                    if (i == j + 3) expect = -1;
                    if (sympl_trp_pairing(gens[static_cast<size_t>(i)], gens[static_cast<size_t>(j)]) != expect)
                        gram_ok = false;
                }
        }
    }
    r.props.emplace_back("dual duality", dual_ok);
    r.props.emplace_back("F*-equivariance of O_h", equiv_ok);
    r.props.emplace_back("standard module Gram is J6", gram_ok);
    return r;
}

SuiteResult suite_prym(std::mt19937& rng) {
    (void)rng;
    SuiteResult r;
    bool pipeline = true;
    for (long n = 1; n <= 20; ++n) {
        if (is_square(Int(2 * n + 1))) continue;
        for (int sign : {1, -1})
            if (!prym_pipeline(n, sign).all_pass()) pipeline = false;
    }
    bool spectral = true;
    for (long n = 1; n <= 50; ++n) {
        if (!char_poly_check(n)) spectral = false;
        if (!is_square(Int(2 * n + 1)) && !eigen_checks(n)) spectral = false;
    }
    r.props.emplace_back("pipeline for n <= 20", pipeline);
    r.props.emplace_back("spectral identities for n <= 50", spectral);
    return r;
}

int cmd_verify(const CmdContext& ctx, const std::string& suite, unsigned seed) {
    std::mt19937 rng(seed);
    SuiteResult res;
    if (suite == "ideals")
        res = suite_ideals(rng);
    else if (suite == "classify")
        res = suite_classify(rng);
    else if (suite == "gamma")
        res = suite_gamma(rng);
    else if (suite == "phi")
        res = suite_phi(rng);
    else if (suite == "admissibility")
        res = suite_admissibility(rng);
    else if (suite == "lattices")
        res = suite_lattices(rng);
    else if (suite == "pseudocubic")
        res = suite_pseudocubic(rng);
    else if (suite == "prym")
        res = suite_prym(rng);
    else
        throw parse_error("unknown suite: " + suite +
                          " (expected ideals|classify|gamma|phi|admissibility|lattices|"
                          "pseudocubic|prym)");
    json out{{"suite", suite}, {"seed", seed}, {"properties", json::array()}, {"pass", res.all()}};
    std::ostringstream text;
    for (const auto& [name, pass] : res.props) {
        out["properties"].push_back(json{{"name", name}, {"pass", pass}});
        text << "[" << (pass ? "ok" : "FAIL") << "] " << name << "\n";
    }
    text << (res.all() ? "suite passed" : "suite FAILED") << "\n";
    if (ctx.json_mode)
        *ctx.out << out.dump() << "\n";
    else
        *ctx.out << text.str();
    return res.all() ? EXIT_TRUE : EXIT_FALSE;
}

} // namespace

// run one parsed command line; used directly and by --input batches
static int run_command(const std::vector<std::string>& args, std::ostream& out);

namespace {

int run_batch(const std::string& path, bool json_mode) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open input file: " << path << "\n";
        return EXIT_USAGE;
    }
    std::vector<std::vector<std::string>> tasks;
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> args;
        // shell-free tokenization: quotes group tokens
        char quote = 0;
        std::string cur;
        for (char c : line) {
            if (quote) {
                if (c == quote)
                    quote = 0;
                else
                    cur += c;
            } else if (c == '"' || c == '\'') {
                quote = c;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                if (!cur.empty()) {
                    args.push_back(cur);
                    cur.clear();
                }
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) args.push_back(cur);
        if (args.empty()) continue;
        if (json_mode) args.push_back("--json");
        tasks.push_back(args);
    }
    std::vector<std::future<std::pair<int, std::string>>> futures;
    for (const auto& t : tasks)
        futures.push_back(std::async(std::launch::async, [t]() {
            std::ostringstream os;
            int rc = run_command(t, os);
            return std::make_pair(rc, os.str());
        }));
    int rc = EXIT_TRUE;
    for (auto& f : futures) {
        auto [code, text] = f.get();
        std::cout << text;
        if (code != EXIT_TRUE) rc = code;
    }
    return rc;
}

} // namespace

static int run_command(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"exact computations with real quadratic orders, Hilbert modular groups and "
                 "weighted boundary strata"};
    app.require_subcommand(0, 1);
    bool json_mode = false;
    std::string input_file;
    app.add_flag("--json", json_mode, "machine-readable output");
    app.add_option("--input", input_file, "batch file, one command per line");

    std::string D_str, d_str, norm_arg, gens_arg, invert_arg, mul_arg, check_arg, pair_arg,
        ideal_arg, weights_arg, h_arg, point_arg, suite_arg;
    std::string stratum_arg = "trinodal", mode_arg = "exact", sign_arg = "+";
    long n_arg = 1;
    unsigned seed = 0, precision = 128;
    bool verify_period = false;

    CLI::App* ideal = app.add_subcommand("ideal", "ideal arithmetic and enumeration");
    ideal->add_option("--D", D_str, "discriminant")->required();
    ideal->add_option("--norm", norm_arg, "enumerate primitive ideals of this norm");
    ideal->add_option("--gens", gens_arg, "construct the ideal generated by these elements");
    ideal->add_option("--invert", invert_arg, "invert the ideal <n, a + b*g>");
    ideal->add_option("--mul", mul_arg, "multiply two ideals \"<I>;<J>\"");

    CLI::App* classify = app.add_subcommand("classify", "components of the type-d moduli space");
    classify->add_option("--D", D_str, "discriminant")->required();
    classify->add_option("--d", d_str, "type")->required();

    CLI::App* group = app.add_subcommand("group", "membership in the modular groups");
    group->add_option("--D", D_str, "discriminant")->required();
    group->add_option("--d", d_str, "type")->required();
    group->add_option("--check", check_arg, "pair \"A;B\" to test")->required();
    group->add_option("--ideal", ideal_arg, "use this primitive ideal (default: first)");

    CLI::App* cocycle = app.add_subcommand("cocycle", "the 6x6 matrix M(A,B)");
    cocycle->add_option("--D", D_str, "discriminant")->required();
    cocycle->add_option("--d", d_str, "type")->required();
    cocycle->add_option("--pair", pair_arg, "pair \"A;B\"")->required();
    cocycle->add_option("--ideal", ideal_arg, "use this primitive ideal (default: first)");
    cocycle->add_flag("--verify-period", verify_period, "check the period identity");

    CLI::App* admissible = app.add_subcommand("admissible", "admissibility of a weighted stratum");
    admissible->add_option("--D", D_str, "discriminant")->required();
    admissible->add_option("--weights", weights_arg, "three weights \"(x;q),(x;q),(x;q)\"")
        ->required();

    CLI::App* crossratio = app.add_subcommand("crossratio", "cross-ratio equations of a stratum");
    crossratio->set_help_flag("--help", "print help"); // frees -h for --h
    crossratio->add_option("--D", D_str, "discriminant")->required();
    crossratio->add_option("--weights", weights_arg, "three weights")->required();
    crossratio->add_option("--h", h_arg, "symmetric h-coefficients (9 or 6 rationals)");
    crossratio->add_option("--stratum", stratum_arg, "trinodal|nontrinodal");
    crossratio->add_option("--point", point_arg, "points to test (6 or 8)");
    crossratio->add_option("--mode", mode_arg, "exact|numeric");
    crossratio->add_option("--precision", precision, "bits for numeric mode");

    CLI::App* prym = app.add_subcommand("prym", "the T_n family pipeline");
    prym->add_option("--n", n_arg, "index n (2n+1 nonsquare)")->required();
    prym->add_option("--sign", sign_arg, "+|-");

    CLI::App* verify = app.add_subcommand("verify", "run a named property suite");
    verify->add_option("--suite", suite_arg, "suite name")->required();
    verify->add_option("--seed", seed, "random seed");

    for (CLI::App* sc : {ideal, classify, group, cocycle, admissible, crossratio, prym, verify})
        sc->fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream dummy;
        int code = app.exit(e, dummy, dummy);
        out << dummy.str();
        return code == 0 ? EXIT_TRUE : EXIT_USAGE;
    }

    CmdContext ctx{json_mode, &out};
    try {
        if (!input_file.empty()) return run_batch(input_file, json_mode);
        if (app.get_subcommands().empty()) {
            out << app.help();
            return EXIT_USAGE;
        }
        if (*ideal) return cmd_ideal(ctx, Int(D_str), norm_arg, gens_arg, invert_arg, mul_arg);
        if (*classify) return cmd_classify(ctx, Int(D_str), Int(d_str));
        if (*group) return cmd_group(ctx, Int(D_str), Int(d_str), check_arg, ideal_arg);
        if (*cocycle)
            return cmd_cocycle(ctx, Int(D_str), Int(d_str), pair_arg, ideal_arg, verify_period);
        if (*admissible) return cmd_admissible(ctx, Int(D_str), weights_arg);
        if (*crossratio)
            return cmd_crossratio(ctx, Int(D_str), weights_arg, h_arg, stratum_arg, point_arg,
                                  mode_arg, precision);
        if (*prym) return cmd_prym(ctx, n_arg, sign_arg);
        if (*verify) return cmd_verify(ctx, suite_arg, seed);
    } catch (const parse_error& e) {
        out << "usage error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const error& e) {
        out << "domain error: " << e.what() << "\n";
        return EXIT_DOMAIN;
    } catch (const std::invalid_argument& e) {
        out << "usage error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
    return EXIT_USAGE;
}

int main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_command(args, std::cout);
}
