#include "hmv/boundary.hpp"

#include <algorithm>

#include "hmv/interval.hpp"
#include "hmv/qlattice.hpp"

namespace hmv {

Rat dot(const QVec3& a, const QVec3& b) { return a.v[0] * b.v[0] + a.v[1] * b.v[1] + a.v[2] * b.v[2]; }

QVec3 q_map(const PCElem& w) {
    if (w.rad() < 0) throw negative_discriminant("q_map needs D > 0");
    Rat D(w.rad());
    const Rat& r = w.x().u();
    const Rat& s = w.x().v();
    const Rat& q = w.q();
    return QVec3{{s * s * D * D - r * r * D, 2 * r * q, 2 * s * D * q}};
}

Weighting::Weighting(StratumKind k, std::array<PCElem, 3> weights) : kind(k), r(std::move(weights)) {
    for (const auto& w : r)
        if (w.is_zero()) throw error("Weighting: zero weight");
    require_same_rad(r[0].x(), r[1].x());
    require_same_rad(r[0].x(), r[2].x());
}

namespace {

using Ray = std::vector<Rat>;

Ray primitive(const Ray& x) {
    Int den(1);
    for (const auto& e : x) den = int_lcm(den, e.get_den());
    Int g(0);
    std::vector<Int> z(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        Rat v = x[i] * Rat(den);
        z[i] = v.get_num();
        g = int_gcd(g, z[i]);
    }
    Ray out(x.size(), Rat(0));
    if (g == 0) return out;
    for (size_t i = 0; i < x.size(); ++i) out[i] = Rat(z[i] / g);
    return out;
}

bool is_zero_ray(const Ray& x) {
    for (const auto& e : x)
        if (e != 0) return false;
    return true;
}

Rat ray_dot(const Ray& a, const Ray& b) {
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void dedupe(std::vector<Ray>& rays) {
    std::vector<Ray> out;
    for (auto& r : rays) {
        if (is_zero_ray(r)) continue;
        bool seen = false;
        for (const auto& o : out)
            if (o == r) {
                seen = true;
                break;
            }
        if (!seen) out.push_back(r);
    }
    rays = std::move(out);
}

// one double-description step: generators of cone(rays) cut by {h . x >= 0}
void dd_cut(std::vector<Ray>& rays, const Ray& h) {
    std::vector<Ray> plus, zero, minus;
    for (const auto& r : rays) {
        Rat s = ray_dot(h, r);
        if (s > 0)
            plus.push_back(r);
        else if (s < 0)
            minus.push_back(r);
        else
            zero.push_back(r);
    }
    std::vector<Ray> next = plus;
    next.insert(next.end(), zero.begin(), zero.end());
    for (const auto& p : plus)
        for (const auto& m : minus) {
            Rat sp = ray_dot(h, p), sm = ray_dot(h, m);
            Ray w(p.size());
            for (size_t i = 0; i < p.size(); ++i) w[i] = sp * m[i] - sm * p[i];
            next.push_back(primitive(w));
        }
    dedupe(next);
    rays = std::move(next);
}

// extreme-ray generators of the pointed cone {x : g . x >= 0 for all g};
// requires the constraints to span the dual space
std::vector<Ray> pointed_cone_rays(const std::vector<Ray>& constraints, long k) {
    // find k independent constraints for the simplicial start
    QMat all(static_cast<long>(constraints.size()), k);
    for (size_t i = 0; i < constraints.size(); ++i)
        for (long j = 0; j < k; ++j) all(static_cast<long>(i), j) = constraints[i][static_cast<size_t>(j)];
    std::vector<long> chosen;
    QMat acc(0, k);
    for (size_t i = 0; i < constraints.size() && static_cast<long>(chosen.size()) < k; ++i) {
        QMat trial(static_cast<long>(chosen.size()) + 1, k);
        for (size_t t = 0; t < chosen.size(); ++t)
            for (long j = 0; j < k; ++j) trial(static_cast<long>(t), j) = constraints[static_cast<size_t>(chosen[t])][static_cast<size_t>(j)];
        for (long j = 0; j < k; ++j) trial(static_cast<long>(chosen.size()), j) = constraints[i][static_cast<size_t>(j)];
        if (rank(trial) == static_cast<long>(chosen.size()) + 1) chosen.push_back(static_cast<long>(i));
    }
    if (static_cast<long>(chosen.size()) != k) throw error("cone is not pointed");
    QMat G0(k, k);
    for (long t = 0; t < k; ++t)
        for (long j = 0; j < k; ++j) G0(t, j) = constraints[static_cast<size_t>(chosen[static_cast<size_t>(t)])][static_cast<size_t>(j)];
    QMat R0 = inverse(G0);
    std::vector<Ray> rays;
    for (long j = 0; j < k; ++j) {
        Ray r(static_cast<size_t>(k));
        for (long i = 0; i < k; ++i) r[static_cast<size_t>(i)] = R0(i, j);
        rays.push_back(primitive(r));
    }
    for (size_t i = 0; i < constraints.size(); ++i) {
        if (std::find(chosen.begin(), chosen.end(), static_cast<long>(i)) != chosen.end()) continue;
        dd_cut(rays, constraints[i]);
    }
    return rays;
}

} // namespace

AdmissibilityCert admissibility_certificate(const std::vector<QVec3>& images) {
    long m = static_cast<long>(images.size());
    if (m == 0) throw error("admissibility needs at least one weight");

    // dual cone Z = {lambda >= 0 : sum lambda_i Q_i = 0} by double
    // description starting from the orthant and cutting with the equalities
    std::vector<Ray> rays;
    for (long i = 0; i < m; ++i) {
        Ray e(static_cast<size_t>(m), Rat(0));
        e[static_cast<size_t>(i)] = 1;
        rays.push_back(e);
    }
    for (int c = 0; c < 3; ++c) {
        Ray h(static_cast<size_t>(m));
        for (long i = 0; i < m; ++i) h[static_cast<size_t>(i)] = images[static_cast<size_t>(i)].v[static_cast<size_t>(c)];
        dd_cut(rays, h);
        for (auto& e : h) e = -e;
        dd_cut(rays, h);
    }
    Ray sum(static_cast<size_t>(m), Rat(0));
    for (const auto& r : rays)
        for (long i = 0; i < m; ++i) sum[static_cast<size_t>(i)] += r[static_cast<size_t>(i)];
    bool positive = true;
    for (const auto& e : sum)
        if (e <= 0) positive = false;

    AdmissibilityCert cert;
    cert.admissible = positive;
    if (positive) {
        cert.interior_combination.assign(sum.begin(), sum.end());
        return cert;
    }

    // separating functional from the primal cone inside the span of the images
    QMat span(m, 3);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < 3; ++j) span(i, j) = images[static_cast<size_t>(i)].v[static_cast<size_t>(j)];
    QMat w = span;
    // row-reduce to find a basis of the span
    std::vector<Ray> basis;
    {
        long r = 0;
        for (long j = 0; j < 3 && r < m; ++j) {
            long p = -1;
            for (long i = r; i < m; ++i)
                if (w(i, j) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            for (long kk = 0; kk < 3; ++kk) swap(w(p, kk), w(r, kk));
            for (long i = 0; i < m; ++i) {
                if (i == r || w(i, j) == 0) continue;
                Rat f = w(i, j) / w(r, j);
                for (long kk = 0; kk < 3; ++kk) w(i, kk) -= f * w(r, kk);
            }
            Ray b(3);
            for (long kk = 0; kk < 3; ++kk) b[static_cast<size_t>(kk)] = w(r, kk);
            basis.push_back(b);
            ++r;
        }
    }
    long k = static_cast<long>(basis.size());
    if (k == 0) throw error("inadmissible with all images zero is impossible");
    std::vector<Ray> constraints;
    for (long i = 0; i < m; ++i) {
        Ray g(static_cast<size_t>(k));
        for (long j = 0; j < k; ++j) {
            Rat s(0);
            for (long t = 0; t < 3; ++t) s += images[static_cast<size_t>(i)].v[static_cast<size_t>(t)] * basis[static_cast<size_t>(j)][static_cast<size_t>(t)];
            g[static_cast<size_t>(j)] = s;
        }
        constraints.push_back(g);
    }
    std::vector<Ray> prays = pointed_cone_rays(constraints, k);
    for (const auto& r : prays) {
        // lift back to Q^3
        QVec3 v{{Rat(0), Rat(0), Rat(0)}};
        for (long j = 0; j < k; ++j)
            for (long t = 0; t < 3; ++t) v.v[static_cast<size_t>(t)] += r[static_cast<size_t>(j)] * basis[static_cast<size_t>(j)][static_cast<size_t>(t)];
        bool nonneg = true, strict = false;
        for (const auto& img : images) {
            Rat s = dot(v, img);
            if (s < 0) nonneg = false;
            if (s > 0) strict = true;
        }
        if (nonneg && strict) {
            cert.separating_functional = v;
            return cert;
        }
    }
    throw error("inadmissible but no separating functional found");
}

bool is_admissible(const Weighting& w) { return admissibility_certificate(w).admissible; }

AdmissibilityCert admissibility_certificate(const Weighting& w) {
    std::vector<QVec3> images;
    for (const auto& r : w.r) images.push_back(q_map(r));
    return admissibility_certificate(images);
}

std::array<PCElem, 3> dual_basis(const std::array<PCElem, 3>& r) {
    QMat gram(3, 3);
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 3; ++j)
            gram(i, j) = trp_pairing(r[static_cast<size_t>(i)], r[static_cast<size_t>(j)]);
    if (det(gram) == 0) throw singular_gram();
    QMat inv = inverse(gram);
    std::array<PCElem, 3> s = {PCElem::zero(r[0].rad()), PCElem::zero(r[0].rad()),
                               PCElem::zero(r[0].rad())};
    for (long j = 0; j < 3; ++j) {
        PCElem acc = PCElem::zero(r[0].rad());
        for (long kk = 0; kk < 3; ++kk) acc = acc + inv(j, kk) * r[static_cast<size_t>(kk)];
        s[static_cast<size_t>(j)] = acc;
    }
    return s;
}

std::vector<std::array<Int, 3>> exponent_lattice(const std::array<PCElem, 3>& s) {
    PCElem p23 = s[1] * s[2], p13 = s[0] * s[2], p12 = s[0] * s[1];
    QMat m(3, 3);
    auto put = [&](long col, const PCElem& x) {
        auto c = pc_coords(x);
        for (long i = 0; i < 3; ++i) m(i, col) = c[static_cast<size_t>(i)];
    };
    put(0, p23);
    put(1, p13);
    put(2, p12);
    Int den;
    ZMat mz = clear_denominators(m, den);
    ZMat kern = integer_kernel(mz);
    // canonical basis order via HNF
    QMat rows(kern.rows, 3);
    for (long i = 0; i < kern.rows; ++i)
        for (long j = 0; j < 3; ++j) rows(i, j) = Rat(kern(i, j));
    QLattice lat = QLattice::from_qmat_rows(rows);
    std::vector<std::array<Int, 3>> out;
    for (long i = 0; i < lat.rank(); ++i) {
        auto r = lat.basis_row(i);
        std::array<Int, 3> v;
        Int g(0);
        for (long j = 0; j < 3; ++j) {
            if (r[static_cast<size_t>(j)].get_den() != 1) throw error("exponent lattice not integral");
            v[static_cast<size_t>(j)] = r[static_cast<size_t>(j)].get_num();
            g = int_gcd(g, v[static_cast<size_t>(j)]);
        }
        if (g != 1) throw error("exponent basis vector not primitive");
        out.push_back(v);
    }
    return out;
}

namespace {

void check_b_matrix(const QMat& b) {
    if (b.rows != 3 || b.cols != 3) throw error("h-coefficient matrix must be 3x3");
    if (!(b == b.transposed())) throw error("h-coefficient matrix must be symmetric");
}

std::vector<CrossRatioEq> equations_impl(const Weighting& w, const QMat& b, StratumKind kind) {
    check_b_matrix(b);
    auto s = dual_basis(w.r);
    std::vector<CrossRatioEq> out;
    for (const auto& a : exponent_lattice(s)) {
        Rat phase = Rat(a[0]) * b(1, 2) + Rat(a[1]) * b(0, 2) + Rat(a[2]) * b(0, 1);
        out.push_back(CrossRatioEq{a, rat_mod1(phase), kind});
    }
    return out;
}

} // namespace

std::vector<CrossRatioEq> cross_ratio_equations(const Weighting& w, const QMat& b) {
    if (w.kind != StratumKind::Trinodal) throw unsupported_stratum("expected a trinodal weighting");
    return equations_impl(w, b, StratumKind::Trinodal);
}

std::vector<CrossRatioEq> nontrinodal_equations(const Weighting& w, const QMat& b) {
    if (w.kind != StratumKind::NiceNonTrinodal)
        throw unsupported_stratum("expected a nice non-trinodal weighting");
    return equations_impl(w, b, StratumKind::NiceNonTrinodal);
}

std::string CrossRatioEq::str() const {
    auto pw = [](const std::string& base, const Int& e) { return base + "^" + e.get_str(); };
    std::string lhs;
    if (stratum == StratumKind::Trinodal)
        lhs = pw("p23", exponents[0]) + " * " + pw("p13", exponents[1]) + " * " +
              pw("p12", exponents[2]);
    else
        lhs = pw("pb23", exponents[0]) + " * " + pw("pb13", exponents[1]);
    return lhs + " = e(-" + rat_str(phase) + ")";
}

GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }

GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    Rat n = b.re * b.re + b.im * b.im;
    if (n == 0) throw division_by_zero("Gaussian rational division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

GaussRat gpow(const GaussRat& a, const Int& e) {
    if (e < 0) {
        if (a.is_zero()) throw division_by_zero("0 to a negative power");
        return gpow(GaussRat(Rat(1), Rat(0)) / a, -e);
    }
    GaussRat r(Rat(1), Rat(0));
    GaussRat base = a;
    Int k = e;
    while (k > 0) {
        if (mod_floor(k, 2) == 1) r = r * base;
        base = base * base;
        k = fdiv(k, 2);
    }
    return r;
}

std::string GaussRat::str() const {
    if (im == 0) return rat_str(re);
    std::string s;
    if (re != 0) s = rat_str(re) + (im < 0 ? " - " : " + ");
    else if (im < 0)
        s = "-";
    Rat a = abs(im);
    if (a == 1)
        s += "i";
    else
        s += rat_str(a) + "*i";
    return s;
}

std::string ProjPoint::str() const { return is_infinity() ? "inf" : value->str(); }

ProjPoint cross_ratio(const ProjPoint& z1, const ProjPoint& z2, const ProjPoint& z3,
                      const ProjPoint& z4) {
    // homogeneous coordinates (n : d)
    auto hom = [](const ProjPoint& z) {
        if (z.is_infinity()) return std::pair<GaussRat, GaussRat>{GaussRat(Rat(1), Rat(0)), GaussRat()};
        return std::pair<GaussRat, GaussRat>{*z.value, GaussRat(Rat(1), Rat(0))};
    };
    auto [n1, d1] = hom(z1);
    auto [n2, d2] = hom(z2);
    auto [n3, d3] = hom(z3);
    auto [n4, d4] = hom(z4);
    auto dd = [](const GaussRat& na, const GaussRat& da, const GaussRat& nb, const GaussRat& db) {
        return na * db - nb * da;
    };
    GaussRat num = dd(n1, d1, n3, d3) * dd(n2, d2, n4, d4);
    GaussRat den = dd(n1, d1, n4, d4) * dd(n2, d2, n3, d3);
    if (num.is_zero() && den.is_zero()) throw coincident_points();
    if (den.is_zero()) return ProjPoint::infinity();
    return ProjPoint::finite(num / den);
}

ProjPoint psi_eval(const std::array<ProjPoint, 6>& p, int j, int k) {
    if (j < 1 || j > 3 || k < 1 || k > 3 || j == k) throw error("psi_eval: bad indices");
    // p = (p1, p2, p3, q1, q2, q3); p_jk = (p_j, q_j; q_k, p_k)
    return cross_ratio(p[static_cast<size_t>(j - 1)], p[static_cast<size_t>(j + 2)],
                       p[static_cast<size_t>(k + 2)], p[static_cast<size_t>(k - 1)]);
}

namespace {

GaussRat exact_phase_value(const Rat& q) {
    // exp(-2 pi i q) for q with denominator 1, 2 or 4
    Rat t = rat_mod1(q);
    if (t == 0) return GaussRat(Rat(1), Rat(0));
    if (t == Rat(1, 2)) return GaussRat(Rat(-1), Rat(0));
    if (t == Rat(1, 4)) return GaussRat(Rat(0), Rat(-1));
    if (t == Rat(3, 4)) return GaussRat(Rat(0), Rat(1));
    throw phase_not_representable("phase " + rat_str(q) + " is not a 4th root of unity");
}

GaussRat finite_nonzero(const ProjPoint& p) {
    if (p.is_infinity() || p.value->is_zero())
        throw coincident_points("cross-ratio is 0 or infinite");
    return *p.value;
}

GaussRat equation_lhs(const GaussRat& v23, const GaussRat& v13, const std::optional<GaussRat>& v12,
                      const CrossRatioEq& eq) {
    GaussRat lhs = gpow(v23, eq.exponents[0]) * gpow(v13, eq.exponents[1]);
    if (eq.stratum == StratumKind::Trinodal) {
        if (!v12) throw error("trinodal equation needs p12");
        lhs = lhs * gpow(*v12, eq.exponents[2]);
    }
    return lhs;
}

RatInterval distance_squared(const GaussRat& lhs, const Rat& phase, unsigned bits) {
    RatInterval c = cos2pi_interval(phase, bits + 4);
    RatInterval s = sin2pi_interval(phase, bits + 4);
    RatInterval dre = RatInterval::point(lhs.re) - c;
    RatInterval dim = RatInterval::point(lhs.im) + s; // rhs.im = -sin
    return dre * dre + dim * dim;
}

bool check_equations(const GaussRat& v23, const GaussRat& v13, std::optional<GaussRat> v12,
                     const std::vector<CrossRatioEq>& eqs, CheckMode mode, unsigned bits) {
    for (const auto& eq : eqs) {
        GaussRat lhs = equation_lhs(v23, v13, v12, eq);
        if (mode == CheckMode::Exact) {
            if (!(lhs == exact_phase_value(eq.phase))) return false;
        } else {
            if (!distance_squared(lhs, eq.phase, bits).strictly_below(pow2(-static_cast<long>(bits))))
                return false;
        }
    }
    return true;
}

} // namespace

bool satisfies_sh(const std::array<ProjPoint, 6>& p, const std::vector<CrossRatioEq>& eqs,
                  CheckMode mode, unsigned precision_bits) {
    GaussRat v23 = finite_nonzero(psi_eval(p, 2, 3));
    GaussRat v13 = finite_nonzero(psi_eval(p, 1, 3));
    GaussRat v12 = finite_nonzero(psi_eval(p, 1, 2));
    return check_equations(v23, v13, v12, eqs, mode, precision_bits);
}

bool satisfies_sh_nontrinodal(const std::array<ProjPoint, 8>& p,
                              const std::vector<CrossRatioEq>& eqs, CheckMode mode,
                              unsigned precision_bits) {
    // (p1, q1, p3+, q3-) and (p2, q2, q3+, p3-)
    GaussRat v13 = finite_nonzero(cross_ratio(p[0], p[1], p[3], p[2]));
    GaussRat v23 = finite_nonzero(cross_ratio(p[4], p[5], p[6], p[7]));
    for (const auto& eq : eqs)
        if (eq.stratum != StratumKind::NiceNonTrinodal)
            throw unsupported_stratum("expected nice non-trinodal equations");
    return check_equations(v23, v13, std::nullopt, eqs, mode, precision_bits);
}

std::vector<RatInterval> sh_distances(const std::array<ProjPoint, 6>& p,
                                      const std::vector<CrossRatioEq>& eqs,
                                      unsigned precision_bits) {
    GaussRat v23 = finite_nonzero(psi_eval(p, 2, 3));
    GaussRat v13 = finite_nonzero(psi_eval(p, 1, 3));
    GaussRat v12 = finite_nonzero(psi_eval(p, 1, 2));
    std::vector<RatInterval> out;
    for (const auto& eq : eqs)
        out.push_back(distance_squared(equation_lhs(v23, v13, v12, eq), eq.phase, precision_bits));
    return out;
}

Rat tensor_pairing(const std::vector<TensorTerm>& a, const PCElem& w) {
    Rat s(0);
    for (const auto& t : a) s += t.coeff * trp(t.x * w) * trp(t.y * w);
    return s;
}

namespace {

PCElem be1(const Int& rad) { return PCElem(QuadElem::rational(rad, 1), Rat(0)); }
PCElem be2(const Int& rad) { return PCElem(QuadElem::sqrt_rad(rad), Rat(0)); }
PCElem be3(const Int& rad) { return PCElem(QuadElem::rational(rad, 0), Rat(1)); }

} // namespace

std::vector<std::vector<TensorTerm>> lambda1_tensor_basis(const Int& rad) {
    PCElem e1 = be1(rad), e2 = be2(rad), e3 = be3(rad);
    Rat invD(1, rad);
    invD.canonicalize();
    return {
        {{e1, e1, Rat(1)}, {e2, e2, invD}},
        {{e2, e1, Rat(1)}, {e1, e2, Rat(1)}},
        {{e3, e3, Rat(1)}},
    };
}

std::vector<std::vector<TensorTerm>> lambda1_perp_tensor_basis(const Int& rad) {
    PCElem e1 = be1(rad), e2 = be2(rad), e3 = be3(rad);
    Rat mDq(-rad, 4);
    mDq.canonicalize();
    return {
        {{e2, e2, Rat(1, 4)}, {e1, e1, mDq}},
        {{e1, e3, Rat(1, 2)}, {e3, e1, Rat(1, 2)}},
        {{e2, e3, Rat(1, 2)}, {e3, e2, Rat(1, 2)}},
    };
}

} // namespace hmv
