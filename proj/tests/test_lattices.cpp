#include <doctest.h>

#include "hmv/lattices.hpp"
#include "testutil.hpp"

using namespace hmv;
using namespace hmvtest;

namespace {

ZMat standard_j(long g, const std::vector<Int>& type) {
    ZMat j(2 * g, 2 * g);
    for (long i = 0; i < g; ++i) {
        j(i, g + i) = type[static_cast<size_t>(i)];
        j(g + i, i) = -type[static_cast<size_t>(i)];
    }
    return j;
}

} // namespace

TEST_CASE("symplectic type") {
    SUBCASE("standard forms") {
        CHECK(symplectic_type(AltGram(standard_j(2, {1, 1}))) == std::vector<Int>{1, 1});
        CHECK(symplectic_type(AltGram(standard_j(2, {1, 2}))) == std::vector<Int>{1, 2});
        CHECK(symplectic_type(AltGram(standard_j(3, {1, 2, 6}))) == std::vector<Int>{1, 2, 6});
    }
    SUBCASE("scaling multiplies the type") {
        ZMat g = standard_j(2, {1, 3});
        CHECK(symplectic_type(AltGram(Int(4) * g)) == std::vector<Int>{4, 12});
    }
    SUBCASE("degenerate and odd inputs are rejected") {
        CHECK_THROWS_AS(symplectic_type(AltGram(ZMat(3, 3))), degenerate_form);
        CHECK_THROWS_AS(symplectic_type(AltGram(ZMat(4, 4))), degenerate_form);
    }
}

TEST_CASE("symplectic basis reduction") {
    std::mt19937 rng(2024);
    SUBCASE("already standard: recovers type (1,...,1)") {
        ZMat j = standard_j(2, {1, 1});
        SymplecticBasis sb = symplectic_basis(AltGram(j));
        CHECK(sb.type == std::vector<Int>{1, 1});
        CHECK(sb.U * j * sb.U.transposed() == standard_j(2, sb.type));
    }
    SUBCASE("random unimodular conjugates of J recover the type") {
        for (int t = 0; t < 30; ++t) {
            long g = rnd(rng, 1, 3);
            std::vector<Int> type;
            Int d(1);
            for (long i = 0; i < g; ++i) {
                d *= rnd(rng, 1, 3);
                type.push_back(d);
            }
            ZMat j = standard_j(g, type);
            ZMat u = rnd_unimodular(rng, 2 * g, 12);
            ZMat gm = u * j * u.transposed();
            SymplecticBasis sb = symplectic_basis(AltGram(gm));
            CHECK(sb.type == type);
            CHECK(sb.U * gm * sb.U.transposed() == standard_j(g, type));
            CHECK(is_unimodular(sb.U));
        }
    }
    SUBCASE("100 random nondegenerate alternating Grams, sizes 4 and 6") {
        for (int t = 0; t < 100; ++t) {
            long n = (t % 2 == 0) ? 4 : 6;
            ZMat gm = rnd_alternating(rng, n, 20);
            SymplecticBasis sb = symplectic_basis(AltGram(gm));
            CHECK(sb.U * gm * sb.U.transposed() == standard_j(n / 2, sb.type));
            CHECK(is_unimodular(sb.U));
            CHECK(symplectic_type(AltGram(gm)) == sb.type);
            for (size_t i = 0; i + 1 < sb.type.size(); ++i)
                CHECK(divides(sb.type[i], sb.type[i + 1]));
        }
    }
}

TEST_CASE("degree-index product law") {
    std::mt19937 rng(555);
    SUBCASE("identity sublattice") {
        ZMat g = rnd_alternating(rng, 4, 9);
        DegreeCheck dc = sublattice_degree_check(ZMat::identity(4), AltGram(g));
        CHECK(dc.index == 1);
        CHECK(dc.deg_sub == dc.deg_ambient);
    }
    SUBCASE("scaling by 2 in rank 4") {
        ZMat g = rnd_alternating(rng, 4, 9);
        DegreeCheck dc = sublattice_degree_check(Int(2) * ZMat::identity(4), AltGram(g));
        CHECK(dc.index == 16);
        CHECK(dc.deg_sub == dc.index * dc.deg_ambient);
    }
    SUBCASE("random sublattices of rank 4 and 6") {
        int done = 0;
        while (done < 200) {
            long n = (done % 2 == 0) ? 4 : 6;
            ZMat g = rnd_alternating(rng, n, 12);
            ZMat sub = rnd_zmat(rng, n, n, 4);
            if (det(sub) == 0) continue;
            DegreeCheck dc = sublattice_degree_check(sub, AltGram(g));
            CHECK(dc.deg_sub == dc.index * dc.deg_ambient);
            ++done;
        }
    }
}

TEST_CASE("subspace intersection") {
    std::mt19937 rng(808);
    SUBCASE("full space and zero space") {
        QLattice lat = QLattice::standard(4);
        std::vector<std::vector<Rat>> all = {{Rat(1), Rat(0), Rat(0), Rat(0)},
                                             {Rat(0), Rat(1), Rat(0), Rat(0)},
                                             {Rat(0), Rat(0), Rat(1), Rat(0)},
                                             {Rat(0), Rat(0), Rat(0), Rat(1)}};
        CHECK(intersect_subspace(lat, all) == lat);
        CHECK(intersect_subspace(lat, {}).rank() == 0);
        std::vector<std::vector<Rat>> zero = {{Rat(0), Rat(0), Rat(0), Rat(0)}};
        CHECK(intersect_subspace(lat, zero).rank() == 0);
    }
    SUBCASE("rank-6 lattice cut by a 3-dimensional subspace") {
        for (int t = 0; t < 25; ++t) {
            // random full lattice in Q^6
            std::vector<std::vector<Rat>> gens;
            for (int i = 0; i < 6; ++i) {
                std::vector<Rat> v;
                for (int j = 0; j < 6; ++j) v.push_back(rnd_rat(rng, 3));
                gens.push_back(v);
            }
            QLattice lat = QLattice::from_rows(6, gens);
            if (lat.rank() < 6) continue;
            std::vector<std::vector<Rat>> span;
            for (int i = 0; i < 3; ++i) {
                std::vector<Rat> v;
                for (int j = 0; j < 6; ++j) v.push_back(Rat(rnd(rng, -3, 3)));
                span.push_back(v);
            }
            QMat sp(3, 6);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 6; ++j) sp(i, j) = span[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (rank(sp) < 3) continue;
            QLattice cut = intersect_subspace(lat, span);
            CHECK(cut.rank() == 3);
            CHECK(cut.is_sublattice_of(lat));
            // saturation: any lattice point of the subspace inside lat lies in cut
            // equivalent check: scaling a cut basis vector by 1/k leaves lat or
            // stays in cut; verify via index-free saturation property below
            for (long i = 0; i < cut.rank(); ++i) {
                auto row = cut.basis_row(i);
                // halving a primitive vector of the cut must leave the lattice
                std::vector<Rat> half = row;
                for (auto& e : half) e /= 2;
                bool in_lat = lat.contains(half);
                bool in_cut = cut.contains(half);
                CHECK(in_lat == in_cut);
            }
        }
    }
}

TEST_CASE("saturation of intersections (SNF invariants all 1)") {
    std::mt19937 rng(11);
    for (int t = 0; t < 25; ++t) {
        QLattice lat = QLattice::standard(5);
        std::vector<std::vector<Rat>> span;
        for (int i = 0; i < 2; ++i) {
            std::vector<Rat> v;
            for (int j = 0; j < 5; ++j) v.push_back(Rat(rnd(rng, -4, 4)));
            span.push_back(v);
        }
        QLattice cut = intersect_subspace(lat, span);
        if (cut.rank() == 0) continue;
        // literal form: the inclusion coordinates have all invariants 1
        ZMat C(cut.rank(), lat.rank());
        for (long i = 0; i < cut.rank(); ++i) {
            auto c = lat.coords(cut.basis_row(i));
            REQUIRE(c.has_value());
            for (long j = 0; j < lat.rank(); ++j) C(i, j) = (*c)[static_cast<size_t>(j)];
        }
        for (const Int& inv : snf(C).invariants) CHECK(inv == 1);
        // inclusion matrix of cut into lat restricted to its own span must be
        // unimodular over the saturation: every rational point of span inside
        // lat must lie in cut
        for (int s = 0; s < 10; ++s) {
            std::vector<Rat> v(5, Rat(0));
            for (long i = 0; i < cut.rank(); ++i) {
                Rat c(rnd(rng, -3, 3), rnd(rng, 1, 3));
                c.canonicalize();
                auto row = cut.basis_row(i);
                for (int j = 0; j < 5; ++j) v[static_cast<size_t>(j)] += c * row[static_cast<size_t>(j)];
            }
            if (lat.contains(v)) CHECK(cut.contains(v));
        }
    }
}

TEST_CASE("rational basis representatives") {
    std::mt19937 rng(4444);
    SUBCASE("trivial quotient") {
        ZMat sub = ZMat::identity(3);
        std::vector<std::vector<Int>> cls = {{Int(1), Int(0), Int(0)},
                                             {Int(0), Int(1), Int(0)},
                                             {Int(0), Int(0), Int(1)}};
        auto r = rational_basis_reps(sub, cls, {Int(1), Int(1), Int(1)});
        for (int i = 0; i < 3; ++i) CHECK(r.multipliers[static_cast<size_t>(i)] == 1);
    }
    SUBCASE("scaled standard lattice") {
        Int d(6);
        ZMat sub = Int(6) * ZMat::identity(3);
        std::vector<std::vector<Int>> cls = {{Int(1), Int(0), Int(0)},
                                             {Int(0), Int(1), Int(0)},
                                             {Int(0), Int(0), Int(1)}};
        auto r = rational_basis_reps(sub, cls, {d, d, d});
        for (int i = 0; i < 3; ++i) {
            CHECK(r.multipliers[static_cast<size_t>(i)] >= 1);
            CHECK(int_gcd(r.multipliers[static_cast<size_t>(i)], d) == 1);
        }
    }
    SUBCASE("randomized instances verified by substitution") {
        int done = 0;
        while (done < 100) {
            long n = rnd(rng, 2, 4);
            // orders d_1 | ... | d_n
            std::vector<Int> orders;
            Int d(1);
            for (long i = 0; i < n; ++i) {
                d *= rnd(rng, 1, 3);
                orders.push_back(d);
            }
            ZMat w = rnd_unimodular(rng, n, 10);
            // sub basis rows: d_i * w_i
            ZMat sub(n, n);
            for (long i = 0; i < n; ++i)
                for (long j = 0; j < n; ++j) sub(i, j) = orders[static_cast<size_t>(i)] * w(i, j);
            // classes u_i w_i + (element of sub), gcd(u_i, d_i) = 1
            std::vector<std::vector<Int>> cls;
            for (long i = 0; i < n; ++i) {
                Int u;
                do {
                    u = rnd(rng, 1, 12);
                } while (int_gcd(u, orders[static_cast<size_t>(i)]) != 1);
                std::vector<Int> v(static_cast<size_t>(n), Int(0));
                for (long j = 0; j < n; ++j) v[static_cast<size_t>(j)] = u * w(i, j);
                for (long k = 0; k < n; ++k) {
                    Int c = rnd(rng, -2, 2);
                    for (long j = 0; j < n; ++j) v[static_cast<size_t>(j)] += c * sub(k, j);
                }
                cls.push_back(v);
            }
            auto r = rational_basis_reps(sub, cls, orders);
            // postconditions by direct substitution
            QMat subq(sub);
            QMat sub_inv = inverse(subq);
            for (long i = 0; i < n; ++i) {
                const Int& di = orders[static_cast<size_t>(i)];
                const Int& ai = r.multipliers[static_cast<size_t>(i)];
                CHECK(ai >= 1);
                CHECK(ai <= di);
                CHECK(int_gcd(ai, di) == 1);
                // d_i rep_i = a_i lambda_i
                for (long j = 0; j < n; ++j)
                    CHECK(di * r.reps[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
                          ai * r.lambda[static_cast<size_t>(i)][static_cast<size_t>(j)]);
                // rep_i = cls_i mod sub
                std::vector<Rat> diff(static_cast<size_t>(n));
                for (long j = 0; j < n; ++j)
                    diff[static_cast<size_t>(j)] =
                        Rat(r.reps[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                            cls[static_cast<size_t>(i)][static_cast<size_t>(j)]);
                std::vector<Rat> coords(static_cast<size_t>(n), Rat(0));
                for (long j = 0; j < n; ++j)
                    for (long k = 0; k < n; ++k)
                        coords[static_cast<size_t>(j)] += diff[static_cast<size_t>(k)] * sub_inv(k, j);
                for (long j = 0; j < n; ++j) {
                    coords[static_cast<size_t>(j)].canonicalize();
                    CHECK(coords[static_cast<size_t>(j)].get_den() == 1);
                }
            }
            // lambda is a basis of sub
            QMat lam(n, n);
            for (long i = 0; i < n; ++i)
                for (long j = 0; j < n; ++j)
                    lam(i, j) = Rat(r.lambda[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            QMat coords = lam * sub_inv;
            CHECK(coords.is_integral());
            CHECK(abs(det(coords)) == Rat(1));
            ++done;
        }
    }
    SUBCASE("rejects non-divisor chains") {
        ZMat sub = Int(2) * ZMat::identity(2);
        std::vector<std::vector<Int>> cls = {{Int(1), Int(0)}, {Int(0), Int(1)}};
        CHECK_THROWS_AS(rational_basis_reps(sub, cls, {Int(2), Int(3)}), wrong_orders);
    }
}
