#include <doctest.h>

#include "hmv/boundary.hpp"
#include "hmv/prym.hpp"
#include "hmv/pseudocubic.hpp"
#include "testutil.hpp"

using namespace hmv;
using namespace hmvtest;

namespace {

bool nonsquare_2n1(long n) { return !is_square(Int(2 * n + 1)); }

} // namespace

TEST_CASE("mu tower arithmetic") {
    Int m(3); // n = 1
    MuElem mu = MuElem::mu(m);
    QuadElem mu2 = QuadElem(m, Rat(2), Rat(1)); // n+1 + sqrt(3)
    CHECK(mu * mu == MuElem{mu2, QuadElem::rational(m, 0)});
    std::mt19937 rng(3);
    for (int t = 0; t < 30; ++t) {
        MuElem a{rnd_quad(rng, m, 4), rnd_quad(rng, m, 4)};
        MuElem b{rnd_quad(rng, m, 4), rnd_quad(rng, m, 4)};
        MuElem c{rnd_quad(rng, m, 4), rnd_quad(rng, m, 4)};
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("characteristic polynomial of A_n") {
    SUBCASE("n = 1: constant coefficient is -1") {
        // -n^3 = -1 at n = 1
        CHECK(char_poly_check(1));
    }
    SUBCASE("n up to 50") {
        for (long n = 1; n <= 50; ++n) CHECK(char_poly_check(n));
    }
}

TEST_CASE("eigenvector identity in the mu tower") {
    for (long n = 1; n <= 50; ++n) {
        if (!nonsquare_2n1(n)) {
            CHECK_THROWS_AS(eigen_checks(n), square_discriminant);
            continue;
        }
        CHECK(eigen_checks(n));
    }
    CHECK_THROWS_AS(eigen_checks(4), square_discriminant); // 2n+1 = 9
}

TEST_CASE("dehn twist traces and hyperbolicity") {
    SUBCASE("k = 0 or l = 0 gives trace 2") {
        CHECK(dehn_trace(1, 0, 5) == QuadElem::rational(Int(3), 2));
        CHECK(dehn_trace(2, 7, 0) == QuadElem::rational(Int(5), 2));
        CHECK(!is_hyperbolic(1, 0, 5));
    }
    SUBCASE("trace formula 2 - kl mu^2") {
        std::mt19937 rng(5);
        for (int t = 0; t < 30; ++t) {
            long n = rnd(rng, 1, 12);
            if (!nonsquare_2n1(n)) continue;
            Int k(rnd(rng, -6, 6)), l(rnd(rng, -6, 6));
            QuadElem tr = dehn_trace(n, k, l);
            CHECK(tr == QuadElem(Int(2 * n + 1), Rat(2 - k * l * (n + 1)), Rat(-k * l)));
        }
    }
    SUBCASE("hyperbolicity thresholds") {
        // kl = 1: hyperbolic iff n >= 2 (mu^2 = n+1+sqrt(2n+1) vs 4)
        CHECK(!is_hyperbolic(1, 1, 1));
        for (long n : {2L, 3L, 5L, 6L, 7L}) CHECK(is_hyperbolic(n, 1, 1));
        // kl >= 2 or kl < 0: always hyperbolic
        for (long n : {1L, 2L, 3L, 5L}) {
            CHECK(is_hyperbolic(n, 1, 2));
            CHECK(is_hyperbolic(n, 2, 1));
            CHECK(is_hyperbolic(n, -1, 1));
            CHECK(is_hyperbolic(n, 3, 4));
        }
    }
}

TEST_CASE("prym data") {
    SUBCASE("discriminant 4(2n+1)") {
        CHECK(prym_data(1, 1).inst.D == 12);
        CHECK(prym_data(3, 1).inst.D == 28);
        CHECK_THROWS_AS(prym_data(4, 1), square_discriminant);
        CHECK_THROWS_AS(prym_data(12, 1), square_discriminant);
    }
    SUBCASE("residue ratio") {
        PrymData d = prym_data(2, 1);
        // r1~/r2~ = (1 + sqrt(2n+1))/2
        QuadElem ratio = d.residues[0] / d.residues[1];
        CHECK(ratio == Rat(1, 2) * (QuadElem::rational(d.inst.m, 1) +
                                    QuadElem::sqrt_rad(d.inst.m)));
    }
    SUBCASE("weights span a rank-3 lattice") {
        for (long n : {1L, 2L, 3L, 5L, 6L}) {
            for (int sign : {1, -1}) {
                PrymData d = prym_data(n, sign);
                QMat gram(3, 3);
                for (long i = 0; i < 3; ++i)
                    for (long j = 0; j < 3; ++j)
                        gram(i, j) = trp_pairing(d.weights[static_cast<size_t>(i)],
                                                 d.weights[static_cast<size_t>(j)]);
                CHECK(det(gram) != 0);
            }
        }
    }
}

TEST_CASE("dual of the weight lattice is spanned by the dual basis") {
    for (long n : {1L, 2L, 3L, 5L}) {
        for (int sign : {1, -1}) {
            PrymData d = prym_data(n, sign);
            FLattice I = FLattice::from_elements(
                d.inst.D, {d.weights[0], d.weights[1], d.weights[2]});
            auto s = dual_basis(d.weights);
            FLattice expect = FLattice::from_elements(d.inst.D, {s[0], s[1], s[2]});
            CHECK(dual_lattice(I) == expect);
        }
    }
}

TEST_CASE("prym pipeline") {
    SUBCASE("n = 1 explicit Q-values") {
        PrymReport rep = prym_pipeline(1, 1);
        CHECK(rep.all_pass());
        PrymData d = prym_data(1, 1);
        CHECK(q_map(d.weights[0]) == QVec3{{Rat(6), Rat(1), Rat(6)}});
        CHECK(q_map(d.weights[1]) == QVec3{{Rat(-12), Rat(0), Rat(0)}});
        CHECK(q_map(d.weights[2]) == QVec3{{Rat(6), Rat(-1), Rat(-6)}});
        CHECK(rep.equation == "p12/p23 = e(-(b12-b23))");
    }
    SUBCASE("all n <= 20 with 2n+1 nonsquare, both signs") {
        for (long n = 1; n <= 20; ++n) {
            if (!nonsquare_2n1(n)) continue;
            for (int sign : {1, -1}) {
                PrymReport rep = prym_pipeline(n, sign);
                CHECK(rep.all_pass());
            }
        }
    }
    SUBCASE("sign flip negates the third Q-coordinate") {
        for (long n : {1L, 2L, 5L}) {
            PrymData dp = prym_data(n, 1), dm = prym_data(n, -1);
            for (int i = 0; i < 3; ++i) {
                QVec3 qp = q_map(dp.weights[static_cast<size_t>(i)]);
                QVec3 qm = q_map(dm.weights[static_cast<size_t>(i)]);
                CHECK(qp.v[0] == qm.v[0]);
                CHECK(qp.v[1] == qm.v[1]);
                CHECK(qp.v[2] == -qm.v[2]);
            }
        }
    }
}
