#include <doctest.h>

#include "hmv/interval.hpp"
#include "hmv/io.hpp"
#include "hmv/linform.hpp"
#include "hmv/pc.hpp"
#include "hmv/quad.hpp"
#include "testutil.hpp"

using namespace hmv;
using namespace hmvtest;

TEST_CASE("discriminant validation") {
    CHECK_NOTHROW(Disc(5));
    CHECK_NOTHROW(Disc(8));
    CHECK_NOTHROW(Disc(-12));
    CHECK_THROWS_AS(Disc(0), invalid_discriminant);
    CHECK_THROWS_AS(Disc(2), invalid_discriminant);  // 2 mod 4
    CHECK_THROWS_AS(Disc(7), invalid_discriminant);  // 3 mod 4
    CHECK_THROWS_AS(Disc(16), invalid_discriminant); // square
    CHECK_THROWS_AS(Disc(25), invalid_discriminant);
}

TEST_CASE("gamma arithmetic") {
    for (Int D : {Int(5), Int(8), Int(13), Int(-12)}) {
        QuadElem g = QuadElem::gamma(Disc(D));
        // gamma * gamma^sigma = (D^2 - D)/4
        CHECK(g * g.conj() == QuadElem::rational(D, Rat(D * D - D, 4)));
        CHECK(g.trace() == Rat(D));
        CHECK(QuadElem::sqrt_rad(D) * QuadElem::sqrt_rad(D) == QuadElem::rational(D, Rat(D)));
    }
    // N(gamma_5) = (25 - 5)/4 = 5
    CHECK(QuadElem::gamma(Disc(5)).norm() == Rat(5));
}

TEST_CASE("norm of 1 + sqrt(-3) in D = -12 coordinates") {
    // 1 + sqrt(-3) = 1 + (1/2) sqrt(-12) = 7 + gamma_(-12)
    QuadElem x(Int(-12), Rat(1), Rat(1, 2));
    CHECK(x == QuadElem::rational(Int(-12), 7) + QuadElem::gamma(Disc(-12)));
    CHECK(x.norm() == Rat(4));
}

TEST_CASE("conj is an involution and ring map; norm multiplicative") {
    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        Int D = (t % 2 == 0) ? Int(13) : Int(-8);
        QuadElem a = rnd_quad(rng, D, 6), b = rnd_quad(rng, D, 6);
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
        CHECK((a * b).norm() == a.norm() * b.norm());
        CHECK((a + b).trace() == a.trace() + b.trace());
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(11);
    Int D(17);
    for (int t = 0; t < 60; ++t) {
        QuadElem a = rnd_quad(rng, D, 5), b = rnd_quad(rng, D, 5), c = rnd_quad(rng, D, 5);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) {
            CHECK(a * inv(a) == QuadElem::rational(D, 1));
            CHECK((b / a) * a == b);
        }
    }
    CHECK_THROWS_AS(inv(QuadElem::rational(D, 0)), division_by_zero);
    CHECK_THROWS_AS(QuadElem::rational(Int(5), 1) + QuadElem::rational(Int(8), 1),
                    discriminant_mismatch);
}

TEST_CASE("antiinvariant part") {
    Int D(5);
    CHECK(QuadElem::sqrt_rad(D).antiinv() == Rat(1));
    CHECK(QuadElem::gamma(Disc(D)).conj().antiinv() == Rat(-1, 2));
    CHECK(QuadElem::rational(D, Rat(9, 2)).antiinv() == Rat(0));
}

TEST_CASE("pseudo-cubic ring structure") {
    Int D(5);
    PCElem one = PCElem::one(D);
    std::mt19937 rng(3);
    for (int t = 0; t < 40; ++t) {
        PCElem a = rnd_pc(rng, D, 5), b = rnd_pc(rng, D, 5);
        CHECK(a * one == a);
        CHECK(a.sigma().sigma() == a);
        CHECK((a * b).sigma() == a.sigma() * b.sigma());
        CHECK(trp(a * b) == trp(b * a));
    }
    // (x, 0) * (0, q) = 0
    PCElem x(QuadElem::gamma(Disc(5)), Rat(0));
    PCElem q(QuadElem::rational(D, 0), Rat(7));
    CHECK((x * q).is_zero());
    CHECK((q * x).is_zero());
}

TEST_CASE("pseudo-trace values") {
    Int D(13);
    CHECK(trp(PCElem::one(D)) == Rat(3));
    CHECK(trp(PCElem(QuadElem::sqrt_rad(D), Rat(0))) == Rat(0));
    CHECK(trp(PCElem(QuadElem::gamma(Disc(D)), Rat(5))) == Rat(D + 5));
}

TEST_CASE("linear forms are a module over the field") {
    Int D(8);
    std::mt19937 rng(19);
    for (int t = 0; t < 20; ++t) {
        ZLinForm f = ZLinForm::variable(rnd_quad(rng, D, 4), 1) +
                     ZLinForm::constant(rnd_quad(rng, D, 4));
        ZLinForm g = ZLinForm::variable(rnd_quad(rng, D, 4), 2);
        QuadElem s = rnd_quad(rng, D, 4);
        CHECK(s * (f + g) == s * f + s * g);
        CHECK(f + g == g + f);
        CHECK(f.pure_in(1));
        bool sum_collapses_only_for_zero = !(f + g == f) || g.is_zero();
        CHECK(sum_collapses_only_for_zero);
    }
}

TEST_CASE("real embeddings are certified") {
    Int D(5);
    // iota3 is exact
    PCElem a(QuadElem::gamma(Disc(D)), Rat(7));
    RatInterval i3 = embed_real(a, RealEmbedding::iota3, 64);
    CHECK(i3.lo == Rat(7));
    CHECK(i3.hi == Rat(7));
    // iota1(sqrt(5)) around 2.2360679...
    RatInterval r = embed_real(PCElem(QuadElem::sqrt_rad(D), Rat(0)), RealEmbedding::iota1, 80);
    CHECK(r.lo > Rat(Int("22360679"), Int("10000000")));
    CHECK(r.hi < Rat(Int("22360680"), Int("10000000")));
    CHECK(r.width() <= pow2(-80));
    // iota1 + iota2 = trace on the quadratic part
    std::mt19937 rng(5);
    for (int t = 0; t < 10; ++t) {
        QuadElem x = rnd_quad(rng, D, 8);
        RatInterval s = embed_real(PCElem(x, Rat(0)), RealEmbedding::iota1, 64) +
                        embed_real(PCElem(x, Rat(0)), RealEmbedding::iota2, 64);
        CHECK(s.contains(x.trace()));
        CHECK(s.width() <= pow2(-60));
    }
    CHECK_THROWS_AS(embed_real(PCElem(QuadElem::sqrt_rad(Int(-12)), Rat(0)),
                               RealEmbedding::iota1, 32),
                    negative_discriminant);
}

TEST_CASE("pi and trig intervals") {
    RatInterval pi = pi_interval(64);
    CHECK(pi.lo > Rat(Int("31415926535897932"), Int("10000000000000000")));
    CHECK(pi.hi < Rat(Int("31415926535897933"), Int("10000000000000000")));
    CHECK(pi.width() <= pow2(-64));
    CHECK(cos2pi_interval(Rat(0), 48).contains(Rat(1)));
    CHECK(cos2pi_interval(Rat(1, 2), 48).contains(Rat(-1)));
    CHECK(sin2pi_interval(Rat(1, 4), 48).contains(Rat(1)));
    CHECK(cos2pi_interval(Rat(1, 4), 48).contains(Rat(0)));
    // cos(2 pi / 3) = -1/2
    CHECK(cos2pi_interval(Rat(1, 3), 48).contains(Rat(-1, 2)));
    CHECK(sin2pi_interval(Rat(1, 6), 48).contains(Rat(Int("8660254037844386468"), Int("10000000000000000000"))));
}

TEST_CASE("text grammar round-trips") {
    Int D(12);
    std::mt19937 rng(23);
    for (int t = 0; t < 40; ++t) {
        QuadElem q = rnd_quad(rng, D, 9);
        CHECK(parse_quad(q.str(), D) == q);
        PCElem p = rnd_pc(rng, D, 9);
        CHECK(parse_pc(p.str(), D) == p);
        Rat r = rnd_rat(rng, 30);
        CHECK(parse_rat(rat_str(r)) == r);
    }
    CHECK(parse_quad("1/2 - 3*sqrt(12)", D) == QuadElem(D, Rat(1, 2), Rat(-3)));
    CHECK(parse_quad(" sqrt(12) ", D) == QuadElem::sqrt_rad(D));
    CHECK_THROWS_AS(parse_quad("sqrt(5)", D), parse_error);
    CHECK_THROWS_AS(parse_rat("1/0"), parse_error);
}

TEST_CASE("ideal grammar") {
    Disc D(5);
    QIdeal I = parse_ideal("<11, 1 + g>", D);
    CHECK(I.n() == 11);
    CHECK(I.a() == 1);
    CHECK(I.b() == 1);
    CHECK(parse_ideal(I.str(), D) == I);
    QIdeal J = parse_ideal("<2, 2*g>", Disc(8));
    CHECK(parse_ideal(J.str(), Disc(8)) == J);
}
