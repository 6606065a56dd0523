#include "doctest.h"
#include "support.hpp"

#include "bianchi/errors.hpp"

using namespace bianchi;
using namespace testing_support;

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/4") == make_rational(3, 4));
    CHECK(parse_rational("-6/8") == make_rational(-3, 4));
    CHECK(parse_rational("+5") == 5);
    CHECK(parse_rational("16/1") == 16);
    CHECK(to_string(parse_rational("16/1")) == "16");
    CHECK(to_string(make_rational(-2, 4)) == "-1/2");
    for (const char* bad : {"", "1/0", "0.5", "1/", "/2", "a", "1 /2", "1/-2", "--1"})
        CHECK_THROWS_AS(parse_rational(bad), ParseError);
}

TEST_CASE("surd comparisons") {
    // 1 + sqrt(2) vs 2.41 and 2.42
    const SurdValue v(1, 1, 2);
    CHECK(surd_lt(SurdValue::rational(make_rational(241, 100), 2), v));
    CHECK(surd_lt(v, SurdValue::rational(make_rational(242, 100), 2)));
    CHECK((v * v) == SurdValue(3, 2, 2));
    CHECK((v - v).sign() == 0);
    CHECK(SurdValue(-3, 2, 2).sign() == -1);  // -3 + 2 sqrt2 < 0
    CHECK(SurdValue(3, -2, 2).sign() == 1);
    // sqrt(9) <= sqrt(4) + 1 (equality), sqrt(10) > sqrt(4) + 1
    CHECK(sqrt_le_sqrt_plus(9, 4, SurdValue::rational(1, 2)));
    CHECK_FALSE(sqrt_le_sqrt_plus(10, 4, SurdValue::rational(1, 2)));
    CHECK_THROWS_AS(SurdValue(1, 1, 2) + SurdValue(1, 1, 3), InvalidArgument);
}

TEST_CASE("ring construction") {
    CHECK_THROWS_AS(RingContext(0), InvalidDiscriminant);
    CHECK_THROWS_AS(RingContext(-1), InvalidDiscriminant);
    CHECK_THROWS_AS(RingContext(4), InvalidDiscriminant);
    CHECK_THROWS_AS(RingContext(12), InvalidDiscriminant);
    CHECK_NOTHROW(RingContext(30));
    CHECK(RingContext(3).omega_half());
    CHECK_FALSE(RingContext(5).omega_half());
}

TEST_CASE("norms and units") {
    const RingContext r1(1), r2(2), r3(3);
    CHECK(r1.norm({0, 0}) == 0);
    CHECK(r1.norm({1, 1}) == 2);
    CHECK(r3.norm({0, 1}) == 1);
    CHECK(r2.units() == std::vector<AlgInt>{{-1, 0}, {1, 0}});
    CHECK(r1.unit_count() == 4);
    CHECK(r3.unit_count() == 6);
    for (AlgInt u : r3.units()) CHECK(r3.norm(u) == 1);
    CHECK(RingContext(7).unit_count() == 2);
}

TEST_CASE("multiplication agrees with explicit coordinates") {
    Rng rng(11);
    for (Int d : {1, 2, 3, 5, 7, 11, 19, 23}) {
        const RingContext ctx(d);
        const Coords k{d};
        for (int i = 0; i < 200; ++i) {
            const AlgInt x = random_alg(rng, 30), y = random_alg(rng, 30);
            const KElem p = k.mul(k.of(x), k.of(y));
            CHECK(k.eq(k.of(ctx.mul(x, y)), p));
            CHECK(ctx.norm(x) == oracle_norm(d, x));
            CHECK(k.eq(k.of(ctx.conj(x)), k.conj(k.of(x))));
            CHECK(ctx.to_field(x) == FieldElem{k.of(x).x, k.of(x).y});
        }
    }
}

TEST_CASE("ideal norm and coprimality") {
    const RingContext r5(5);
    CHECK(r5.ideal_norm({1, 0}, {7, 3}) == 1);
    CHECK(r5.ideal_norm({2, 0}, {1, 1}) == 2);
    CHECK(r5.ideal_norm({3, 0}, {1, 1}) == 3);
    CHECK(r5.is_coprime({2, 0}, {0, 1}));
    CHECK_FALSE(r5.is_coprime({2, 0}, {1, 1}));
    for (Int d : {1, 2, 3, 7})
        CHECK(RingContext(d).is_coprime({1, 0}, {0, 0}));
    const RingContext r1(1);
    CHECK(r1.ideal_norm({3, 0}, {3, 0}) == 9);
    CHECK(r1.ideal_norm({2, 0}, {1, 1}) == 2);
}

TEST_CASE("round_to_lattice") {
    const RingContext r1(1);
    CHECK(r1.round_to_lattice({make_rational(3, 4), make_rational(1, 4)}) == AlgInt{1, 0});
    CHECK(r1.round_to_lattice({}) == AlgInt{0, 0});
    // four equidistant corners: 0, 1, i, 1 + i; lexicographically least is 0
    CHECK(r1.round_to_lattice({make_rational(1, 2), make_rational(1, 2)}) == AlgInt{0, 0});
    for (Int d : {2, 3, 5, 7}) CHECK(RingContext(d).round_to_lattice({}) == AlgInt{0, 0});
}

TEST_CASE("covering radius against a grid") {
    CHECK(RingContext(1).covering_radius_sq() == make_rational(1, 2));
    CHECK(RingContext(3).covering_radius_sq() == make_rational(1, 3));
    CHECK(RingContext(2).covering_radius_sq() == make_rational(3, 4));
    for (Int d : {1, 2, 3, 5, 6, 7, 11, 19}) {
        const RingContext ctx(d);
        const double grid = oracle_covering_grid(d, 64);
        const double exact = ctx.covering_radius_sq().get_d();
        // a grid point lies within half a cell diagonal of the farthest point
        const double cell = (1.0 + std::sqrt(static_cast<double>(d))) / 64;
        CHECK(grid <= exact + 1e-12);
        CHECK(std::sqrt(exact) <= std::sqrt(grid) + cell);
    }
}

TEST_CASE("bezout") {
    const RingContext r1(1), r3(3), r5(5);
    const auto check_identity = [](const RingContext& ctx, AlgInt a, AlgInt b, BezoutPair p) {
        return ctx.mul(a, p.x) + ctx.mul(b, p.y) == AlgInt{1, 0};
    };
    CHECK(check_identity(r1, {1, 0}, {0, 0}, r1.any_bezout({1, 0}, {0, 0})));
    CHECK(check_identity(r1, {3, 0}, {2, 0}, r1.any_bezout({3, 0}, {2, 0})));
    CHECK(check_identity(r5, {2, 0}, {0, 1}, r5.any_bezout({2, 0}, {0, 1})));
    CHECK_THROWS_AS(r5.any_bezout({2, 0}, {1, 1}), NotCoprime);
    CHECK_FALSE(r5.try_bezout({2, 0}, {1, 1}).has_value());

    struct Case {
        const RingContext* ctx;
        AlgInt a, b;
    };
    for (const Case& c : {Case{&r1, {3, 0}, {2, 0}}, Case{&r5, {2, 0}, {0, 1}}, Case{&r3, {2, 0}, {0, 1}}}) {
        const BezoutPair p = c.ctx->bezout_bounded(c.a, c.b);
        CHECK(check_identity(*c.ctx, c.a, c.b, p));
        const SurdValue& c2 = c.ctx->c_d_sq();
        CHECK(surd_le(SurdValue::rational(c.ctx->norm(p.x), c2.m()), c2 * Rational(c.ctx->norm(c.b))));
        CHECK(surd_le(SurdValue::rational(c.ctx->norm(p.y), c2.m()), c2 * Rational(c.ctx->norm(c.a))));
    }
}

TEST_CASE("C_d closed forms") {
    // C_1 = 1 + 1/sqrt2, C_2 = 1 + sqrt3/2, C_3 = 1 + 1/sqrt3
    CHECK(std::abs(RingContext(1).c_d().to_double() - (1 + 1 / std::sqrt(2.0))) < 1e-12);
    CHECK(std::abs(RingContext(2).c_d().to_double() - (1 + std::sqrt(3.0) / 2)) < 1e-12);
    CHECK(std::abs(RingContext(3).c_d().to_double() - (1 + 1 / std::sqrt(3.0))) < 1e-12);
    for (Int d : {1, 2, 3, 5, 7, 11}) {
        const RingContext ctx(d);
        CHECK(ctx.c_d_sq() == ctx.c_d() * ctx.c_d());
        CHECK(std::abs(ctx.c_d().to_double() - (1 + std::sqrt(ctx.eps_sq().get_d()))) < 1e-12);
    }
}

TEST_CASE("principality") {
    const RingContext r1(1), r5(5);
    const Principality p = r5.is_principal({2, 0}, {1, 1});
    CHECK_FALSE(p.principal);
    CHECK_FALSE(p.generator.has_value());
    CHECK(r5.is_principal({7, 2}, {0, 0}).generator == AlgInt{7, 2});
    const Principality q = r1.is_principal({3, 0}, {3, 0});
    REQUIRE(q.principal);
    CHECK(r1.norm(*q.generator) == 9);
    CHECK(r1.divide({3, 0}, *q.generator).has_value());
}
