#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "charp/error.hpp"
#include "charp/parse.hpp"
#include "charp/perfection.hpp"
#include "util.hpp"

using namespace charp;
using testutil::P;
using testutil::random_poly;
using testutil::ring;

namespace {

/// Random element of the perfection: random body at a random level <= 2,
/// normalized by the constructor.
PerfElement random_perf(std::mt19937_64& rng, const RingPtr& R) {
    auto body = random_poly(rng, R, 2, 3);
    int level = static_cast<int>(rng() % 3);
    return PerfElement(std::move(body), level);
}

}  // namespace

TEST_CASE("root extraction normalizes representatives") {
    auto R = ring("GF(2)[x,y]");
    PerfElement a(P("x^2*y^2", R), 1);
    CHECK(a.body() == P("x*y", R));
    CHECK(a.level() == 0);
    PerfElement b(P("x+y", R), 1);
    CHECK(b.body() == P("x+y", R));
    CHECK(b.level() == 1);
    auto R1 = ring("GF(2)[x]");
    PerfElement c(P("x^4", R1), 2);
    CHECK(c.body() == P("x", R1));
    CHECK(c.level() == 0);
    PerfElement z(Polynomial(R), 3);
    CHECK(z.is_zero());
    CHECK(z.level() == 0);
    CHECK(PerfElement(P("1", R), 2).is_one());
}

TEST_CASE("construction guards") {
    auto R = ring("GF(2)[x,y,z]");
    CHECK_THROWS_AS(PerfElement(P("x", R), -1), DomainError);
    CHECK_THROWS_AS(PerfElement(P("x", R), 7), ResourceLimitError);
    auto Q = RingCtx::quotient(R, P("z^2+x^2*y+x*y^2", R));
    CHECK_THROWS_AS(PerfElement(P("x", Q), 0), DomainError);
}

TEST_CASE("representatives at higher levels") {
    auto R = ring("GF(3)[x,y]");
    PerfElement a(P("x+y", R), 1);
    CHECK(a.body_at_level(1) == a.body());
    CHECK(a.body_at_level(2) == frobenius_power(P("x+y", R), 1));
    CHECK(a.body_at_level(3) == frobenius_power(P("x+y", R), 2));
    CHECK_THROWS_AS(a.body_at_level(0), DomainError);
}

TEST_CASE("equality after normalization") {
    auto R = ring("GF(2)[x,y]");
    CHECK(PerfElement(P("x^2", R), 1) == PerfElement(P("x", R), 0));
    CHECK(PerfElement(P("x+y", R), 1) != PerfElement(P("x+y", R), 0));
    CHECK(PerfElement(P("x^4+y^4", R), 2) == PerfElement(P("x+y", R), 0));
    CHECK(PerfElement(P("x^2*y^4+x^4*y^2", R), 1) == PerfElement(P("x*y^2+x^2*y", R), 0));
}

TEST_CASE("arithmetic lifts to the common level") {
    auto R1 = ring("GF(2)[x]");
    PerfElement x1(P("x", R1), 1);
    CHECK(perf_mul(x1, x1) == PerfElement(P("x", R1), 0));
    CHECK(perf_add(x1, x1).is_zero());
    auto R = ring("GF(2)[x,y]");
    PerfElement xr(P("x", R), 1), yr(P("y", R), 1);
    auto sum = perf_add(xr, yr);
    CHECK(sum.body() == P("x+y", R));
    CHECK(sum.level() == 1);
    auto mixed = perf_mul(PerfElement(P("x", R), 1), PerfElement(P("x", R), 0));
    CHECK(mixed == PerfElement(P("x^3", R), 1));
}

TEST_CASE("ring axioms hold on random samples") {
    std::mt19937_64 rng(2024);
    for (std::int64_t p : {2, 3, 5}) {
        auto R = ring("GF(" + std::to_string(p) + ")[x,y]");
        for (int trial = 0; trial < 15; ++trial) {
            auto a = random_perf(rng, R);
            auto b = random_perf(rng, R);
            auto c = random_perf(rng, R);
            CHECK(perf_add(a, b) == perf_add(b, a));
            CHECK(perf_mul(a, b) == perf_mul(b, a));
            CHECK(perf_add(perf_add(a, b), c) == perf_add(a, perf_add(b, c)));
            CHECK(perf_mul(perf_mul(a, b), c) == perf_mul(a, perf_mul(b, c)));
            CHECK(perf_mul(a, perf_add(b, c)) == perf_add(perf_mul(a, b), perf_mul(a, c)));
            CHECK(perf_add(a, PerfElement(Polynomial(R), 0)) == a);
            CHECK(perf_mul(a, PerfElement(P("1", R), 0)) == a);
        }
    }
}

TEST_CASE("the power map is bijective with explicit inverse") {
    auto R = ring("GF(2)[x,y]");
    PerfElement a(P("x+y", R), 1);
    CHECK(perf_frobenius(a) == PerfElement(P("x+y", R), 0));
    CHECK(perf_root(PerfElement(P("x", R), 0)) == PerfElement(P("x", R), 1));
    std::mt19937_64 rng(3030);
    for (std::int64_t p : {2, 3}) {
        auto S = ring("GF(" + std::to_string(p) + ")[x,y]");
        for (int trial = 0; trial < 15; ++trial) {
            auto b = random_perf(rng, S);
            CHECK(perf_root(perf_frobenius(b)) == b);
            CHECK(perf_frobenius(perf_root(b)) == b);
            if (p == 2) CHECK(perf_frobenius(b) == perf_mul(b, b));
        }
    }
    Limits shallow;
    shallow.max_level = 2;
    auto T = ring("GF(2)[x]", MonomialOrder::grevlex, shallow);
    PerfElement deep(P("x", T), 2);
    CHECK_THROWS_AS(perf_root(deep), ResourceLimitError);
}

TEST_CASE("divisibility at the common level") {
    auto R1 = ring("GF(2)[x]");
    CHECK(perf_divides(PerfElement(P("x", R1), 1), PerfElement(P("x", R1), 0)));
    auto R = ring("GF(2)[x,y]");
    CHECK_FALSE(perf_divides(PerfElement(P("x", R), 0), PerfElement(P("y", R), 0)));
    auto a = PerfElement(P("x+y", R), 1);
    CHECK(perf_divides(a, a));
    PerfElement zero(Polynomial(R), 0);
    CHECK_FALSE(perf_divides(zero, a));
    CHECK(perf_divides(zero, zero));
    CHECK(perf_divides(a, zero));
}

TEST_CASE("gcd in the perfection") {
    auto R = ring("GF(2)[x,y]");
    auto g = perf_gcd(PerfElement(P("x*y^2", R), 1), PerfElement(P("x^2*y", R), 1));
    CHECK(g == PerfElement(P("x*y", R), 1));
    auto R1 = ring("GF(2)[x]");
    auto h = perf_gcd(PerfElement(P("x", R1), 1), PerfElement(P("x", R1), 2));
    CHECK(h == PerfElement(P("x", R1), 2));
    auto a = PerfElement(P("x^2+x*y", R), 1);
    CHECK(perf_gcd(a, a) == a);
    PerfElement zero(Polynomial(R), 0);
    CHECK(perf_gcd(a, zero) == a);
    CHECK(perf_gcd(zero, zero).is_zero());
}

TEST_CASE("gcd laws on random samples") {
    std::mt19937_64 rng(4040);
    for (std::int64_t p : {2, 3, 5}) {
        auto R = ring("GF(" + std::to_string(p) + ")[x,y]");
        for (int trial = 0; trial < 12; ++trial) {
            auto a = random_perf(rng, R);
            auto b = random_perf(rng, R);
            if (a.is_zero() && b.is_zero()) continue;
            auto g = perf_gcd(a, b);
            if (!g.is_zero()) {
                CHECK(perf_divides(g, a));
                CHECK(perf_divides(g, b));
            }
            if (!a.is_zero() && !b.is_zero()) {
                auto l = perf_lcm(a, b);
                auto prod = perf_mul(a, b);
                auto gl = perf_mul(g, l);
                // associates: same level and proportional bodies
                CHECK(gl.level() == prod.level());
                CHECK(gl.body().monic() == prod.body().monic());
                CHECK(perf_divides(a, l));
                CHECK(perf_divides(b, l));
            }
        }
    }
}

TEST_CASE("lcm conventions") {
    auto R = ring("GF(2)[x,y]");
    PerfElement zero(Polynomial(R), 0);
    auto a = PerfElement(P("x", R), 1);
    CHECK(perf_lcm(a, zero).is_zero());
    CHECK(perf_lcm(zero, zero).is_zero());
    CHECK(perf_lcm(PerfElement(P("x", R), 0), PerfElement(P("y", R), 0)) ==
          PerfElement(P("x*y", R), 0));
}

TEST_CASE("colon generators") {
    auto R = ring("GF(2)[x,y]");
    auto c = perf_colon(PerfElement(P("x*y^2", R), 1), PerfElement(P("x^2*y", R), 1));
    CHECK(c == PerfElement(P("y", R), 1));
    auto a = PerfElement(P("x^2+x*y", R), 1);
    CHECK(perf_colon(a, a).is_one());
    CHECK(perf_colon(a, PerfElement(P("1", R), 0)) == a);
    PerfElement zero(Polynomial(R), 0);
    CHECK(perf_colon(zero, a).is_zero());
    CHECK(perf_colon(a, zero).is_one());
    CHECK_THROWS_AS(perf_colon(zero, zero), DegenerateInputError);
}

TEST_CASE("colon solves the divisibility inclusion") {
    std::mt19937_64 rng(5050);
    for (std::int64_t p : {2, 5}) {
        auto R = ring("GF(" + std::to_string(p) + ")[x,y]");
        for (int trial = 0; trial < 12; ++trial) {
            auto a = random_perf(rng, R);
            auto b = random_perf(rng, R);
            if (a.is_zero() || b.is_zero()) continue;
            auto c = perf_colon(a, b);
            CHECK(perf_divides(a, perf_mul(c, b)));
        }
    }
}

TEST_CASE("level-0 colon commutes with the power map") {
    std::mt19937_64 rng(6060);
    for (std::int64_t p : {2, 3}) {
        auto R = ring("GF(" + std::to_string(p) + ")[x,y]");
        for (int trial = 0; trial < 10; ++trial) {
            auto a = PerfElement(testutil::random_nonzero_poly(rng, R, 2, 3), 0);
            auto b = PerfElement(testutil::random_nonzero_poly(rng, R, 2, 3), 0);
            for (int e : {1, 2}) {
                auto lhs = perf_colon(PerfElement(frobenius_power(a.body(), e), 0),
                                      PerfElement(frobenius_power(b.body(), e), 0));
                auto rhs = frobenius_power(perf_colon(a, b).body(), e);
                CHECK(lhs.body() == rhs.monic());
            }
        }
    }
}

TEST_CASE("closure search on the cusp quotient") {
    auto R = ring("GF(2)[x,y,z]");
    auto Q = RingCtx::quotient(R, P("z^2+x^2*y+x*y^2", R));
    Ideal I(R, parse_poly_list("x,y", R));
    auto res = frobenius_closure_member(P("z", R), I, *Q, 4);
    REQUIRE(res.found());
    CHECK(*res.e == 1);
    CHECK(res.bound == 4);
}

TEST_CASE("closure search is inconclusive off the ideal in a regular ring") {
    auto R = ring("GF(2)[x,y]");
    Ideal I(R, {P("x", R)});
    auto res = frobenius_closure_member(P("y", R), I, *R, 3);
    CHECK_FALSE(res.found());
    CHECK(res.bound == 3);
    auto hit = frobenius_closure_member(P("x*y+x", R), I, *R, 3);
    REQUIRE(hit.found());
    CHECK(*hit.e == 1);
}

TEST_CASE("text form round-trips through the parser") {
    auto R = ring("GF(2)[x,y]");
    auto a = PerfElement(P("x+y", R), 1);
    CHECK(to_string(a) == "root(x+y,1)");
    CHECK(to_string(PerfElement(P("x", R), 0)) == "root(x,0)");
    CHECK(parse_perf("root(x+y,1)", R) == a);
    CHECK(parse_perf("root(x^2,1)", R) == PerfElement(P("x", R), 0));
    CHECK(parse_perf("x*y+1", R) == PerfElement(P("x*y+1", R), 0));
    CHECK_THROWS_AS(parse_perf("root(x+y)", R), ParseError);
    CHECK_THROWS_AS(parse_perf("root(x,-1)", R), ParseError);
    std::mt19937_64 rng(7070);
    for (int trial = 0; trial < 20; ++trial) {
        auto b = random_perf(rng, R);
        CHECK(parse_perf(to_string(b), R) == b);
    }
}
