#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "charp/error.hpp"
#include "charp/invariants.hpp"
#include "charp/parse.hpp"
#include "util.hpp"

using namespace charp;
using testutil::P;
using testutil::random_poly;
using testutil::ring;

namespace {

RingPtr four_vars() { return ring("GF(2)[x0,x1,x2,x3]"); }

}  // namespace

TEST_CASE("the shift rotates variables with wraparound") {
    auto R = four_vars();
    CyclicAction act(R);
    CHECK(act.order() == 4);
    CHECK(apply_action(P("x0", R), act, 1) == P("x1", R));
    CHECK(apply_action(P("x3", R), act, 1) == P("x0", R));
    CHECK(apply_action(P("x1", R), act, -1) == P("x0", R));
    CHECK(apply_action(P("x0*x2+x1*x3", R), act, 1) == P("x0*x2+x1*x3", R));
    auto f = P("x0^2*x1+x2", R);
    CHECK(apply_action(f, act, 0) == f);
    CHECK(apply_action(f, act, 4) == f);
    CHECK(apply_action(apply_action(f, act, 3), act, 1) == f);
    CHECK(rotate_monomial(Monomial({1, 0, 2, 0}), 1) == Monomial({0, 1, 0, 2}));
}

TEST_CASE("the shift refuses quotient contexts") {
    auto R = ring("GF(2)[x,y,z]");
    auto Q = RingCtx::quotient(R, P("z^2+x^2*y+x*y^2", R));
    CHECK_THROWS_AS(CyclicAction{Q}, DomainError);
}

TEST_CASE("the shift is a ring map of finite order") {
    auto R = four_vars();
    CyclicAction act(R);
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_poly(rng, R, 2, 4);
        auto g = random_poly(rng, R, 2, 4);
        CHECK(apply_action(f * g, act, 1) == apply_action(f, act, 1) * apply_action(g, act, 1));
        CHECK(apply_action(f + g, act, 1) == apply_action(f, act, 1) + apply_action(g, act, 1));
        CHECK(apply_action(f, act, act.order()) == f);
    }
}

TEST_CASE("invariance testing") {
    auto R = four_vars();
    CyclicAction act(R);
    CHECK(is_invariant(P("x0+x1+x2+x3", R), act));
    CHECK_FALSE(is_invariant(P("x0", R), act));
    CHECK(is_invariant(P("x0*x2+x1*x3", R), act));
    CHECK(is_invariant(P("1", R), act));
    CHECK(is_invariant(Polynomial(R), act));
}

TEST_CASE("orbit sums in low degree") {
    auto R = four_vars();
    CyclicAction act(R);
    auto d0 = orbit_sum_basis(act, 0);
    REQUIRE(d0.size() == 1);
    CHECK(d0[0].is_one());
    auto d1 = orbit_sum_basis(act, 1);
    REQUIRE(d1.size() == 1);
    CHECK(d1[0] == P("x0+x1+x2+x3", R));
    auto d2 = orbit_sum_basis(act, 2);
    REQUIRE(d2.size() == 3);
    CHECK(to_string(d2[0]) == "x0^2+x1^2+x2^2+x3^2");
    CHECK(to_string(d2[1]) == "x0*x1+x1*x2+x0*x3+x2*x3");
    CHECK(to_string(d2[2]) == "x0*x2+x1*x3");
}

TEST_CASE("orbit sums are invariant and have invariant products") {
    auto R = four_vars();
    CyclicAction act(R);
    for (std::int64_t d : {1, 2, 3, 4}) {
        auto basis = orbit_sum_basis(act, d);
        for (const auto& b : basis) CHECK(is_invariant(b, act));
        if (basis.size() >= 2) CHECK(is_invariant(basis[0] * basis[1], act));
    }
}

TEST_CASE("orbit counts by averaging fixed monomials") {
    auto R = four_vars();
    CyclicAction act(R);
    CHECK(hilbert_burnside(act, 2) == 3);
    CHECK(hilbert_burnside(act, 3) == 5);
    CHECK(hilbert_burnside(act, 4) == 10);
    CHECK(hilbert_linear(act, 0) == 1);
    CHECK(hilbert_linear(act, 1) == 1);
    CHECK(hilbert_linear(act, 2) == 3);
}

TEST_CASE("three routes to the invariant dimensions agree through degree 8") {
    auto R = four_vars();
    CyclicAction act(R);
    const std::vector<std::int64_t> expected{1, 1, 3, 5, 10, 14, 22, 30, 43};
    for (std::int64_t d = 0; d <= 8; ++d) {
        auto burnside = hilbert_burnside(act, d);
        CHECK(burnside == expected[static_cast<std::size_t>(d)]);
        CHECK(hilbert_linear(act, d) == burnside);
        CHECK(static_cast<std::int64_t>(orbit_sum_basis(act, d).size()) == burnside);
    }
}

TEST_CASE("dimensions for other variable counts") {
    auto R3 = ring("GF(3)[a,b,c]");
    CyclicAction act3(R3);
    for (std::int64_t d = 0; d <= 6; ++d) {
        CHECK(hilbert_burnside(act3, d) == hilbert_linear(act3, d));
        CHECK(static_cast<std::int64_t>(orbit_sum_basis(act3, d).size()) ==
              hilbert_burnside(act3, d));
    }
    auto R2 = ring("GF(5)[s,t]");
    CyclicAction act2(R2);
    CHECK(hilbert_burnside(act2, 2) == 2);  // s^2+t^2 and s*t
    CHECK(hilbert_linear(act2, 2) == 2);
}

TEST_CASE("a lone power sum stalls in degree two") {
    auto R = four_vars();
    CyclicAction act(R);
    auto report = generates_up_to(act, {P("x0+x1+x2+x3", R)}, 2);
    CHECK_FALSE(report.success);
    REQUIRE(report.first_deficient_degree.has_value());
    CHECK(*report.first_deficient_degree == 2);
    REQUIRE(report.rows.size() == 3);
    CHECK(report.rows[0].d == 0);
    CHECK(report.rows[0].span == 1);
    CHECK(report.rows[0].dim == 1);
    CHECK(report.rows[1].span == 1);
    CHECK(report.rows[1].dim == 1);
    CHECK(report.rows[2].span == 1);  // e1^2 collapses to the power sum in char 2
    CHECK(report.rows[2].dim == 3);
}

TEST_CASE("orbit sums through the bound generate trivially") {
    auto R = four_vars();
    CyclicAction act(R);
    std::vector<Polynomial> gens;
    for (std::int64_t d = 1; d <= 3; ++d)
        for (auto& b : orbit_sum_basis(act, d)) gens.push_back(b);
    auto report = generates_up_to(act, gens, 3);
    CHECK(report.success);
    CHECK_FALSE(report.first_deficient_degree.has_value());
    for (const auto& row : report.rows) CHECK(row.span == row.dim);
}

TEST_CASE("the empty generating set covers only the constants") {
    auto R = four_vars();
    CyclicAction act(R);
    auto trivial = generates_up_to(act, {}, 0);
    CHECK(trivial.success);
    auto deficient = generates_up_to(act, {}, 2);
    CHECK_FALSE(deficient.success);
    REQUIRE(deficient.first_deficient_degree.has_value());
    CHECK(*deficient.first_deficient_degree == 1);
}

TEST_CASE("generator validation") {
    auto R = four_vars();
    CyclicAction act(R);
    CHECK_THROWS_AS(generates_up_to(act, {P("x0", R)}, 2), DomainError);
    CHECK_THROWS_AS(generates_up_to(act, {P("x0+x1+x2+x3+1", R)}, 2), DomainError);
    CHECK_THROWS_AS(generates_up_to(act, {P("1", R)}, 2), DomainError);
    CHECK_THROWS_AS(generates_up_to(act, {Polynomial(R)}, 2), DomainError);
}
