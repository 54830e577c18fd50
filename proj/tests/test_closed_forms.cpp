#include <catch2/catch_amalgamated.hpp>

#include "hodgeint/closed_forms.hpp"
#include "hodgeint/engine.hpp"

using namespace hodgeint;

TEST_CASE("b_closed") {
    CHECK(b_closed(0) == Rat(1));
    CHECK(b_closed(1) == Rat(1, 24));
    CHECK(b_closed(2) == Rat(7, 5760));
    CHECK(b_closed(3) == Rat(31, 967680));
    CHECK_THROWS_AS(b_closed(-1), domain_error);
}

TEST_CASE("c_closed_series") {
    Series c = c_closed_series(8);
    CHECK(c[0] == Rat(0));
    CHECK(c[2] == Rat(1, 24));
    CHECK(c[4] == Rat(1, 480));
    CHECK_THROWS_AS(c_closed_series(1), domain_error);
}

TEST_CASE("C_closed") {
    CHECK(C_closed(0, 5) == Rat(1, 125));
    CHECK(C_closed(1, 3) == Rat(1, 36));
    CHECK(C_closed(2, 1) == Rat(1, 240));
    CHECK(C_closed(3, 2) == abs(bernoulli(6)) * Rat(8) / (Rat(6) * factorial(4)));
    CHECK_THROWS_AS(C_closed(2, 0), domain_error);
    CHECK_THROWS_AS(C_closed(2, -1), domain_error);
}

TEST_CASE("lambda3_closed") {
    CHECK(lambda3_closed(2) == Rat(1, 2880));
    // (1/42)/6 * (1/30)/4 * 1/24
    CHECK(lambda3_closed(3) == Rat(1, 725760));
    CHECK_THROWS_AS(lambda3_closed(1), domain_error);
}

TEST_CASE("lamg_closed") {
    CHECK(lamg_closed(1, {0}) == Rat(1, 24));
    CHECK(lamg_closed(1, {1, 0}) == Rat(1, 24));
    CHECK(lamg_closed(2, {1, 1, 1}) == Rat(0)); // sum is 3, gate needs 4
    CHECK(lamg_closed(2, {2, 1, 1}) == multinomial(4, {2, 1, 1}) * b_closed(2));
    CHECK_THROWS_AS(lamg_closed(1, {-1, 2}), domain_error);
}

TEST_CASE("c_closed_series matches the engine one-point integrals") {
    Engine e;
    Series c = c_closed_series(6);
    for (int g = 1; g <= 3; ++g) CHECK(c[2 * g] == e.one_point(g, 2 * g - 1, g - 1));
}

TEST_CASE("lamg_closed matches the engine at low genus") {
    Engine e;
    CHECK(e.hodge_integral({1, {1, 0}, {1}}) == lamg_closed(1, {1, 0}));
    CHECK(e.hodge_integral({2, {3}, {0, 1}}) == lamg_closed(2, {3}));
    CHECK(e.hodge_integral({2, {2, 2}, {0, 1}}) == lamg_closed(2, {2, 2}));
}

TEST_CASE("lamgg_closed") {
    Rat base(7, 123); // arbitrary: the formula is linear in the base integral
    CHECK(lamgg_closed(2, {1}, base) == base);
    CHECK(lamgg_closed(2, {1, 1}, base) == Rat(3) * base);
    CHECK(lamgg_closed(2, {2}, base) == Rat(0)); // gate: sum must be g-2+n
    CHECK_THROWS_AS(lamgg_closed(2, {0, 2}, base), domain_error);
    CHECK_THROWS_AS(lamgg_closed(1, {1}, base), domain_error);
}

TEST_CASE("ihop_check") {
    auto p1 = ihop_check(1);
    CHECK(p1.lhs == Rat(1, 24));
    CHECK(p1.rhs == Rat(1, 24));
    auto p2 = ihop_check(2);
    CHECK(p2.lhs == Rat(1, 480));
    CHECK(p2.rhs == Rat(1, 480));
    for (int g = 1; g <= 8; ++g) {
        auto p = ihop_check(g);
        CHECK(p.lhs == p.rhs);
    }
}

TEST_CASE("bernoulli identity checks") {
    for (int g = 1; g <= 10; ++g) {
        for (const auto& check : bernoulli_identity_checks(g)) {
            INFO(check.id);
            CHECK(check.pass());
        }
    }
    // Lemma 2 at g=2 in explicit numbers: 2 b_0 b_2 + b_1^2 = 1/240.
    auto checks = bernoulli_identity_checks(2);
    CHECK(checks[0].lhs == Rat(1, 240));
    CHECK(checks[0].rhs == Rat(1, 240));
    // Lemma 3 at k=1: coefficient 1/24.
    CHECK(bernoulli_identity_checks(1)[1].lhs == Rat(1, 24));
}
