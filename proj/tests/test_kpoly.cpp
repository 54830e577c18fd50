#include <catch2/catch_amalgamated.hpp>

#include "hodgeint/json_io.hpp"
#include "hodgeint/kpoly.hpp"

using namespace hodgeint;

TEST_CASE("KPoly canonical form") {
    CHECK(KPoly(0).is_zero());
    CHECK(KPoly(0).degree() == -1);
    CHECK(KPoly(std::vector<Rat>{Rat(1), Rat(0), Rat(0)}).degree() == 0);
    KPoly p = KPoly::k() * KPoly::k() + KPoly(3);
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == Rat(3));
    CHECK(p.coeff(1) == Rat(0));
    CHECK(p.coeff(2) == Rat(1));
    CHECK((p - p).is_zero());
}

TEST_CASE("KPoly arithmetic and evaluation") {
    KPoly p = (KPoly(1) + KPoly::k()) * (KPoly(1) + KPoly::k()); // (k+1)^2
    CHECK(p.eval(Rat(2)) == Rat(9));
    CHECK(p.eval(Rat(-1)) == Rat(0));
    CHECK(p * Rat(0) == KPoly());
}

TEST_CASE("series_pow_kplus1 on the trivial series") {
    KSeries one = series_pow_kplus1(Series::one(6));
    for (int m = 0; m <= 6; ++m) CHECK(one[m] == (m == 0 ? KPoly(1) : KPoly()));
}

TEST_CASE("series_pow_kplus1 of (t/2)/sin(t/2)") {
    Series f0 = sinc_half_inverse(8);
    KSeries F = series_pow_kplus1(f0);

    // t^2 coefficient is (k+1)/24.
    CHECK(F[2] == KPoly(std::vector<Rat>{Rat(1, 24), Rat(1, 24)}));

    // k-degree of the t^{2g} coefficient is at most g.
    for (int g = 0; 2 * g <= 8; ++g) CHECK(F[2 * g].degree() <= g);

    // Evaluating at k = 0 reproduces the base series.
    CHECK(kseries_eval(F, 0) == f0);

    // Evaluating at integers matches integer powers computed independently.
    for (long xi = -3; xi <= 3; ++xi) CHECK(kseries_eval(F, xi) == series_pow_int(f0, xi + 1));

    Series not_unit(4);
    not_unit[0] = Rat(2);
    CHECK_THROWS_AS(series_pow_kplus1(not_unit), domain_error);
}

TEST_CASE("JSON serialization of series types") {
    Series s(2);
    s[0] = Rat(1);
    s[2] = Rat(1, 24);
    nlohmann::json j = s;
    CHECK(j["order"] == 2);
    CHECK(j["coeffs"] == nlohmann::json({"1", "0", "1/24"}));

    KSeries F = series_pow_kplus1(sinc_half_inverse(2));
    nlohmann::json jk = F;
    CHECK(jk["coeffs"][2] == nlohmann::json({"1/24", "1/24"}));
    CHECK(jk["coeffs"][0] == nlohmann::json({"1"}));
    CHECK(jk["coeffs"][1] == nlohmann::json::array());
}
