#include <doctest.h>

#include "motstats/serialize.hpp"
#include "motstats/theorems.hpp"

using namespace motstats;

TEST_CASE("class wire format") {
    LClass vw = (LClass::one() - LClass::L(-1)) * (LClass::one() - LClass::L(-2));
    json j = to_json(vw);
    CHECK(j == json::parse(R"({"coeffs":{"0":1,"-1":-1,"-2":-1,"-3":1}})"));
    CHECK(lclass_from_json(j) == vw);
    CHECK(lclass_from_json(to_json(LClass::zero())).is_zero());
}

TEST_CASE("big coefficients survive the round trip") {
    LClass big = LClass::monomial(3, Int("123456789012345678901234567890"));
    CHECK(lclass_from_json(to_json(big)) == big);
}

TEST_CASE("filtered class carries its floor") {
    FilteredClass f(LClass::one() - LClass::L(-4), -10);
    json j = to_json(f);
    CHECK(j.at("floor") == -10);
    FilteredClass back = filtered_from_json(j);
    CHECK(back == f);
}

TEST_CASE("group multisets are sorted arrays") {
    GroupMultiset m{3, 1, 2};
    CHECK(to_json(m) == json::parse("[1,2,3]"));
    CHECK(multiset_from_json(json::parse("[3,1,2]")) == m);
}

TEST_CASE("product spec round trip") {
    EulerFactorSpec spec;
    spec.variables = {"t", "u"};
    spec.strata.push_back(
        {projective_class(1),
         {{{1, 0}, LClass(-1)}, {{1, 2}, LClass::L(-2)}}});
    EulerFactorSpec back = euler_spec_from_json(to_json(spec));
    CHECK(back.variables == spec.variables);
    REQUIRE(back.strata.size() == 1);
    CHECK(back.strata[0].base == spec.strata[0].base);
    CHECK(back.strata[0].terms[0].monomial == spec.strata[0].terms[0].monomial);
    CHECK(back.strata[0].terms[1].coeff == spec.strata[0].terms[1].coeff);

    CHECK_THROWS(euler_spec_from_json(json::parse(
        R"({"variables":["t"],"strata":[{"base":{"coeffs":{}},"terms":[]}]})")));
}

TEST_CASE("divisor wire format") {
    WittDivisor f;
    f.add_point(Rat(1, 2), Int(-1));
    f.add_point(Rat(3), Int(2));
    json j = to_json(f);
    CHECK(j == json::parse(R"({"support":{"1/2":-1,"3":2}})"));
    CHECK(witt_from_json(j) == f);
}

TEST_CASE("density report serialization") {
    DensityReport r = vakil_wood_density(projective_class(1), 1);
    json j = to_json(r);
    CHECK(j.contains("exact"));
    CHECK(j.at("exact") == json::parse(R"({"coeffs":{"0":1,"-1":-1,"-2":-1,"-3":1}})"));
    CHECK(j.contains("truncated"));
}
