#include <doctest.h>

#include "motstats/motring.hpp"
#include "motstats/theorems.hpp"

using namespace motstats;

namespace {

LClass vw_product(int n) {
    LClass acc = LClass::one();
    for (int j = 1; j <= n + 1; ++j) acc *= LClass::one() - LClass::L(-j);
    return acc;
}

} // namespace

TEST_CASE("standard classes") {
    CHECK(projective_class(2) == LClass::one() + LClass::L(1) + LClass::L(2));
    CHECK(affine_class(3) == LClass::L(3));
    CHECK(gl_class(1) == (LClass::L(2) - LClass::one()) * (LClass::L(2) - LClass::L(1)));
    CHECK(evaluate_at_prime_power(gl_class(1), Rat(3)) == Rat(48));
    CHECK(lnk(3, 2) == (LClass::one() - LClass::L(-3)) * (LClass::one() - LClass::L(-2)));
}

TEST_CASE("smooth-section density for projective spaces") {
    for (int n = 0; n <= 3; ++n) {
        DensityReport r = vakil_wood_density(projective_class(n), n);
        REQUIRE(r.exact.has_value());
        CHECK(*r.exact == vw_product(n));
    }
    CHECK(*vakil_wood_density(projective_class(1), 1).exact == gl_class(1) * LClass::L(-4));
}

TEST_CASE("smooth binary form classes") {
    CHECK(p1_smooth_class(1) == LClass::L(2) - LClass::one());
    CHECK(p1_smooth_class(2) == (LClass::L(1) - LClass::one()) * LClass::L(2));
    LClass d3 = LClass::L(4) - LClass::L(3) - LClass::L(2) + LClass::L(1);
    CHECK(p1_smooth_class(3) == d3);
    // degree >= 3: (L-1)(L^d - L^{d-2})
    for (int d = 3; d <= 8; ++d) {
        LClass want = (LClass::L(1) - LClass::one()) * (LClass::L(d) - LClass::L(d - 2));
        CHECK(p1_smooth_class(d) == want);
    }
}

TEST_CASE("complete intersection density, codimension one") {
    DensityReport r = complete_intersection_density(2, 1, -18);
    REQUIRE(r.exact.has_value());
    CHECK(*r.exact == vw_product(2));
    CHECK(agree_above(r.truncated, FilteredClass(vw_product(2), -18), -18));
}

TEST_CASE("complete intersection truncations are consistent") {
    FilteredClass a = complete_intersection_density(2, 2, -12).truncated;
    FilteredClass b = complete_intersection_density(2, 2, -16).truncated;
    CHECK(agree_above(a, b, -12));
    CHECK(!a.terms.empty());
}

TEST_CASE("m-singular density, m = 0, equals the smooth density") {
    DensityReport r = m_singular_density(projective_class(2), 2, 0, -20);
    REQUIRE(r.exact.has_value());
    CHECK(*r.exact == vw_product(2));
    CHECK(agree_above(r.truncated, FilteredClass(vw_product(2), -20), -20));
}

TEST_CASE("m-singular densities sum to one down to the first omitted stratum") {
    // with strata m <= M kept, the defect starts exactly at L^{-(M+1)}
    const long floor = -12;
    FilteredClass total(LClass::zero(), floor);
    for (int m = 0; m <= 4; ++m)
        total = total + m_singular_density(projective_class(2), 2, m, floor).truncated;
    FilteredClass defect = total - FilteredClass(LClass::one(), floor);
    REQUIRE(!defect.terms.empty());
    CHECK(defect.terms.rbegin()->first == -5);
    CHECK(defect.terms.rbegin()->second == -1);
}

TEST_CASE("surjection density equals the reciprocal special-value product") {
    for (int n = 1; n <= 2; ++n) {
        SurjectionReport rep = surjection_density(n, -18);
        CHECK(rep.residual.terms.empty());
        CHECK(!rep.product_side.truncated.terms.empty());
    }
    // n = 1: the density of a global surjection onto a line bundle is
    // 1/Z(L^{-2}) = (1 - L^{-1})(1 - L^{-2}), realizing the classical sieve
    // density prod_x (1 - q^{-2 deg x}) over finite fields.
    SurjectionReport one = surjection_density(1, -18);
    REQUIRE(one.zeta_side.exact.has_value());
    CHECK(*one.zeta_side.exact ==
          (LClass::one() - LClass::L(-1)) * (LClass::one() - LClass::L(-2)));
}
