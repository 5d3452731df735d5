#include <doctest.h>

#include "motstats/lclass.hpp"

using namespace motstats;

TEST_CASE("Laurent arithmetic basics") {
    LClass a = LClass::L(2) - LClass::L(-1); // L^2 - L^{-1}
    LClass b = LClass::L(1) + LClass::one();

    CHECK(a + (-a) == LClass::zero());
    CHECK(a * LClass::one() == a);
    CHECK(a * b == b * a);
    CHECK((a + b) * b == a * b + b * b);

    CHECK(*a.dim() == 2);
    CHECK(*a.low() == -1);
    CHECK(!LClass::zero().dim().has_value());

    CHECK(a.coeff(2) == 1);
    CHECK(a.coeff(-1) == -1);
    CHECK(a.coeff(0) == 0);
}

TEST_CASE("powers and evaluation") {
    LClass p1 = LClass::one() + LClass::L(1);
    CHECK(p1.pow(2) == LClass::one() + LClass::L(1) * Int(2) + LClass::L(2));
    CHECK(p1.pow(0) == LClass::one());
    CHECK(p1.eval(Rat(2)) == Rat(3));
    CHECK(LClass::L(-2).eval(Rat(2)) == Rat(1, 4));
}

TEST_CASE("truncation") {
    LClass a = LClass::L(1) + LClass::L(-3) + LClass::L(-5);
    LClass t = a.truncated_above(-4);
    CHECK(t == LClass::L(1) + LClass::L(-3));
}

TEST_CASE("zero coefficients are pruned") {
    LClass a = LClass::L(3) - LClass::L(3);
    CHECK(a.is_zero());
    CHECK(a.coeffs.empty());
}

TEST_CASE("filtered class floor propagation") {
    // x known above -5 with top degree 1; y known above -4 with top degree 2
    FilteredClass x(LClass::L(1) + LClass::L(-2), -5);
    FilteredClass y(LClass::L(2) - LClass::one(), -4);
    FilteredClass prod = x * y;
    // floor(xy) = max(floor(x)+dim(y), floor(y)+dim(x)) = max(-3, -3)
    CHECK(prod.floor == -3);
    CHECK(prod.terms.at(3) == 1);

    FilteredClass sum = x + y;
    CHECK(sum.floor == -4);
    CHECK(sum.known_part().coeff(1) == 1);
}

TEST_CASE("filtered clamp and agreement") {
    FilteredClass a(LClass::L(1) + LClass::L(-6), -10);
    FilteredClass b(LClass::L(1) + LClass::L(-8), -10);
    CHECK(!agree_above(a, b, -10));
    CHECK(agree_above(a, b, -6));
    a.clamp(-3);
    CHECK(a.floor == -3);
    CHECK(a.terms.count(-6) == 0);
}

TEST_CASE("rendering") {
    LClass a = LClass::L(2) - LClass::L(1) * Int(2) + LClass::one();
    CHECK(a.str() == "L^2 - 2*L + 1");
    CHECK(LClass::zero().str() == "0");
    FilteredClass f(LClass::one() - LClass::L(-2), -4);
    CHECK(f.str() == "1 - L^-2 + O(L^-4)");
}
