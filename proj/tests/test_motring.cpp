#include <doctest.h>

#include "motstats/motring.hpp"
#include "motstats/theorems.hpp"
#include "motstats/tseries.hpp"

using namespace motstats;

TEST_CASE("symmetric-power series of cellular classes") {
    // a point: all coefficients 1
    TSeries pt = sigma_series(LClass::one(), 6);
    for (int n = 0; n <= 6; ++n) CHECK(pt.coeff1(n) == LClass::one());

    // the affine line: coefficient n is L^n
    TSeries a1 = sigma_series(LClass::L(1), 6);
    for (int n = 0; n <= 6; ++n) CHECK(a1.coeff1(n) == LClass::L(n));

    // the projective line: Sym^n P^1 = P^n
    for (int n = 0; n <= 6; ++n) CHECK(sym_n(projective_class(1), n) == projective_class(n));
}

TEST_CASE("symmetric-power series is a group morphism") {
    std::vector<LClass> xs = {projective_class(2), LClass::L(2) - LClass::L(1),
                              LClass::L(1) * Int(2), -LClass::L(-1)};
    for (const auto& x : xs)
        for (const auto& y : xs) {
            TSeries lhs = sigma_series(x + y, 6);
            TSeries rhs = sigma_series(x, 6) * sigma_series(y, 6);
            CHECK(lhs.same_coeffs(rhs));
        }
}

TEST_CASE("negative summands invert the series") {
    // sigma of -L^j is 1 - L^j t
    TSeries s = sigma_series(-LClass::L(3), 5);
    CHECK(s.coeff1(0) == LClass::one());
    CHECK(s.coeff1(1) == -LClass::L(3));
    for (int n = 2; n <= 5; ++n) CHECK(s.coeff1(n).is_zero());

    TSeries prod = sigma_series(LClass::L(3), 5) * s;
    CHECK(prod.same_coeffs(TSeries::unit({"t"}, 5)));
}

TEST_CASE("special value factored form") {
    SpecialValue sv = kapranov_special_value(projective_class(1), 2);
    REQUIRE(sv.factors.size() == 2);
    // factors (1 - L^{-2})^{-1} (1 - L^{-1})^{-1}
    CHECK(sv.factors[0] == std::pair<long, Int>{-2, Int(1)});
    CHECK(sv.factors[1] == std::pair<long, Int>{-1, Int(1)});

    LClass inv = sv.inverse_exact();
    CHECK(inv == (LClass::one() - LClass::L(-1)) * (LClass::one() - LClass::L(-2)));

    // expansion * inverse == 1 above the floor
    FilteredClass exp = sv.expansion(-12);
    FilteredClass check = exp * FilteredClass::exact(inv);
    CHECK(agree_above(check, FilteredClass(LClass::one(), -10), -10));
}

TEST_CASE("special value rejects divergent evaluation") {
    CHECK_THROWS_AS(kapranov_special_value(projective_class(2), 2), std::domain_error);
    CHECK_THROWS_AS(kapranov_special_value(projective_class(2), 1), std::domain_error);
    CHECK_NOTHROW(kapranov_special_value(projective_class(2), 3));
}

TEST_CASE("inverse_exact requires nonnegative multiplicities") {
    SpecialValue sv = kapranov_special_value(LClass::L(1) - LClass::one(), 2);
    CHECK_THROWS_AS(sv.inverse_exact(), std::domain_error);
    // the inverted form expands fine
    FilteredClass exp = sv.inverted().expansion(-8);
    CHECK(exp.known_part().coeff(0) == 1);
}

TEST_CASE("geometric expansion") {
    FilteredClass g = geometric_expansion(-3, -10);
    CHECK(g.known_part() == LClass::one() + LClass::L(-3) + LClass::L(-6) + LClass::L(-9));
}

TEST_CASE("numeric evaluation") {
    CHECK(evaluate_at_prime_power(projective_class(2), Rat(4)) == Rat(21));
    CHECK(evaluate_at_prime_power(gl_class(1), Rat(2)) == Rat(6));
}
