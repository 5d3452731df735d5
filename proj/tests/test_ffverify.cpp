#include <doctest.h>

#include <random>

#include "motstats/ffverify.hpp"

using namespace motstats;

TEST_CASE("field arithmetic in small extensions") {
    FqField f4(2, 2); // x^2 + x + 1
    CHECK(f4.q() == 4);
    CHECK(f4.mul(2, 2) == 3); // x * x = x + 1
    CHECK(f4.mul(2, 3) == 1); // x * (x + 1) = 1
    for (uint32_t a = 1; a < 4; ++a) CHECK(f4.mul(a, f4.inv(a)) == 1);

    for (auto [p, k] : {std::pair<uint32_t, uint32_t>{2, 3}, {3, 2}, {5, 2}, {2, 8}}) {
        FqField F(p, k);
        for (uint32_t a = 1; a < F.q(); ++a) {
            CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.add(a, F.neg(a)) == 0);
        }
        // Frobenius fixes exactly the prime subfield
        int fixed = 0;
        for (uint32_t a = 0; a < F.q(); ++a)
            if (F.pow(a, p) == a) ++fixed;
        CHECK(fixed == static_cast<int>(p));
    }
}

TEST_CASE("subfield embeddings") {
    FqField f4(2, 2), f16(2, 4);
    // the image of the F_4 generator satisfies its minimal polynomial
    uint32_t im = f16.embed(f4, 2);
    CHECK(f16.add(f16.add(f16.mul(im, im), im), 1) == 0);
    // embedding is a field morphism
    for (uint32_t a = 0; a < 4; ++a)
        for (uint32_t b = 0; b < 4; ++b) {
            CHECK(f16.embed(f4, f4.add(a, b)) == f16.add(f16.embed(f4, a), f16.embed(f4, b)));
            CHECK(f16.embed(f4, f4.mul(a, b)) == f16.mul(f16.embed(f4, a), f16.embed(f4, b)));
        }
    CHECK_THROWS_AS(f16.embed(FqField(3, 1), 1), std::invalid_argument);
}

TEST_CASE("polynomial helpers") {
    FqField F(5, 1);
    FqPoly f = {1, 0, 1};   // x^2 + 1
    FqPoly g = {1, 1};      // x + 1
    CHECK(poly_deg(poly_mul(F, f, g)) == 3);
    CHECK(poly_mod(F, poly_mul(F, f, g), f) == FqPoly{});
    // gcd(x^2 - 1, x - 1) ~ x - 1
    FqPoly d = poly_gcd(F, FqPoly{4, 0, 1}, FqPoly{4, 1});
    CHECK(poly_deg(d) == 1);
    CHECK(poly_derivative(F, FqPoly{2, 0, 0, 0, 0, 1}) == FqPoly{}); // x^5 + 2 over F_5
}

TEST_CASE("point counts") {
    CHECK(count_affine(FqField(3, 1), 2) == 9);
    CHECK(count_projective(FqField(2, 2), 2) == 21);
    CHECK(count_projective(FqField(2, 1), 1) == 3);
    CHECK(count_gl(FqField(2, 1), 2) == 6);
    CHECK(count_gl(FqField(3, 1), 2) == 48);
    CHECK(preset_point_count(Preset::P2, FqField(2, 1)) == 7);
}

TEST_CASE("hypersurface counting") {
    // the conic xy + z^2 over F_2 is a line's worth of points
    FqForm conic;
    conic.nvars = 3;
    conic.degree = 2;
    conic.monomials = monomials_of_degree(3, 2);
    conic.coeffs.assign(conic.monomials.size(), 0);
    for (size_t t = 0; t < conic.monomials.size(); ++t) {
        if (conic.monomials[t] == std::vector<int>{1, 1, 0}) conic.coeffs[t] = 1;
        if (conic.monomials[t] == std::vector<int>{0, 0, 2}) conic.coeffs[t] = 1;
    }
    CHECK(count_hypersurface(FqField(2, 1), conic) == 3);
    CHECK(plane_curve_smooth(FqField(2, 1), conic));
}

TEST_CASE("enumeration budget is enforced") {
    CHECK_THROWS_AS(count_projective(FqField(2, 20), 2), std::runtime_error);
}

TEST_CASE("binary form smoothness oracles") {
    FqField F2(2, 1);
    // all eight binary quadratics over F_2; the four squarefree ones
    int smooth = 0;
    for (uint32_t c = 0; c < 8; ++c) {
        std::vector<uint32_t> coeffs = {c & 1, (c >> 1) & 1, (c >> 2) & 1};
        bool a = binary_form_smooth_gcd(F2, coeffs);
        bool b = binary_form_smooth_resultant(F2, coeffs);
        CHECK(a == b);
        if (a) ++smooth;
    }
    CHECK(smooth == 4);

    // x^2 y - x y^2 = xy(x-y) over F_3: the degree divides the characteristic,
    // so a resultant of the two partials alone would fail; squarefree, smooth
    FqField F3(3, 1);
    std::vector<uint32_t> xy_xmy = {0, 2, 1, 0};
    CHECK(binary_form_smooth_gcd(F3, xy_xmy));
    CHECK(binary_form_smooth_resultant(F3, xy_xmy));

    // repeated-factor and infinity-multiplicity cases
    CHECK(!binary_form_smooth_gcd(F2, {0, 0, 1}));      // x^2
    CHECK(!binary_form_smooth_gcd(F2, {1, 0, 0}));      // y^2
    CHECK(binary_form_smooth_gcd(F2, {0, 1}));          // x
    CHECK(binary_form_smooth_gcd(F2, {1, 0}));          // y
    CHECK(!binary_form_smooth_gcd(F2, {0, 0, 0}));      // zero form

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 2000; ++trial) {
        uint32_t q = trial % 2 ? 3 : 5;
        FqField F(q, 1);
        int d = 1 + static_cast<int>(rng() % 7);
        std::vector<uint32_t> coeffs(d + 1);
        for (auto& c : coeffs) c = static_cast<uint32_t>(rng() % q);
        CHECK(binary_form_smooth_gcd(F, coeffs) == binary_form_smooth_resultant(F, coeffs));
    }
}

TEST_CASE("smooth form counts") {
    FqField F2(2, 1);
    SmoothCount c = count_smooth_forms(1, 3, F2);
    CHECK(c.smooth == 6);
    CHECK(c.total == 16);
    CHECK(count_smooth_forms(1, 1, FqField(3, 1)).smooth == 8); // q^2 - 1
    CHECK(count_smooth_forms(2, 1, FqField(3, 1)).smooth == 26);

    // sampling is reproducible and consistent with the exhaustive rate
    SampleMode mode{false, 500, 42};
    SmoothCount s1 = count_smooth_forms(1, 3, F2, mode);
    SmoothCount s2 = count_smooth_forms(1, 3, F2, mode);
    CHECK(s1.smooth == s2.smooth);
    CHECK(s1.total == 500);
}

TEST_CASE("closed point counts") {
    auto a = closed_point_counts(Preset::P1, 2, 1, 4);
    CHECK(a[1] == 3);
    CHECK(a[2] == 1);
    CHECK(a[3] == 2);
    CHECK(a[4] == 3);
    auto b = closed_point_counts(Preset::Affine1, 3, 1, 3);
    CHECK(b[1] == 3);
    CHECK(b[2] == 3);  // (9 - 3) / 2
    CHECK(b[3] == 8);  // (27 - 3) / 3
}

TEST_CASE("fixed configuration counts") {
    FrobSet three;
    three.n = 3;
    three.sigma = {0, 1, 2};
    CHECK(conf_count(three, GroupMultiset{1, 1}, 1) == 6);
    CHECK(conf_count(three, GroupMultiset{1, 1, 1}, 5) == 6);
    CHECK(conf_count(three, GroupMultiset{2, 1}, 1) == 3);

    FrobSet two;
    two.n = 2;
    two.sigma = {1, 0};
    CHECK(conf_count(two, GroupMultiset{1}, 1) == 0);
    CHECK(conf_count(two, GroupMultiset{1}, 2) == 2);
    CHECK(conf_count(two, GroupMultiset{2}, 1) == 1);
    CHECK(conf_count(two, GroupMultiset{2}, 7) == 1);
    CHECK(conf_count(two, GroupMultiset{1, 1}, 2) == 2);
    CHECK(conf_count(two, GroupMultiset{3}, 1) == 0);
}

TEST_CASE("inclusion-exclusion and pole collapse") {
    FrobSet two;
    two.n = 2;
    two.sigma = {1, 0};
    FrobMap fold;
    fold.source = two;
    fold.target.n = 1;
    fold.target.sigma = {0};
    fold.map = {0, 0};
    CHECK(check_inclusion_exclusion(fold, 12));

    FrobSet any;
    any.n = 4;
    any.sigma = {1, 2, 0, 3};
    FrobMap id;
    id.source = any;
    id.target = any;
    id.map = {0, 1, 2, 3};
    CHECK(check_inclusion_exclusion(id, 6));
    CHECK(check_zeta_pole(any, 8));
    CHECK(check_zeta_pole(two, 12));

    FrobMap broken = id;
    broken.map = {1, 0, 2, 3};
    CHECK_THROWS_AS(broken.validate(), std::invalid_argument);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 25; ++i) CHECK(check_inclusion_exclusion(random_frobmap(rng, 6), 8));
    for (int i = 0; i < 25; ++i) CHECK(check_zeta_pole(random_frobset(rng, 6), 8));
}

TEST_CASE("density table heads toward the limit") {
    FqField F2(2, 1);
    auto rows = density_table(1, 3, 5, F2);
    for (const auto& row : rows) CHECK(row.gap == Rat(0)); // exact from degree 3 on
    auto low = density_table(1, 1, 2, F2);
    CHECK(low[0].gap != Rat(0));
}
