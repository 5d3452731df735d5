#include <doctest.h>

#include "motstats/config_spaces.hpp"
#include "motstats/ffverify.hpp"
#include "motstats/motring.hpp"
#include "motstats/theorems.hpp"

using namespace motstats;

namespace {

FrobSet frobset_from_counts(Preset preset, uint32_t q, int maxdeg) {
    std::vector<Int> a = closed_point_counts(preset, q, 1, maxdeg);
    FrobSet X;
    for (int e = 1; e <= maxdeg; ++e)
        for (Int i = 0; i < a[e]; ++i) {
            int base = X.n;
            for (int j = 0; j < e; ++j) X.sigma.push_back(base + (j + 1) % e);
            X.n += e;
        }
    return X;
}

} // namespace

TEST_CASE("class evaluation equals point enumeration") {
    CHECK(evaluate_at_prime_power(projective_class(2), Rat(4)) ==
          Rat(count_projective(FqField(2, 2), 2)));
    CHECK(evaluate_at_prime_power(projective_class(1), Rat(9)) ==
          Rat(count_projective(FqField(3, 2), 1)));
    CHECK(evaluate_at_prime_power(affine_class(2), Rat(5)) == Rat(count_affine(FqField(5, 1), 2)));
    CHECK(evaluate_at_prime_power(gl_class(1), Rat(2)) == Rat(count_gl(FqField(2, 1), 2)));
    CHECK(evaluate_at_prime_power(gl_class(1), Rat(3)) == Rat(count_gl(FqField(3, 1), 2)));
}

TEST_CASE("configuration classes match fixed-point counts") {
    // worked case from the module contract: pairs on the projective line
    FrobSet p1_2 = frobset_from_counts(Preset::P1, 2, 4);
    CHECK(conf_count(p1_2, GroupMultiset{2}, 1) ==
          Int(4)); // = conf_class(P^1, {2}) at L = 2

    std::vector<std::pair<Preset, LClass>> spaces = {
        {Preset::Affine1, LClass::L(1)},
        {Preset::P1, projective_class(1)},
    };
    for (const auto& [preset, x] : spaces) {
        ConfCache cache(x);
        for (uint32_t q : {2u, 3u}) {
            FrobSet X = frobset_from_counts(preset, q, 4);
            for (int total = 1; total <= 4; ++total)
                for (const auto& lambda : partitions_of(total)) {
                    GroupMultiset M(lambda);
                    CHECK(cache.conf_class(M).eval(Rat(Int(q))) == Rat(conf_count(X, M, 1)));
                }
        }
    }
}

TEST_CASE("smooth binary form classes match enumeration") {
    for (uint32_t q : {2u, 3u}) {
        FqField F(q, 1);
        for (int d = 1; d <= 4; ++d) {
            SmoothCount c = count_smooth_forms(1, d, F);
            CHECK(Rat(c.smooth) == p1_smooth_class(d).eval(Rat(Int(q))));
        }
    }
}

TEST_CASE("limit density matches the enumerated densities from degree 3 on") {
    for (uint32_t q : {2u, 3u}) {
        Rat qr = Rat(Int(q));
        Rat prediction = vakil_wood_density(projective_class(1), 1).exact->eval(qr);
        FqField F(q, 1);
        for (int d = 3; d <= 5; ++d) {
            SmoothCount c = count_smooth_forms(1, d, F);
            CHECK(Rat(c.smooth, c.total) == prediction);
        }
    }
}
