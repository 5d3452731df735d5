#pragma once

#include <utility>
#include <vector>

#include "motstats/lclass.hpp"
#include "motstats/tseries.hpp"

namespace motstats {

// sum_n Sym^n(c) t^n truncated at degree D.  Sym is the unique extension of
// sigma_t(L^j) = 1/(1 - L^j t) to a group morphism (negative summands invert
// the series).
TSeries sigma_series(const LClass& c, int D);

LClass sym_n(const LClass& c, int n);

// Z at L^{-N}: exact factored form prod_j (1 - L^{j-N})^{-c_j} together with
// the expansion to a requested floor.  Requires N > dim(c).
struct SpecialValue {
    // (exponent j-N, multiplicity c_j) of the factor (1 - L^{j-N})^{-c_j}
    std::vector<std::pair<long, Int>> factors;

    // prod (1 - L^e)^{+c}: the inverse value, a finite Laurent polynomial
    // (requires all multiplicities nonnegative)
    LClass inverse_exact() const;
    // expansion of the value itself, to the requested floor
    FilteredClass expansion(long floor) const;
    // negated multiplicities: the reciprocal value
    SpecialValue inverted() const;
};

SpecialValue kapranov_special_value(const LClass& c, long N);

Rat evaluate_at_prime_power(const LClass& c, const Rat& q);

// expansion of (1 - L^e)^{-1} (e < 0) down to the floor
FilteredClass geometric_expansion(long e, long floor);

} // namespace motstats
