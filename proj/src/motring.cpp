#include "motstats/motring.hpp"

#include <stdexcept>

namespace motstats {

namespace {

// sum_n L^{jn} t^n up to degree D: sigma of a single cell L^j
TSeries cell_sigma(long j, int D) {
    TSeries s({"t"}, D);
    LClass c = LClass::one();
    LClass lj = LClass::L(j);
    for (int n = 0; n <= D; ++n) {
        s.add_term({n}, c);
        c *= lj;
    }
    return s;
}

// 1 - L^j t: sigma of -L^j
TSeries cell_sigma_neg(long j, int D) {
    TSeries s({"t"}, D);
    s.add_term({0}, LClass::one());
    s.add_term({1}, -LClass::L(j));
    return s;
}

} // namespace

TSeries sigma_series(const LClass& c, int D) {
    if (D < 0) throw std::invalid_argument("sigma_series: D >= 0 required");
    TSeries acc = TSeries::unit({"t"}, D);
    for (const auto& [j, k] : c.coeffs) {
        TSeries factor = (k > 0) ? cell_sigma(j, D) : cell_sigma_neg(j, D);
        Int times = k > 0 ? k : Int(-k);
        // repeated squaring over the series monoid
        TSeries base = factor;
        Int n = times;
        while (n > 0) {
            if ((n & 1) != 0) acc = acc * base;
            n >>= 1;
            if (n > 0) base = base * base;
        }
    }
    return acc;
}

LClass sym_n(const LClass& c, int n) {
    if (n < 0) throw std::invalid_argument("sym_n: n >= 0 required");
    return sigma_series(c, n).coeff1(n);
}

FilteredClass geometric_expansion(long e, long floor) {
    if (e >= 0) throw std::invalid_argument("geometric_expansion: exponent must be negative");
    FilteredClass r;
    r.floor = floor;
    for (long m = 0; m * e > floor; ++m) r.terms.emplace(m * e, Int(1));
    return r;
}

LClass SpecialValue::inverse_exact() const {
    LClass acc = LClass::one();
    for (const auto& [e, mult] : factors) {
        LClass factor = LClass::one() - LClass::L(e);
        Int m = mult;
        if (m >= 0) {
            // (1-L^e)^m is polynomial
            for (Int i = 0; i < m; ++i) acc *= factor;
        } else {
            throw std::domain_error("inverse special value is not a Laurent polynomial "
                                    "(negative class coefficient)");
        }
    }
    return acc;
}

FilteredClass SpecialValue::expansion(long floor) const {
    FilteredClass acc = FilteredClass(LClass::one(), floor);
    for (const auto& [e, mult] : factors) {
        if (mult > 0) {
            FilteredClass g = geometric_expansion(e, floor);
            for (Int i = 0; i < mult; ++i) acc = acc * g;
        } else {
            LClass factor = LClass::one() - LClass::L(e);
            FilteredClass g(factor, floor);
            for (Int i = 0; i < -mult; ++i) acc = acc * g;
        }
        acc.clamp(floor); // the filtration floor requested by the caller
        if (acc.floor > floor)
            throw std::logic_error("special value expansion lost requested precision");
    }
    return acc;
}

SpecialValue SpecialValue::inverted() const {
    SpecialValue v;
    for (const auto& [e, m] : factors) v.factors.emplace_back(e, -m);
    return v;
}

SpecialValue kapranov_special_value(const LClass& c, long N) {
    auto d = c.dim();
    if (d && N <= *d)
        throw std::domain_error("kapranov_special_value: divergent, need N > dim");
    SpecialValue v;
    for (const auto& [j, cj] : c.coeffs) v.factors.emplace_back(j - N, cj);
    return v;
}

Rat evaluate_at_prime_power(const LClass& c, const Rat& q) {
    if (q == 0) throw std::invalid_argument("evaluate_at_prime_power: q != 0 required");
    return c.eval(q);
}

} // namespace motstats
