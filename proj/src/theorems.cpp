#include "motstats/theorems.hpp"

#include <stdexcept>

#include "motstats/config_spaces.hpp"
#include "motstats/motring.hpp"

namespace motstats {

namespace {
constexpr long kDefaultExactFloor = -40;

std::string num(long v) { return std::to_string(v); }
} // namespace

LClass projective_class(int n) {
    if (n < 0) throw std::invalid_argument("projective_class: n >= 0");
    LClass c;
    for (int j = 0; j <= n; ++j) c += LClass::L(j);
    return c;
}

LClass affine_class(int n) {
    if (n < 0) throw std::invalid_argument("affine_class: n >= 0");
    return LClass::L(n);
}

DensityReport vakil_wood_density(const LClass& x, int dimX) {
    auto sv = kapranov_special_value(x, dimX + 1);
    DensityReport r;
    r.metadata["problem"] = "smooth-section-density";
    r.metadata["dim"] = num(dimX);
    bool nonneg = true;
    for (const auto& [j, c] : x.coeffs)
        if (c < 0) nonneg = false;
    if (nonneg) {
        r.exact = sv.inverse_exact();
        r.truncated = FilteredClass(*r.exact, kDefaultExactFloor);
    } else {
        r.truncated = sv.inverted().expansion(kDefaultExactFloor);
    }
    return r;
}

LClass lnk(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("lnk: 1 <= k <= n required");
    LClass acc = LClass::one();
    for (int j = 0; j < k; ++j) acc *= LClass::one() - LClass::L(-n + j);
    return acc;
}

DensityReport complete_intersection_density(int n, int k, long floor) {
    LClass coeff = -(LClass::L(-k) * (LClass::one() - lnk(n, k)));
    EulerFactorSpec spec;
    spec.variables = {"t"};
    spec.strata.push_back({projective_class(n), {{{1}, coeff}}});
    DensityReport r;
    r.spec = spec;
    r.truncated = evaluate_at(spec, {0}, floor, kEulerExpandHardLimit);
    r.metadata["problem"] = "smooth-complete-intersection-density";
    r.metadata["n"] = num(n);
    r.metadata["k"] = num(k);
    if (k == 1) {
        // the coefficient degenerates to -L^{-(n+1)}: the single-hypersurface case
        r.exact = vakil_wood_density(projective_class(n), n).exact;
    }
    return r;
}

DensityReport m_singular_density(const LClass& x, int dimX, int m, long floor) {
    if (m < 0) throw std::invalid_argument("m_singular_density: m >= 0");
    long N = dimX + 1;
    auto xd = x.dim();
    if (xd && N <= *xd)
        throw std::domain_error("m_singular_density: need dimX + 1 > dim of the class");

    LClass vw = kapranov_special_value(x, N).inverse_exact();

    // numerator terms have dim <= m*dimX - N*n; stop once the tail is below floor
    long nmax = m;
    while (static_cast<long>(m) * dimX - N * (nmax + 1) > floor) ++nmax;
    TSeries zm = kapranov_m(x, m, static_cast<int>(nmax));

    FilteredClass numerator;
    numerator.floor = floor;
    for (const auto& [e, c] : zm.coeffs) {
        long shift = -N * e[0];
        for (const auto& [exp, cf] : c.coeffs) {
            long ee = exp + shift;
            if (ee <= floor) continue;
            auto [it, fresh] = numerator.terms.try_emplace(ee, cf);
            if (!fresh) {
                it->second += cf;
                if (it->second == 0) numerator.terms.erase(it);
            }
        }
    }

    DensityReport r;
    r.truncated = numerator * FilteredClass::exact(vw);
    r.truncated.clamp(floor);
    r.metadata["problem"] = "exactly-m-singular-density";
    r.metadata["m"] = num(m);
    r.metadata["dim"] = num(dimX);
    if (m == 0) r.exact = vw;
    return r;
}

SurjectionReport surjection_density(int n, long floor) {
    if (n < 1) throw std::invalid_argument("surjection_density: n >= 1");
    LClass p1 = projective_class(1);

    LClass prod = LClass::one();
    for (int i = 2; i <= n + 1; ++i) prod *= LClass::one() - LClass::L(-i);
    LClass coeff = -(LClass::one() - prod);

    SurjectionReport rep;
    EulerFactorSpec spec;
    spec.variables = {"t"};
    spec.strata.push_back({p1, {{{1}, coeff}}});
    rep.product_side.spec = spec;
    rep.product_side.truncated = evaluate_at(spec, {0}, floor, kEulerExpandHardLimit);
    rep.product_side.metadata["problem"] = "vector-bundle-surjection-density";
    rep.product_side.metadata["n"] = num(n);

    // The limit density is at most 1 (it is a ratio of a subspace to its
    // ambient space), so it is the product of the *reciprocal* special values
    // Z(L^{-k})^{-1} = (1 - L^{-k})(1 - L^{-k+1}) for the projective line --
    // a finite Laurent polynomial.  Its finite-field realizations are the
    // sieve densities prod_x (1 - q^{-k deg x}).
    LClass zeta_exact = LClass::one();
    for (int k = 2; k <= n + 1; ++k)
        zeta_exact *= kapranov_special_value(p1, k).inverse_exact();
    FilteredClass zeta(zeta_exact, floor);
    zeta.clamp(floor);
    rep.zeta_side.exact = zeta_exact;
    rep.zeta_side.truncated = zeta;
    rep.zeta_side.metadata["problem"] = "reciprocal-zeta-special-value-product";
    rep.zeta_side.metadata["n"] = num(n);

    rep.residual = rep.product_side.truncated - rep.zeta_side.truncated;
    return rep;
}

LClass gl_class(int n) {
    if (n < 0) throw std::invalid_argument("gl_class: n >= 0");
    LClass acc = LClass::one();
    for (int i = 0; i <= n; ++i) acc *= LClass::L(n + 1) - LClass::L(i);
    return acc;
}

LClass p1_smooth_class(int d) {
    if (d <= 0) throw std::invalid_argument("p1_smooth_class: d >= 1 required");
    if (d == 1) return LClass::L(2) - LClass::one();
    // (L - 1) * [C^d P^1]
    LClass cd = conf_class(projective_class(1), GroupMultiset{d});
    return (LClass::L(1) - LClass::one()) * cd;
}

} // namespace motstats
