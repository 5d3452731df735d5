#pragma once

#include <optional>
#include <string>
#include <vector>

#include "motstats/config_spaces.hpp"
#include "motstats/lclass.hpp"
#include "motstats/tseries.hpp"

namespace motstats {

// One factor of a product over the points of a stratified cellular base:
//   prod_{x in Y} (1 + sum_terms coeff * t^monomial)
// with a constant (in L) coefficient per term on each stratum.
struct EulerTerm {
    std::vector<int> monomial; // exponents per variable, total degree >= 1
    LClass coeff;
};

struct EulerStratum {
    LClass base;
    std::vector<EulerTerm> terms;
};

struct EulerFactorSpec {
    std::vector<std::string> variables;
    std::vector<EulerStratum> strata;

    void validate() const; // throws std::invalid_argument on malformed input
};

struct SignedCell {
    int sign;      // +1 or -1
    long exponent; // j in +-L^j
};

inline constexpr int kEulerDegreeLimit = 24;      // default for evaluate_at
inline constexpr int kEulerExpandHardLimit = 64;  // absolute cap on expansion degree
inline constexpr int kEulerStratumLimit = 16;

// Expansion strategy.  Both compute the same series:
//  - stratification: fold signed unit cells and sum configuration classes
//    (works for any base class, cost grows quickly with the degree)
//  - counting: for bases that are genuine cellular varieties (nonnegative
//    combinations of nonnegative powers of L), expand the product over closed
//    points of each degree with Moebius-inverted point-count exponents; the
//    coefficients are polynomials in the point count, hence determine the
//    classes exactly
//  - automatic: counting when every stratum base allows it, else stratification
enum class ExpandStrategy { automatic, stratification, counting };

TSeries expand(const EulerFactorSpec& spec, int D,
               ExpandStrategy strategy = ExpandStrategy::automatic);

// t_i -> L^{twists[i]} * prod_j s_j^{A[i][j]}; rows of A must be nonzero
TSeries substitute_monomial(const TSeries& series,
                            const std::vector<std::vector<int>>& A,
                            const std::vector<long>& twists,
                            std::vector<std::string> target_vars);

// upper bound on dim of any total-degree-k coefficient; nullopt is -infinity
std::optional<long> dim_bound(const EulerFactorSpec& spec, int k);

struct DivergentProduct : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FloorUnreachable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// substitute t_i = L^{-N_i} (N_i >= 0) and sum; the tail beyond the computed
// degree is controlled by the per-degree dimension bound and dropped below
// the floor.  Throws DivergentProduct / FloorUnreachable.
FilteredClass evaluate_at(const EulerFactorSpec& spec, const std::vector<long>& N, long floor,
                          int degree_limit = kEulerDegreeLimit);

} // namespace motstats
