#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "motstats/config_spaces.hpp"
#include "motstats/numbers.hpp"

namespace motstats {

uint64_t ff_budget(); // default 2^30, overridable via MOTSTATS_FF_BUDGET

// F_{p^k} with a fixed modulus from the table shipped in ffverify.cpp, so all
// counts are reproducible bit-for-bit.  Elements are integers in [0, q),
// base-p digit vectors of polynomial coefficients.
class FqField {
public:
    FqField(uint32_t p, uint32_t k);

    uint32_t p() const { return p_; }
    uint32_t degree() const { return k_; }
    uint64_t q() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t pow(uint32_t a, uint64_t e) const;
    uint32_t from_int(uint64_t n) const { return static_cast<uint32_t>(n % p_); } // prime subfield
    // embed an element of F_{p^k} into this field F_{p^m}, k | m
    uint32_t embed(const FqField& sub, uint32_t a) const;

private:
    uint32_t mul_raw(uint32_t a, uint32_t b) const;
    uint32_t p_, k_;
    uint64_t q_;
    std::vector<uint32_t> modulus_; // monic: coefficients of x^0..x^k
    std::vector<uint32_t> mul_table_; // filled when q small enough
    bool use_table_ = false;
    std::vector<uint32_t> embed_pow_; // cached powers for embeddings
};

// univariate polynomials over a field: coefficient vectors, low degree first
using FqPoly = std::vector<uint32_t>;
FqPoly poly_trim(FqPoly f);
int poly_deg(const FqPoly& f); // -1 for zero
FqPoly poly_add(const FqField& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_mul(const FqField& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_mod(const FqField& F, FqPoly a, const FqPoly& b);
FqPoly poly_gcd(const FqField& F, FqPoly a, FqPoly b);
FqPoly poly_derivative(const FqField& F, const FqPoly& f);

// finite set with a permutation standing in for Frobenius on geometric points
struct FrobSet {
    int n = 0;
    std::vector<int> sigma; // permutation of 0..n-1

    std::vector<int> power(int k) const; // sigma^k
    std::vector<int> orbit_sizes_of_power(int k) const;
};

struct FrobMap {
    FrobSet source;
    FrobSet target;
    std::vector<int> map; // source id -> target id, equivariant

    void validate() const; // throws if not equivariant or not well-formed
};

// --- point counting presets ---
Int count_affine(const FqField& F, int n);
Int count_projective(const FqField& F, int n);
Int count_gl(const FqField& F, int n); // GL_n, exhaustive for q^{n^2} within budget
// zero locus in P^{nvars-1} of a single form; coeffs indexed by exps
struct FqForm {
    int nvars = 0;
    int degree = 0;
    std::vector<std::vector<int>> monomials; // exponent vectors, total = degree
    std::vector<uint32_t> coeffs;            // same order as monomials
};
std::vector<std::vector<int>> monomials_of_degree(int nvars, int d);
Int count_hypersurface(const FqField& F, const FqForm& form);

struct SmoothCount {
    Int smooth;
    Int total;
};
struct SampleMode {
    bool exhaustive = true;
    uint64_t samples = 0;
    uint64_t seed = 0;
};
// n = 1: squarefree binary forms (gcd with both partials); n = 2: plane curves,
// singular point searched over extensions of degree <= max(1, (d-1)^2)
SmoothCount count_smooth_forms(int n, int d, const FqField& F, const SampleMode& mode = {});

// independent smoothness oracles, used to cross-check the production ones
bool binary_form_smooth_gcd(const FqField& F, const std::vector<uint32_t>& coeffs);
bool binary_form_smooth_resultant(const FqField& F, const std::vector<uint32_t>& coeffs);
bool plane_curve_smooth(const FqField& F, const FqForm& form, int emax_override = 0);

enum class Preset { Affine1, P1, P2 };
Int preset_point_count(Preset preset, const FqField& F);
// closed points of degree e = 1..B via Moebius inversion of extension counts
std::vector<Int> closed_point_counts(Preset preset, uint32_t p, uint32_t k, int B);

// sigma^k-fixed configurations: ordered tuple of pairwise-disjoint subsets of
// sizes M (unordered within a subset), each stable under sigma^k
Int conf_count(const FrobSet& X, const GroupMultiset& M, int k);
// same but with an explicit list of orbit sizes of the acting permutation
Int conf_count_orbits(const std::vector<int>& orbit_sizes, const GroupMultiset& M);

bool check_inclusion_exclusion(const FrobMap& f, int kmax);
bool check_zeta_pole(const FrobSet& X, int kmax);

FrobSet random_frobset(std::mt19937_64& rng, int max_size);
FrobMap random_frobmap(std::mt19937_64& rng, int max_source_size);

struct DensityRow {
    int d;
    Int smooth;
    Int total;
    Rat density;
    Rat prediction;
    Rat gap;
};
std::vector<DensityRow> density_table(int n, int d_lo, int d_hi, const FqField& F,
                                      const SampleMode& mode = {});

} // namespace motstats
