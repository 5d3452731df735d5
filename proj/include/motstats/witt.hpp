#pragma once

#include <map>
#include <vector>

#include "motstats/lclass.hpp"

namespace motstats {

// Finitely supported integer divisor on nonzero rationals a, encoding the
// rational function f(t) = prod_a (1 - t a)^{-k_a}, f(0) = 1.
// Function multiplication is divisor addition; the ring product is bilinear
// with [a]*[b] = [ab] (unit [1]).
struct WittDivisor {
    std::map<Rat, Int> support;

    WittDivisor() = default;
    static WittDivisor unit() { return single(Rat(1), Int(1)); }
    static WittDivisor single(const Rat& a, Int k);

    bool is_zero() const { return support.empty(); }
    void add_point(const Rat& a, const Int& k);
    bool operator==(const WittDivisor& o) const { return support == o.support; }
};

WittDivisor witt_add(const WittDivisor& f, const WittDivisor& g);
WittDivisor witt_neg(const WittDivisor& f);
WittDivisor witt_sub(const WittDivisor& f, const WittDivisor& g);
WittDivisor witt_mul(const WittDivisor& f, const WittDivisor& g);
// f(t) -> f(c t): scales the support by c
WittDivisor witt_scale_roots(const WittDivisor& f, const Rat& c);

// L^j |-> [q^j]; k_{q^j} = coefficient of L^j
WittDivisor specialize(const LClass& c, const Rat& q);

// ghost coordinate: sum_a k_a a^k (point count over the k-th extension when
// f is a zeta function)
Rat ghost(const WittDivisor& f, int k);

// coefficients of s^0..s^D of sigma_s(f) = prod_a (1 - s[a])^{-k_a},
// computed in the Witt ring
std::vector<WittDivisor> sigma_s(const WittDivisor& f, int D);

Rat hadamard_norm(const WittDivisor& f);
Rat hadamard_dist(const WittDivisor& f, const WittDivisor& g);
// max |a| over the support of the difference (0 if equal)
Rat weight_dist(const WittDivisor& f, const WittDivisor& g);
// 2^{-j*} for the first Taylor coefficient j* <= N at which f and g differ
Rat witt_dist(const WittDivisor& f, const WittDivisor& g, int N);

// first N+1 Taylor coefficients of f at 0 (Newton recurrence on ghosts)
std::vector<Rat> taylor_coeffs(const WittDivisor& f, int N);

// Truncated special value of the zeta-side Kapranov zeta function:
//   head = Witt sum over 0 <= k <= K of the divisor of Z_{Sym^k x}(q^{-kN} t),
//   tail_bound = Hadamard-norm bound on everything beyond K.
struct HadamardValue {
    WittDivisor head;
    Rat tail_bound;
    int K = 0;
};

HadamardValue kapranov_special_witt(const LClass& x, const Rat& q, long N, int K);

struct ConjectureDistances {
    Rat witt;
    Rat weight;
    Rat hadamard;
};

inline constexpr int kWittDistDepth = 20;

// distances between the normalized class of smooth degree-d binary forms and
// the limit divisor, both specialized at q
ConjectureDistances conjecture_p1_distances(int d, const Rat& q);

} // namespace motstats
