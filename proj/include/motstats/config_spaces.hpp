#pragma once

#include <mutex>
#include <vector>

#include "motstats/lclass.hpp"
#include "motstats/tseries.hpp"

namespace motstats {

// Multiset of positive integers, canonically sorted ascending.
struct GroupMultiset {
    std::vector<int> parts;

    GroupMultiset() = default;
    GroupMultiset(std::initializer_list<int> p) : parts(p) { normalize(); }
    explicit GroupMultiset(std::vector<int> p) : parts(std::move(p)) { normalize(); }

    void normalize();
    int total() const;
    int count() const { return static_cast<int>(parts.size()); }
    bool operator<(const GroupMultiset& o) const { return parts < o.parts; }
    bool operator==(const GroupMultiset& o) const { return parts == o.parts; }
};

struct Composition {
    std::vector<int> parts; // ordered, all >= 1
    int total() const;
};

// all compositions of n (2^{n-1} of them); n = 0 gives the empty composition
std::vector<Composition> compositions_of(int n);
// all partitions of n as descending part lists
std::vector<std::vector<int>> partitions_of(int n);

inline constexpr int kConfTotalLimit = 64;

// Memoized configuration-class calculator for a fixed ambient class.
// Thread safety: a shared instance serializes through an internal mutex.
class ConfCache {
public:
    explicit ConfCache(LClass ambient) : x_(std::move(ambient)) {}

    const LClass& ambient() const { return x_; }
    // class of configurations of distinct points: one distinguishable group
    // of unordered points per part of M
    LClass conf_class(const GroupMultiset& M);

private:
    LClass compute(const GroupMultiset& M);
    LClass x_;
    std::map<std::vector<int>, LClass> memo_;
    std::recursive_mutex mu_;
};

LClass conf_class(const LClass& x, const GroupMultiset& M);

// sum_{n<=D} [C^n X] t^n
TSeries conf_generating(const LClass& x, int D);

// sum_{n<=D} [Sym^n_{[m]} X] t^n: degree-n cycles supported on exactly m points
TSeries kapranov_m(const LClass& x, int m, int D);
TSeries kapranov_m(ConfCache& cache, int m, int D);

} // namespace motstats
