#include "motstats/config_spaces.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "motstats/motring.hpp"

namespace motstats {

void GroupMultiset::normalize() {
    for (int p : parts)
        if (p < 1) throw std::invalid_argument("GroupMultiset parts must be >= 1");
    std::sort(parts.begin(), parts.end());
}

int GroupMultiset::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Composition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    if (n == 0) {
        out.push_back(Composition{});
        return out;
    }
    Composition cur;
    // first part 1..n, recurse on the rest
    std::vector<int> stack;
    std::function<void(int)> rec = [&](int rem) {
        if (rem == 0) {
            out.push_back(Composition{stack});
            return;
        }
        for (int p = 1; p <= rem; ++p) {
            stack.push_back(p);
            rec(rem - p);
            stack.pop_back();
        }
    };
    rec(n);
    return out;
}

std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

LClass ConfCache::conf_class(const GroupMultiset& M) {
    if (M.total() > kConfTotalLimit)
        throw std::invalid_argument("conf_class: total group size beyond configured limit");
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = memo_.find(M.parts);
    if (it != memo_.end()) return it->second;
    LClass value = compute(M);
    memo_.emplace(M.parts, value);
    return value;
}

// Remove the largest group, of size n, and stratify Sym^n(X) x C^{M'}(X) by
// how the degree-n cycle meets the configuration: support points of the cycle
// carry multiplicities (a partition of n) and each either marks an existing
// configuration point (at most one per point) or is fresh.  The unique
// stratum of full total, all points simple and fresh, is the target class.
LClass ConfCache::compute(const GroupMultiset& M) {
    if (M.parts.empty()) return LClass::one();
    int n = M.parts.back();
    GroupMultiset rest(std::vector<int>(M.parts.begin(), M.parts.end() - 1));
    LClass acc = sym_n(x_, n) * conf_class(rest);

    const std::vector<int>& groups = rest.parts;
    const int r = static_cast<int>(groups.size());

    for (const auto& lambda : partitions_of(n)) {
        // multiplicity classes: mult value i -> number of support points mu_i
        std::vector<std::pair<int, int>> classes; // (i, mu_i), i descending
        for (size_t a = 0; a < lambda.size();) {
            size_t b = a;
            while (b < lambda.size() && lambda[b] == lambda[a]) ++b;
            classes.emplace_back(lambda[a], static_cast<int>(b - a));
            a = b;
        }
        bool all_simple = (lambda.size() == static_cast<size_t>(n)); // all parts 1

        std::vector<int> marks(r, 0);                  // marks used per group
        std::vector<std::vector<int>> jparts(classes.size()); // j_{i,s} > 0 parts
        std::vector<int> fresh(classes.size(), 0);

        // distribute the mu_i points of class ci over groups and fresh slots
        std::function<void(size_t)> over_classes = [&](size_t ci) {
            if (ci == classes.size()) {
                bool leading = all_simple;
                if (leading)
                    for (int s = 0; s < r; ++s)
                        if (marks[s] != 0) { leading = false; break; }
                if (leading) return; // the stratum being solved for
                std::vector<int> parts;
                for (int s = 0; s < r; ++s)
                    if (groups[s] - marks[s] > 0) parts.push_back(groups[s] - marks[s]);
                for (size_t c = 0; c < classes.size(); ++c) {
                    for (int j : jparts[c]) parts.push_back(j);
                    if (fresh[c] > 0) parts.push_back(fresh[c]);
                }
                acc -= conf_class(GroupMultiset(std::move(parts)));
                return;
            }
            int mu = classes[ci].second;
            std::function<void(int, int)> over_groups = [&](int s, int remaining) {
                if (s == r) {
                    fresh[ci] = remaining;
                    over_classes(ci + 1);
                    fresh[ci] = 0;
                    return;
                }
                int cap = std::min(groups[s] - marks[s], remaining);
                for (int j = 0; j <= cap; ++j) {
                    if (j > 0) {
                        marks[s] += j;
                        jparts[ci].push_back(j);
                    }
                    over_groups(s + 1, remaining - j);
                    if (j > 0) {
                        marks[s] -= j;
                        jparts[ci].pop_back();
                    }
                }
            };
            over_groups(0, mu);
        };
        over_classes(0);
    }
    return acc;
}

LClass conf_class(const LClass& x, const GroupMultiset& M) {
    ConfCache cache(x);
    return cache.conf_class(M);
}

TSeries conf_generating(const LClass& x, int D) {
    if (D < 0) throw std::invalid_argument("conf_generating: D >= 0 required");
    ConfCache cache(x);
    TSeries s({"t"}, D);
    s.add_term({0}, LClass::one());
    for (int n = 1; n <= D; ++n) s.add_term({n}, cache.conf_class(GroupMultiset{n}));
    return s;
}

TSeries kapranov_m(ConfCache& cache, int m, int D) {
    if (m < 0 || D < 0) throw std::invalid_argument("kapranov_m: m, D >= 0 required");
    TSeries s({"t"}, D);
    if (m == 0) {
        s.add_term({0}, LClass::one());
        return s;
    }
    for (int n = m; n <= D; ++n) {
        LClass coeff;
        // partitions of n with exactly m parts <-> support-multiplicity data
        for (const auto& lambda : partitions_of(n)) {
            if (lambda.size() != static_cast<size_t>(m)) continue;
            // m_i = number of parts of size i; the groups are the nonzero m_i
            std::vector<int> parts;
            for (size_t a = 0; a < lambda.size();) {
                size_t b = a;
                while (b < lambda.size() && lambda[b] == lambda[a]) ++b;
                parts.push_back(static_cast<int>(b - a));
                a = b;
            }
            coeff += cache.conf_class(GroupMultiset(std::move(parts)));
        }
        s.add_term({n}, coeff);
    }
    return s;
}

TSeries kapranov_m(const LClass& x, int m, int D) {
    ConfCache cache(x);
    return kapranov_m(cache, m, D);
}

} // namespace motstats
