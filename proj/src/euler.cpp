#include "motstats/euler.hpp"

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>

#include "motstats/motring.hpp"

namespace motstats {

namespace {

struct Cell {
    std::vector<int> mono;
    int deg;
    int sign;
    long j;
};

Int factorial(int n) {
    Int f(1);
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// options for one cell used with multiplicity n:
//   positive cell: single group {n}, scalar L^{jn}
//   negative cell: per partition of n, groups = parts, scalar
//                  (-1)^{#parts} * (#orderings) * L^{jn}
std::vector<std::pair<LClass, std::vector<int>>> cell_options(const Cell& cell, int n) {
    std::vector<std::pair<LClass, std::vector<int>>> out;
    LClass twist = LClass::L(cell.j * n);
    if (cell.sign > 0) {
        out.emplace_back(twist, std::vector<int>{n});
        return out;
    }
    for (const auto& lambda : partitions_of(n)) {
        Int orderings = factorial(static_cast<int>(lambda.size()));
        for (size_t a = 0; a < lambda.size();) {
            size_t b = a;
            while (b < lambda.size() && lambda[b] == lambda[a]) ++b;
            orderings /= factorial(static_cast<int>(b - a));
            a = b;
        }
        if (lambda.size() % 2 != 0) orderings = -orderings;
        out.emplace_back(twist * orderings, lambda);
    }
    return out;
}

using Combos = std::map<std::vector<int>, LClass>; // sorted group parts -> scalar

Combos merge_options(const Combos& combos,
                     const std::vector<std::pair<LClass, std::vector<int>>>& opts) {
    Combos out;
    for (const auto& [parts, scalar] : combos)
        for (const auto& [oscalar, oparts] : opts) {
            std::vector<int> merged = parts;
            merged.insert(merged.end(), oparts.begin(), oparts.end());
            std::sort(merged.begin(), merged.end());
            LClass prod = scalar * oscalar;
            auto [it, fresh] = out.try_emplace(std::move(merged), prod);
            if (!fresh) it->second += prod;
        }
    return out;
}

TSeries expand_stratum(const EulerStratum& stratum, const std::vector<std::string>& vars, int D,
                       ConfCache& cache) {
    std::vector<Cell> cells;
    for (const auto& term : stratum.terms) {
        int deg = TSeries::total_degree(term.monomial);
        for (const auto& [j, c] : term.coeff.coeffs) {
            int sign = c > 0 ? 1 : -1;
            Int copies = c > 0 ? c : Int(-c);
            for (Int i = 0; i < copies; ++i) cells.push_back({term.monomial, deg, sign, j});
        }
    }

    // graded convolution: fold cells into a map exponent-vector -> Combos so
    // that equal group multisets merge as early as possible
    std::map<std::vector<int>, Combos> state;
    {
        Combos start;
        start.emplace(std::vector<int>{}, LClass::one());
        state.emplace(std::vector<int>(vars.size(), 0), std::move(start));
    }
    for (const Cell& cell : cells) {
        std::map<std::vector<int>, Combos> next;
        for (const auto& [expvec, combos] : state) {
            int used = TSeries::total_degree(expvec);
            for (int n = 0; used + n * cell.deg <= D; ++n) {
                std::vector<int> ne = expvec;
                for (size_t v = 0; v < vars.size(); ++v) ne[v] += n * cell.mono[v];
                Combos contrib = n == 0 ? combos : merge_options(combos, cell_options(cell, n));
                auto [it, fresh] = next.try_emplace(std::move(ne), contrib);
                if (!fresh)
                    for (auto& [parts, scalar] : contrib) {
                        auto [jt, pfresh] = it->second.try_emplace(parts, scalar);
                        if (!pfresh) jt->second += scalar;
                    }
            }
        }
        state = std::move(next);
    }

    TSeries out(vars, D);
    for (const auto& [expvec, combos] : state) {
        LClass total;
        for (const auto& [parts, scalar] : combos) {
            if (scalar.is_zero()) continue;
            total += scalar * cache.conf_class(GroupMultiset(std::vector<int>(parts)));
        }
        out.add_term(expvec, total);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Counting expansion.  When the base class is a genuine cellular variety
// (a nonnegative combination of nonnegative powers of L), the series is the
// product over closed points: each degree-e point contributes a factor
// 1 + sum_terms coeff(q^e) t^{e*monomial}, and there are a_e(q) such points,
// where a_e is the Moebius inversion of d -> base(q^d).  Every coefficient of
// the result is a polynomial in q agreeing with the class at all prime
// powers, hence equals it.
// ---------------------------------------------------------------------------

using QL = std::map<long, Rat>; // Laurent polynomial in the point count q

void ql_add_scaled(QL& a, const QL& b, const Rat& scale) {
    if (scale == 0) return;
    for (const auto& [e, c] : b) {
        Rat v = c * scale;
        auto [it, fresh] = a.try_emplace(e, v);
        if (!fresh) {
            it->second += v;
            if (it->second == 0) a.erase(it);
        }
    }
}

QL ql_mul(const QL& a, const QL& b) {
    QL out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Rat v = ca * cb;
            auto [it, fresh] = out.try_emplace(ea + eb, v);
            if (!fresh) {
                it->second += v;
                if (it->second == 0) out.erase(it);
            }
        }
    return out;
}

bool counting_base(const LClass& base) {
    for (const auto& [j, c] : base.coeffs)
        if (j < 0 || c < 0) return false;
    return true;
}

std::vector<int> mobius_upto(int n) {
    std::vector<int> mu(n + 1, 1);
    std::vector<bool> composite(n + 1, false);
    std::vector<int> primes;
    for (int i = 2; i <= n; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            mu[i] = -1;
        }
        for (int p : primes) {
            long long v = 1LL * i * p;
            if (v > n) break;
            composite[v] = true;
            if (i % p == 0) {
                mu[v] = 0;
                break;
            }
            mu[v] = -mu[i];
        }
    }
    return mu;
}

using QSeries = std::map<std::vector<int>, QL>;

QSeries qs_mul(const QSeries& a, const QSeries& b, int D) {
    QSeries out;
    for (const auto& [ea, ca] : a) {
        int da = TSeries::total_degree(ea);
        for (const auto& [eb, cb] : b) {
            if (da + TSeries::total_degree(eb) > D) continue;
            std::vector<int> e = ea;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            ql_add_scaled(out[std::move(e)], ql_mul(ca, cb), Rat(1));
        }
    }
    return out;
}

TSeries expand_stratum_counting(const EulerStratum& stratum,
                                const std::vector<std::string>& vars, int D) {
    std::vector<int> mu = mobius_upto(std::max(D, 1));

    QSeries acc;
    acc.emplace(std::vector<int>(vars.size(), 0), QL{{0, Rat(1)}});

    for (int e = 1; e <= D; ++e) {
        // closed points of degree e: a_e = (1/e) sum_{d | e} mu(e/d) base(q^d)
        QL a_e;
        for (int d = 1; d <= e; ++d) {
            if (e % d != 0 || mu[e / d] == 0) continue;
            QL nd;
            for (const auto& [j, c] : stratum.base.coeffs) nd[j * d] += Rat(c);
            ql_add_scaled(a_e, nd, Rat(Int(mu[e / d]), Int(e)));
        }
        if (a_e.empty()) continue;

        // the local factor minus one, with t^m -> t^{e*m} and L -> q^e
        QSeries g;
        for (const auto& term : stratum.terms) {
            if (e * TSeries::total_degree(term.monomial) > D) continue;
            std::vector<int> ev(term.monomial.size());
            for (size_t i = 0; i < ev.size(); ++i) ev[i] = e * term.monomial[i];
            QL co;
            for (const auto& [j, c] : term.coeff.coeffs) co[j * e] += Rat(c);
            ql_add_scaled(g[std::move(ev)], co, Rat(1));
        }
        if (g.empty()) continue;

        // (1 + g)^{a_e} = sum_k binom(a_e, k) g^k, truncated
        QSeries p;
        p.emplace(std::vector<int>(vars.size(), 0), QL{{0, Rat(1)}});
        QSeries gk = g;
        QL falling = a_e; // a_e (a_e - 1) ... (a_e - k + 1)
        Int kfact(1);
        for (int k = 1; !gk.empty(); ++k) {
            kfact *= k;
            for (const auto& [ev, c] : gk)
                ql_add_scaled(p[ev], ql_mul(c, falling), Rat(Int(1), kfact));
            // prepare k+1: falling *= (a_e - k); g^{k+1} truncated
            QL shift = a_e;
            auto [it, fresh] = shift.try_emplace(0, Rat(-k));
            if (!fresh) {
                it->second -= k;
                if (it->second == 0) shift.erase(it);
            }
            falling = ql_mul(falling, shift);
            gk = qs_mul(gk, g, D);
        }
        acc = qs_mul(acc, p, D);
    }

    TSeries out(vars, D);
    for (const auto& [ev, ql] : acc) {
        LClass c;
        for (const auto& [exp, r] : ql) {
            if (r == 0) continue;
            if (denominator(r) != 1)
                throw std::logic_error("expand: counting coefficient not integral");
            c += LClass::monomial(exp, numerator(r));
        }
        if (!c.is_zero()) out.add_term(ev, c);
    }
    return out;
}

} // namespace

void EulerFactorSpec::validate() const {
    if (strata.size() > kEulerStratumLimit)
        throw std::invalid_argument("euler spec: too many strata");
    for (const auto& st : strata) {
        if (st.base.is_zero()) throw std::invalid_argument("euler spec: zero base class");
        for (const auto& term : st.terms) {
            if (term.monomial.size() != variables.size())
                throw std::invalid_argument("euler spec: term references undeclared variables");
            for (int e : term.monomial)
                if (e < 0) throw std::invalid_argument("euler spec: negative exponent");
            if (TSeries::total_degree(term.monomial) < 1)
                throw std::invalid_argument("euler spec: constant term must be implicit");
        }
    }
}

TSeries expand(const EulerFactorSpec& spec, int D, ExpandStrategy strategy) {
    spec.validate();
    if (D < 0) throw std::invalid_argument("expand: D >= 0 required");
    if (D > kEulerExpandHardLimit)
        throw std::invalid_argument("expand: degree limit exceeded");
    TSeries acc = TSeries::unit(spec.variables, D);
    std::map<LClass, std::unique_ptr<ConfCache>> caches;
    for (const auto& st : spec.strata) {
        bool countable = counting_base(st.base);
        if (strategy == ExpandStrategy::counting && !countable)
            throw std::invalid_argument(
                "expand: counting strategy needs variety base classes");
        bool use_counting = strategy != ExpandStrategy::stratification && countable;
        if (use_counting) {
            acc = acc * expand_stratum_counting(st, spec.variables, D);
            continue;
        }
        auto it = caches.find(st.base);
        if (it == caches.end())
            it = caches.emplace(st.base, std::make_unique<ConfCache>(st.base)).first;
        acc = acc * expand_stratum(st, spec.variables, D, *it->second);
    }
    return acc;
}

TSeries substitute_monomial(const TSeries& series, const std::vector<std::vector<int>>& A,
                            const std::vector<long>& twists,
                            std::vector<std::string> target_vars) {
    if (A.size() != series.variables.size() || twists.size() != series.variables.size())
        throw std::invalid_argument("substitute_monomial: shape mismatch");
    for (const auto& row : A) {
        if (row.size() != target_vars.size())
            throw std::invalid_argument("substitute_monomial: shape mismatch");
        bool nonzero = false;
        for (int a : row) {
            if (a < 0) throw std::invalid_argument("substitute_monomial: negative exponent");
            nonzero = nonzero || a > 0;
        }
        if (!nonzero)
            throw std::invalid_argument("substitute_monomial: variable mapped to a constant");
    }
    TSeries out(std::move(target_vars), series.maxdeg);
    for (const auto& [e, c] : series.coeffs) {
        std::vector<int> ne(out.variables.size(), 0);
        long twist = 0;
        for (size_t i = 0; i < e.size(); ++i) {
            twist += static_cast<long>(e[i]) * twists[i];
            for (size_t jj = 0; jj < ne.size(); ++jj) ne[jj] += e[i] * A[i][jj];
        }
        out.add_term(ne, c * LClass::L(twist));
    }
    return out;
}

std::optional<long> dim_bound(const EulerFactorSpec& spec, int k) {
    if (k < 1) throw std::invalid_argument("dim_bound: k >= 1 required");
    std::optional<Rat> best;
    for (const auto& st : spec.strata) {
        auto db = st.base.dim();
        if (!db) continue;
        for (const auto& term : st.terms) {
            auto dc = term.coeff.dim();
            if (!dc) continue;
            Rat ratio(Int(*db + *dc), Int(TSeries::total_degree(term.monomial)));
            if (!best || ratio > *best) best = ratio;
        }
    }
    if (!best) return std::nullopt;
    Rat bound = Rat(k) * *best;
    // floor of the rational bound is still an upper bound for integer dims
    Int num = numerator(bound), den = denominator(bound);
    Int q = num / den;
    if (num < 0 && q * den != num) q -= 1;
    return static_cast<long>(q);
}

FilteredClass evaluate_at(const EulerFactorSpec& spec, const std::vector<long>& N, long floor,
                          int degree_limit) {
    spec.validate();
    if (N.size() != spec.variables.size())
        throw std::invalid_argument("evaluate_at: one exponent per variable required");
    for (long n : N)
        if (n < 0) throw std::invalid_argument("evaluate_at: N >= 0 required");

    // slope of the per-degree dimension bound after substitution; must be < 0
    std::optional<Rat> slope;
    bool any_terms = false;
    for (const auto& st : spec.strata) {
        auto db = st.base.dim();
        for (const auto& term : st.terms) {
            auto dc = term.coeff.dim();
            if (!db || !dc) continue;
            any_terms = true;
            long shift = 0;
            for (size_t i = 0; i < N.size(); ++i)
                shift += static_cast<long>(term.monomial[i]) * N[i];
            Rat s(Int(*db + *dc - shift), Int(TSeries::total_degree(term.monomial)));
            if (!slope || s > *slope) slope = s;
        }
    }
    if (!any_terms) return FilteredClass(LClass::one(), floor); // empty product
    if (*slope >= 0)
        throw DivergentProduct("evaluate_at: radius-of-convergence condition fails");

    // smallest kmax with (kmax+1)*slope <= floor
    Rat need = Rat(floor) / *slope; // positive
    Int kplus = numerator(need) / denominator(need);
    if (Rat(kplus) < need) kplus += 1;
    long kmax = static_cast<long>(kplus) - 1;
    if (kmax < 0) kmax = 0;
    if (kmax > degree_limit)
        throw FloorUnreachable("evaluate_at: floor needs degree beyond configured limit");

    TSeries series = expand(spec, static_cast<int>(kmax));
    FilteredClass acc;
    acc.floor = floor;
    for (const auto& [e, c] : series.coeffs) {
        long shift = 0;
        for (size_t i = 0; i < e.size(); ++i) shift -= static_cast<long>(e[i]) * N[i];
        for (const auto& [exp, cf] : c.coeffs) {
            long ee = exp + shift;
            if (ee <= floor) continue;
            auto [it, fresh] = acc.terms.try_emplace(ee, cf);
            if (!fresh) {
                it->second += cf;
                if (it->second == 0) acc.terms.erase(it);
            }
        }
    }
    return acc;
}

} // namespace motstats
