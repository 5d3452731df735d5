#include "motstats/witt.hpp"

#include <algorithm>
#include <stdexcept>

#include "motstats/motring.hpp"
#include "motstats/theorems.hpp"

namespace motstats {

WittDivisor WittDivisor::single(const Rat& a, Int k) {
    WittDivisor f;
    if (a == 0) throw std::invalid_argument("WittDivisor: support must avoid zero");
    if (k != 0) f.support.emplace(a, std::move(k));
    return f;
}

void WittDivisor::add_point(const Rat& a, const Int& k) {
    if (a == 0) throw std::invalid_argument("WittDivisor: support must avoid zero");
    if (k == 0) return;
    auto [it, fresh] = support.try_emplace(a, k);
    if (!fresh) {
        it->second += k;
        if (it->second == 0) support.erase(it);
    }
}

WittDivisor witt_add(const WittDivisor& f, const WittDivisor& g) {
    WittDivisor r = f;
    for (const auto& [a, k] : g.support) r.add_point(a, k);
    return r;
}

WittDivisor witt_neg(const WittDivisor& f) {
    WittDivisor r;
    for (const auto& [a, k] : f.support) r.support.emplace(a, -k);
    return r;
}

WittDivisor witt_sub(const WittDivisor& f, const WittDivisor& g) {
    return witt_add(f, witt_neg(g));
}

WittDivisor witt_mul(const WittDivisor& f, const WittDivisor& g) {
    WittDivisor r;
    for (const auto& [a, ka] : f.support)
        for (const auto& [b, kb] : g.support) r.add_point(a * b, ka * kb);
    return r;
}

WittDivisor witt_scale_roots(const WittDivisor& f, const Rat& c) {
    if (c == 0) throw std::invalid_argument("witt_scale_roots: nonzero scale required");
    WittDivisor r;
    for (const auto& [a, k] : f.support) r.support.emplace(a * c, k);
    return r;
}

WittDivisor specialize(const LClass& c, const Rat& q) {
    if (!(q > 1)) throw std::invalid_argument("specialize: q > 1 required");
    WittDivisor r;
    for (const auto& [j, k] : c.coeffs) r.support.emplace(rat_pow(q, j), k);
    return r;
}

Rat ghost(const WittDivisor& f, int k) {
    if (k < 1) throw std::invalid_argument("ghost: k >= 1 required");
    Rat acc(0);
    for (const auto& [a, m] : f.support) acc += Rat(m) * rat_pow(a, k);
    return acc;
}

namespace {

using WSeries = std::vector<WittDivisor>; // coefficients of s^0..s^D

WSeries wseries_unit(int D) {
    WSeries s(D + 1);
    s[0] = WittDivisor::unit();
    return s;
}

WSeries wseries_mul(const WSeries& a, const WSeries& b) {
    int D = static_cast<int>(a.size()) - 1;
    WSeries r(D + 1);
    for (int i = 0; i <= D; ++i)
        for (int j = 0; i + j <= D; ++j)
            r[i + j] = witt_add(r[i + j], witt_mul(a[i], b[j]));
    return r;
}

} // namespace

std::vector<WittDivisor> sigma_s(const WittDivisor& f, int D) {
    if (D < 0) throw std::invalid_argument("sigma_s: D >= 0 required");
    WSeries acc = wseries_unit(D);
    for (const auto& [a, k] : f.support) {
        WSeries factor(D + 1);
        if (k > 0) {
            Rat p(1);
            for (int j = 0; j <= D; ++j) {
                factor[j] = WittDivisor::single(p, Int(1)); // [a^j]
                p *= a;
            }
        } else {
            factor[0] = WittDivisor::unit();
            if (D >= 1) factor[1] = WittDivisor::single(a, Int(-1)); // 1 - s[a]
        }
        Int times = k > 0 ? k : Int(-k);
        for (Int i = 0; i < times; ++i) acc = wseries_mul(acc, factor);
    }
    return acc;
}

Rat hadamard_norm(const WittDivisor& f) {
    Rat acc(0);
    for (const auto& [a, k] : f.support) acc += Rat(k < 0 ? Int(-k) : k) * rat_abs(a);
    return acc;
}

Rat hadamard_dist(const WittDivisor& f, const WittDivisor& g) {
    return hadamard_norm(witt_sub(f, g));
}

Rat weight_dist(const WittDivisor& f, const WittDivisor& g) {
    Rat best(0);
    for (const auto& [a, k] : witt_sub(f, g).support) best = std::max(best, rat_abs(a));
    return best;
}

std::vector<Rat> taylor_coeffs(const WittDivisor& f, int N) {
    if (N < 0) throw std::invalid_argument("taylor_coeffs: N >= 0 required");
    std::vector<Rat> c(N + 1);
    std::vector<Rat> g(N + 1);
    for (int m = 1; m <= N; ++m) g[m] = ghost(f, m);
    c[0] = Rat(1);
    for (int n = 1; n <= N; ++n) {
        Rat acc(0);
        for (int m = 1; m <= n; ++m) acc += g[m] * c[n - m];
        c[n] = acc / n;
    }
    return c;
}

Rat witt_dist(const WittDivisor& f, const WittDivisor& g, int N) {
    auto cf = taylor_coeffs(f, N);
    auto cg = taylor_coeffs(g, N);
    for (int j = 0; j <= N; ++j)
        if (cf[j] != cg[j]) return rat_pow(Rat(1, 2), j);
    return Rat(0);
}

HadamardValue kapranov_special_witt(const LClass& x, const Rat& q, long N, int K) {
    auto d = x.dim();
    if (d && N <= *d)
        throw std::domain_error("kapranov_special_witt: divergent, need N > dim");
    if (K < 0) throw std::invalid_argument("kapranov_special_witt: K >= 0 required");

    HadamardValue v;
    v.K = K;
    v.head = WittDivisor::unit(); // the k = 0 term: zeta of a point
    for (int k = 1; k <= K; ++k) {
        WittDivisor zk = specialize(sym_n(x, k), q);
        v.head = witt_add(v.head, witt_scale_roots(zk, rat_pow(q, -static_cast<long>(k) * N)));
    }

    if (!d) {
        v.tail_bound = Rat(0); // zero class: Sym^k vanishes for k >= 1
        return v;
    }
    // term k has at most (k+1)^e support points counted with multiplicity,
    // each of size <= q^{k(dim-N)}: majorize by a geometric series with ratio
    // ((K+2)/(K+1))^e * q^{dim-N}.  e = dim+1 suffices for multiplicity-free
    // cellular classes; the total-cell-count exponent covers the rest.
    long dim = *d;
    Int cells(0);
    for (const auto& [j, cj] : x.coeffs) cells += cj < 0 ? Int(-cj) : cj;
    long e = std::max(dim + 1, static_cast<long>(cells));
    Rat rho = rat_pow(q, dim - N);
    Rat ratio = rat_pow(Rat(K + 2, K + 1), e) * rho;
    if (!(ratio < 1))
        throw std::domain_error("kapranov_special_witt: truncation too small for the majorant");
    Rat first = rat_pow(Rat(K + 2), e) * rat_pow(rho, K + 1);
    v.tail_bound = first / (Rat(1) - ratio);
    return v;
}

ConjectureDistances conjecture_p1_distances(int d, const Rat& q) {
    if (d < 1) throw std::invalid_argument("conjecture_p1_distances: d >= 1 required");
    WittDivisor f = specialize(p1_smooth_class(d) * LClass::L(-(static_cast<long>(d) + 1)), q);
    WittDivisor g = specialize(gl_class(1) * LClass::L(-4), q);
    ConjectureDistances out;
    out.witt = witt_dist(f, g, kWittDistDepth);
    out.weight = weight_dist(f, g);
    out.hadamard = hadamard_dist(f, g);
    return out;
}

} // namespace motstats
