#include "motstats/ffverify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace motstats {

uint64_t ff_budget() {
    static uint64_t budget = [] {
        if (const char* env = std::getenv("MOTSTATS_FF_BUDGET")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<uint64_t>(v);
        }
        return uint64_t(1) << 30;
    }();
    return budget;
}

namespace {

struct ModulusEntry {
    uint32_t p;
    uint32_t k;
    std::vector<uint32_t> coeffs; // low-first, monic
};

// smallest-lex monic irreducible over F_p per degree; fixed so that every
// count in this module is reproducible bit-for-bit
const std::vector<ModulusEntry>& moduli_table() {
    static const std::vector<ModulusEntry> table = {
        {2, 1, {1, 1}},
        {2, 2, {1, 1, 1}},
        {2, 3, {1, 0, 1, 1}},
        {2, 4, {1, 0, 0, 1, 1}},
        {2, 5, {1, 0, 0, 1, 0, 1}},
        {2, 6, {1, 0, 0, 0, 0, 1, 1}},
        {2, 7, {1, 0, 0, 0, 0, 0, 1, 1}},
        {2, 8, {1, 0, 0, 0, 1, 1, 0, 1, 1}},
        {2, 9, {1, 0, 0, 0, 0, 0, 0, 0, 1, 1}},
        {2, 10, {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1}},
        {2, 11, {1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1}},
        {2, 12, {1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1}},
        {2, 13, {1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1}},
        {2, 14, {1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
        {2, 15, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1}},
        {2, 16, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 1}},
        {2, 17, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1}},
        {2, 18, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1}},
        {2, 19, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1}},
        {2, 20, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1}},
        {3, 1, {1, 1}},
        {3, 2, {1, 0, 1}},
        {3, 3, {1, 0, 2, 1}},
        {3, 4, {1, 0, 1, 1, 1}},
        {3, 5, {1, 0, 0, 0, 2, 1}},
        {3, 6, {1, 0, 0, 0, 1, 1, 1}},
        {3, 7, {1, 0, 0, 0, 0, 1, 2, 1}},
        {3, 8, {1, 0, 0, 0, 0, 1, 1, 0, 1}},
        {3, 9, {1, 0, 0, 0, 0, 0, 2, 1, 0, 1}},
        {3, 10, {1, 0, 0, 0, 0, 0, 0, 0, 2, 0, 1}},
        {3, 11, {1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 1}},
        {3, 12, {1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1}},
        {5, 1, {1, 1}},
        {5, 2, {1, 1, 1}},
        {5, 3, {1, 0, 1, 1}},
        {5, 4, {1, 0, 1, 1, 1}},
        {5, 5, {1, 0, 0, 0, 4, 1}},
        {5, 6, {1, 0, 0, 0, 1, 1, 1}},
        {5, 7, {1, 0, 0, 0, 0, 0, 1, 1}},
        {5, 8, {1, 0, 0, 0, 0, 1, 1, 0, 1}},
        {7, 1, {1, 1}},
        {7, 2, {1, 0, 1}},
        {7, 3, {1, 0, 1, 1}},
        {7, 4, {1, 0, 0, 1, 1}},
        {7, 5, {1, 0, 0, 0, 3, 1}},
        {7, 6, {1, 0, 0, 0, 1, 0, 1}},
        {7, 7, {1, 0, 0, 0, 0, 0, 6, 1}},
        {11, 1, {1, 1}},
        {11, 2, {1, 0, 1}},
        {11, 3, {1, 0, 4, 1}},
        {11, 4, {1, 0, 0, 4, 1}},
        {11, 5, {1, 0, 0, 0, 2, 1}},
        {13, 1, {1, 1}},
        {13, 2, {1, 3, 1}},
        {13, 3, {1, 0, 4, 1}},
        {13, 4, {1, 0, 0, 1, 1}},
        {13, 5, {1, 0, 0, 0, 8, 1}},
    };
    return table;
}

// polynomial arithmetic over the prime field, used for modulus verification
using PPoly = std::vector<uint32_t>;

int ppoly_deg(const PPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

PPoly ppoly_mulmod(uint32_t p, const PPoly& a, const PPoly& b, const PPoly& mod) {
    int k = ppoly_deg(mod);
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (size_t j = 0; j < b.size(); ++j)
                r[i + j] = (r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p;
    for (int i = static_cast<int>(r.size()) - 1; i >= k; --i) {
        uint32_t c = r[i];
        if (!c) continue;
        r[i] = 0;
        for (int j = 0; j < k; ++j)
            r[i - k + j] = (r[i - k + j] + static_cast<uint64_t>(c) * (p - mod[j] % p)) % p;
    }
    r.resize(k);
    return r;
}

PPoly ppoly_xpow(uint32_t p, uint64_t e, const PPoly& mod) {
    int k = ppoly_deg(mod);
    PPoly result(k, 0);
    result[0] = 1;
    PPoly base(k, 0);
    if (k == 1) {
        // x = -c0 in F_p[x]/(x + c0)
        base[0] = (p - mod[0] % p) % p;
    } else {
        base[1] = 1;
    }
    while (e > 0) {
        if (e & 1) result = ppoly_mulmod(p, result, base, mod);
        base = ppoly_mulmod(p, base, base, mod);
        e >>= 1;
    }
    return result;
}

PPoly ppoly_gcd(uint32_t p, PPoly a, PPoly b) {
    auto inv_mod_p = [p](uint32_t v) {
        uint32_t r = 1, base = v % p;
        uint32_t e = p - 2;
        while (e) {
            if (e & 1) r = static_cast<uint64_t>(r) * base % p;
            base = static_cast<uint64_t>(base) * base % p;
            e >>= 1;
        }
        return r;
    };
    while (true) {
        int db = ppoly_deg(b);
        if (db < 0) return a;
        int da = ppoly_deg(a);
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        uint32_t c = static_cast<uint64_t>(a[da]) * inv_mod_p(b[db]) % p;
        for (int j = 0; j <= db; ++j)
            a[da - db + j] = (a[da - db + j] + static_cast<uint64_t>(c) * (p - b[j]) % p) % p;
    }
}

bool verify_irreducible(uint32_t p, const PPoly& mod) {
    int k = ppoly_deg(mod);
    if (k < 1 || mod[k] != 1) return false;
    if (k == 1) return true;
    uint64_t pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    PPoly xq = ppoly_xpow(p, pk, mod);
    PPoly x(k, 0);
    x[1] = 1;
    if (xq != x) return false;
    for (int l = 2; l <= k; ++l) {
        if (k % l != 0) continue;
        bool prime = true;
        for (int m = 2; m * m <= l; ++m)
            if (l % m == 0) { prime = false; break; }
        if (!prime) continue;
        uint64_t e = 1;
        for (int i = 0; i < k / l; ++i) e *= p;
        PPoly g = ppoly_xpow(p, e, mod);
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] + p - 1) % p; // x^{p^{k/l}} - x
        PPoly d = ppoly_gcd(p, PPoly(mod), g);
        if (ppoly_deg(d) != 0) return false;
    }
    return true;
}

constexpr uint64_t kMulTableLimit = 1024;

} // namespace

FqField::FqField(uint32_t p, uint32_t k) : p_(p), k_(k) {
    if (k < 1) throw std::invalid_argument("FqField: degree >= 1 required");
    q_ = 1;
    for (uint32_t i = 0; i < k; ++i) {
        q_ *= p;
        if (q_ > (uint64_t(1) << 20)) throw std::invalid_argument("FqField: q <= 2^20 required");
    }
    for (const auto& entry : moduli_table())
        if (entry.p == p && entry.k == k) modulus_ = entry.coeffs;
    if (modulus_.empty())
        throw std::invalid_argument("FqField: no modulus in the table for this (p, k)");
    if (!verify_irreducible(p_, modulus_))
        throw std::logic_error("FqField: table modulus failed the irreducibility check");
    if (q_ <= kMulTableLimit) {
        use_table_ = true;
        mul_table_.assign(q_ * q_, 0);
        for (uint64_t a = 0; a < q_; ++a)
            for (uint64_t b = a; b < q_; ++b) {
                uint32_t v = mul_raw(static_cast<uint32_t>(a), static_cast<uint32_t>(b));
                mul_table_[a * q_ + b] = v;
                mul_table_[b * q_ + a] = v;
            }
    }
}

uint32_t FqField::add(uint32_t a, uint32_t b) const {
    uint32_t r = 0, scale = 1;
    for (uint32_t i = 0; i < k_; ++i) {
        uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        r += ((da + db) % p_) * scale;
        scale *= p_;
    }
    return r;
}

uint32_t FqField::neg(uint32_t a) const {
    uint32_t r = 0, scale = 1;
    for (uint32_t i = 0; i < k_; ++i) {
        uint32_t da = a % p_;
        a /= p_;
        r += ((p_ - da) % p_) * scale;
        scale *= p_;
    }
    return r;
}

uint32_t FqField::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t FqField::mul_raw(uint32_t a, uint32_t b) const {
    // digit vectors, schoolbook product, reduction by the monic modulus
    std::vector<uint32_t> da(k_), db(k_), prod(2 * k_ - 1, 0);
    for (uint32_t i = 0; i < k_; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    for (uint32_t i = 0; i < k_; ++i)
        if (da[i])
            for (uint32_t j = 0; j < k_; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    for (int i = static_cast<int>(prod.size()) - 1; i >= static_cast<int>(k_); --i) {
        uint32_t c = prod[i];
        if (!c) continue;
        prod[i] = 0;
        for (uint32_t j = 0; j < k_; ++j)
            prod[i - k_ + j] = (prod[i - k_ + j] + c * ((p_ - modulus_[j] % p_) % p_)) % p_;
    }
    uint32_t r = 0, scale = 1;
    for (uint32_t i = 0; i < k_; ++i) {
        r += prod[i] * scale;
        scale *= p_;
    }
    return r;
}

uint32_t FqField::mul(uint32_t a, uint32_t b) const {
    if (use_table_) return mul_table_[static_cast<uint64_t>(a) * q_ + b];
    return mul_raw(a, b);
}

uint32_t FqField::pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint32_t FqField::inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("FqField: inverse of zero");
    return pow(a, q_ - 2);
}

uint32_t FqField::embed(const FqField& sub, uint32_t a) const {
    if (sub.p_ != p_ || k_ % sub.k_ != 0)
        throw std::invalid_argument("FqField::embed: not a subfield");
    if (sub.k_ == 1) return a % p_;
    if (embed_pow_.empty()) {
        // deterministic: smallest root of the subfield modulus in this field
        auto* self = const_cast<FqField*>(this);
        for (uint32_t cand = 0; cand < q_; ++cand) {
            uint32_t acc = 0, power = 1;
            for (uint32_t i = 0; i <= sub.k_; ++i) {
                acc = add(acc, mul(from_int(sub.modulus()[i]), power));
                power = mul(power, cand);
            }
            if (acc == 0) {
                self->embed_pow_.resize(sub.k_);
                uint32_t pw = 1;
                for (uint32_t i = 0; i < sub.k_; ++i) {
                    self->embed_pow_[i] = pw;
                    pw = mul(pw, cand);
                }
                break;
            }
        }
        if (embed_pow_.empty()) throw std::logic_error("FqField::embed: no root found");
    }
    uint32_t r = 0;
    for (uint32_t i = 0; i < sub.k_; ++i) {
        r = add(r, mul(from_int(a % sub.p_), embed_pow_[i]));
        a /= sub.p_;
    }
    return r;
}

// --- univariate polynomials over a field ---

FqPoly poly_trim(FqPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

int poly_deg(const FqPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

FqPoly poly_add(const FqField& F, const FqPoly& a, const FqPoly& b) {
    FqPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    return poly_trim(r);
}

FqPoly poly_mul(const FqField& F, const FqPoly& a, const FqPoly& b) {
    if (a.empty() || b.empty()) return {};
    FqPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (size_t j = 0; j < b.size(); ++j)
                r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    return poly_trim(r);
}

FqPoly poly_mod(const FqField& F, FqPoly a, const FqPoly& b) {
    int db = poly_deg(b);
    if (db < 0) throw std::domain_error("poly_mod: division by zero polynomial");
    uint32_t lead_inv = F.inv(b[db]);
    for (int i = poly_deg(a); i >= db; i = poly_deg(a)) {
        uint32_t c = F.mul(a[i], lead_inv);
        for (int j = 0; j <= db; ++j)
            a[i - db + j] = F.sub(a[i - db + j], F.mul(c, b[j]));
    }
    return poly_trim(a);
}

FqPoly poly_gcd(const FqField& F, FqPoly a, FqPoly b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (poly_deg(b) >= 0) {
        FqPoly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

FqPoly poly_derivative(const FqField& F, const FqPoly& f) {
    FqPoly r;
    for (size_t i = 1; i < f.size(); ++i) {
        uint32_t c = 0;
        for (size_t rep = 0; rep < i % F.p(); ++rep) c = F.add(c, f[i]);
        r.push_back(c);
    }
    return poly_trim(r);
}

// --- FrobSet ---

std::vector<int> FrobSet::power(int k) const {
    std::vector<int> tau(n);
    for (int i = 0; i < n; ++i) tau[i] = i;
    for (int step = 0; step < k; ++step)
        for (int i = 0; i < n; ++i) tau[i] = sigma[tau[i]];
    return tau;
}

std::vector<int> FrobSet::orbit_sizes_of_power(int k) const {
    std::vector<int> tau = power(k);
    std::vector<bool> seen(n, false);
    std::vector<int> sizes;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = tau[j];
            ++len;
        }
        sizes.push_back(len);
    }
    return sizes;
}

void FrobMap::validate() const {
    if (static_cast<int>(map.size()) != source.n)
        throw std::invalid_argument("FrobMap: map size mismatch");
    for (int x = 0; x < source.n; ++x) {
        if (map[x] < 0 || map[x] >= target.n) throw std::invalid_argument("FrobMap: range");
        if (map[source.sigma[x]] != target.sigma[map[x]])
            throw std::invalid_argument("FrobMap: not equivariant");
    }
}

// --- point counting ---

namespace {

void require_budget(double ops) {
    if (ops > static_cast<double>(ff_budget()))
        throw std::runtime_error("ffverify: enumeration budget exceeded");
}

// all projective points of P^m: normalized representatives, first nonzero
// coordinate equal to 1
void for_each_projective_point(const FqField& F, int m,
                               const std::function<void(const std::vector<uint32_t>&)>& fn) {
    std::vector<uint32_t> pt(m + 1, 0);
    for (int lead = 0; lead <= m; ++lead) {
        std::fill(pt.begin(), pt.end(), 0);
        pt[lead] = 1;
        int free = m - lead;
        std::vector<uint32_t> odo(free, 0);
        while (true) {
            for (int i = 0; i < free; ++i) pt[lead + 1 + i] = odo[i];
            fn(pt);
            int i = 0;
            while (i < free && ++odo[i] == F.q()) odo[i++] = 0;
            if (i == free) break;
        }
    }
}

uint32_t eval_form(const FqField& F, const FqForm& form, const std::vector<uint32_t>& pt) {
    uint32_t acc = 0;
    for (size_t t = 0; t < form.monomials.size(); ++t) {
        uint32_t c = form.coeffs[t];
        if (c == 0) continue;
        uint32_t v = c;
        for (int var = 0; var < form.nvars; ++var)
            for (int e = 0; e < form.monomials[t][var]; ++e) v = F.mul(v, pt[var]);
        acc = F.add(acc, v);
    }
    return acc;
}

FqForm form_derivative(const FqField& F, const FqForm& form, int var) {
    FqForm d;
    d.nvars = form.nvars;
    d.degree = form.degree - 1;
    for (size_t t = 0; t < form.monomials.size(); ++t) {
        if (form.monomials[t][var] == 0) continue;
        uint32_t c = 0;
        for (int rep = 0; rep < form.monomials[t][var] % static_cast<int>(F.p()); ++rep)
            c = F.add(c, form.coeffs[t]);
        if (c == 0) continue;
        std::vector<int> mono = form.monomials[t];
        mono[var] -= 1;
        d.monomials.push_back(std::move(mono));
        d.coeffs.push_back(c);
    }
    return d;
}

FqForm embed_form(const FqField& big, const FqField& small, const FqForm& form) {
    FqForm r = form;
    for (auto& c : r.coeffs) c = big.embed(small, c);
    return r;
}

} // namespace

std::vector<std::vector<int>> monomials_of_degree(int nvars, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(nvars, 0);
    std::function<void(int, int)> rec = [&](int var, int rem) {
        if (var == nvars - 1) {
            cur[var] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            cur[var] = e;
            rec(var + 1, rem - e);
        }
    };
    rec(0, d);
    return out;
}

Int count_affine(const FqField& F, int n) {
    if (n < 0) throw std::invalid_argument("count_affine: n >= 0");
    Int r(1);
    for (int i = 0; i < n; ++i) r *= F.q();
    return r;
}

Int count_projective(const FqField& F, int n) {
    if (n < 0) throw std::invalid_argument("count_projective: n >= 0");
    // normalized representatives: ~ 2 q^n points visited, not q^{n+1} vectors
    require_budget(2 * std::pow(static_cast<double>(F.q()), n));
    Int count(0);
    for_each_projective_point(F, n, [&](const std::vector<uint32_t>&) { count += 1; });
    return count;
}

Int count_gl(const FqField& F, int n) {
    if (n < 1) throw std::invalid_argument("count_gl: n >= 1");
    require_budget(std::pow(static_cast<double>(F.q()), n * n) * n * n * n);
    std::vector<uint32_t> entries(n * n, 0);
    Int count(0);
    while (true) {
        // rank check by elimination on a copy
        std::vector<uint32_t> m = entries;
        bool invertible = true;
        for (int col = 0; col < n && invertible; ++col) {
            int pivot = -1;
            for (int row = col; row < n; ++row)
                if (m[row * n + col] != 0) { pivot = row; break; }
            if (pivot < 0) {
                invertible = false;
                break;
            }
            if (pivot != col)
                for (int j = 0; j < n; ++j) std::swap(m[pivot * n + j], m[col * n + j]);
            uint32_t inv = F.inv(m[col * n + col]);
            for (int row = col + 1; row < n; ++row) {
                uint32_t f = F.mul(m[row * n + col], inv);
                if (f == 0) continue;
                for (int j = col; j < n; ++j)
                    m[row * n + j] = F.sub(m[row * n + j], F.mul(f, m[col * n + j]));
            }
        }
        if (invertible) count += 1;
        size_t i = 0;
        while (i < entries.size() && ++entries[i] == F.q()) entries[i++] = 0;
        if (i == entries.size()) break;
    }
    return count;
}

Int count_hypersurface(const FqField& F, const FqForm& form) {
    require_budget(2 * std::pow(static_cast<double>(F.q()), form.nvars - 1) *
                   static_cast<double>(form.monomials.size()));
    Int count(0);
    for_each_projective_point(F, form.nvars - 1, [&](const std::vector<uint32_t>& pt) {
        if (eval_form(F, form, pt) == 0) count += 1;
    });
    return count;
}

// --- smoothness oracles ---

bool binary_form_smooth_gcd(const FqField& F, const std::vector<uint32_t>& coeffs) {
    // coeffs[i] multiplies x^i y^{d-i}.  Smooth over the closure <=> the
    // dehomogenization is squarefree and the root at infinity is simple;
    // equivalently the gcd with both partials is trivial.
    int d = static_cast<int>(coeffs.size()) - 1;
    FqPoly f = poly_trim(coeffs);
    int degf = poly_deg(f);
    if (degf < 0) return false;      // zero form
    if (d - degf > 1) return false;  // multiple root at infinity
    if (degf <= 1) return true;
    FqPoly fp = poly_derivative(F, f);
    if (poly_deg(fp) < 0) return false; // inseparable: every root repeated
    return poly_deg(poly_gcd(F, f, fp)) == 0;
}

bool binary_form_smooth_resultant(const FqField& F, const std::vector<uint32_t>& coeffs) {
    int d = static_cast<int>(coeffs.size()) - 1;
    FqPoly f = poly_trim(coeffs);
    int degf = poly_deg(f);
    if (degf < 0) return false;
    if (d - degf > 1) return false;
    if (degf <= 1) return true;
    FqPoly fp = poly_derivative(F, f);
    int degfp = poly_deg(fp);
    if (degfp < 0) return false;
    // Sylvester determinant of (f, f')
    int n = degf + degfp;
    std::vector<uint32_t> m(static_cast<size_t>(n) * n, 0);
    for (int row = 0; row < degfp; ++row)
        for (int j = 0; j <= degf; ++j) m[row * n + row + j] = f[degf - j];
    for (int row = 0; row < degf; ++row)
        for (int j = 0; j <= degfp; ++j) m[(degfp + row) * n + row + j] = fp[degfp - j];
    // Gaussian elimination: resultant nonzero <=> full rank
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (m[row * n + col] != 0) { pivot = row; break; }
        if (pivot < 0) return false;
        if (pivot != col)
            for (int j = 0; j < n; ++j) std::swap(m[pivot * n + j], m[col * n + j]);
        uint32_t inv = F.inv(m[col * n + col]);
        for (int row = col + 1; row < n; ++row) {
            uint32_t fac = F.mul(m[row * n + col], inv);
            if (fac == 0) continue;
            for (int j = col; j < n; ++j)
                m[row * n + j] = F.sub(m[row * n + j], F.mul(fac, m[col * n + j]));
        }
    }
    return true;
}

bool plane_curve_smooth(const FqField& F, const FqForm& form, int emax_override) {
    bool nonzero = false;
    for (uint32_t c : form.coeffs) nonzero = nonzero || c != 0;
    if (!nonzero) return false;
    int d = form.degree;
    int emax = emax_override > 0 ? emax_override : std::max(1, (d - 1) * (d - 1));
    std::vector<FqForm> partials;
    for (int var = 0; var < 3; ++var) partials.push_back(form_derivative(F, form, var));
    for (int e = 1; e <= emax; ++e) {
        FqField E(F.p(), F.degree() * e);
        FqForm fe = embed_form(E, F, form);
        std::vector<FqForm> pe;
        for (const auto& pf : partials) pe.push_back(embed_form(E, F, pf));
        bool singular_found = false;
        for_each_projective_point(E, 2, [&](const std::vector<uint32_t>& pt) {
            if (singular_found) return;
            if (eval_form(E, fe, pt) != 0) return;
            for (const auto& pf : pe)
                if (eval_form(E, pf, pt) != 0) return;
            singular_found = true;
        });
        if (singular_found) return false;
    }
    return true;
}

SmoothCount count_smooth_forms(int n, int d, const FqField& F, const SampleMode& mode) {
    if (d < 1) throw std::invalid_argument("count_smooth_forms: d >= 1 required");
    if (n != 1 && n != 2)
        throw std::invalid_argument("count_smooth_forms: n in {1, 2} supported");
    int ncoeff = n == 1 ? d + 1 : static_cast<int>(monomials_of_degree(3, d).size());

    auto is_smooth = [&](const std::vector<uint32_t>& coeffs) {
        if (n == 1) return binary_form_smooth_gcd(F, coeffs);
        FqForm form;
        form.nvars = 3;
        form.degree = d;
        form.monomials = monomials_of_degree(3, d);
        form.coeffs = coeffs;
        return plane_curve_smooth(F, form, 0);
    };

    SmoothCount out{Int(0), Int(0)};
    if (mode.exhaustive) {
        require_budget(std::pow(static_cast<double>(F.q()), ncoeff));
        std::vector<uint32_t> coeffs(ncoeff, 0);
        while (true) {
            out.total += 1;
            if (is_smooth(coeffs)) out.smooth += 1;
            int i = 0;
            while (i < ncoeff && ++coeffs[i] == F.q()) coeffs[i++] = 0;
            if (i == ncoeff) break;
        }
    } else {
        std::mt19937_64 rng(mode.seed);
        std::uniform_int_distribution<uint64_t> dist(0, F.q() - 1);
        for (uint64_t s = 0; s < mode.samples; ++s) {
            std::vector<uint32_t> coeffs(ncoeff);
            for (auto& c : coeffs) c = static_cast<uint32_t>(dist(rng));
            out.total += 1;
            if (is_smooth(coeffs)) out.smooth += 1;
        }
    }
    return out;
}

Int preset_point_count(Preset preset, const FqField& F) {
    switch (preset) {
        case Preset::Affine1: return count_affine(F, 1);
        case Preset::P1: return count_projective(F, 1);
        case Preset::P2: return count_projective(F, 2);
    }
    throw std::logic_error("unknown preset");
}

std::vector<Int> closed_point_counts(Preset preset, uint32_t p, uint32_t k, int B) {
    std::vector<Int> ext(B + 1); // ext[e] = #X(F_{q^e})
    for (int e = 1; e <= B; ++e) ext[e] = preset_point_count(preset, FqField(p, k * e));
    std::vector<Int> out(B + 1);
    for (int e = 1; e <= B; ++e) {
        Int acc(0);
        for (int d = 1; d <= e; ++d) {
            if (e % d != 0) continue;
            int m = e / d;
            // Moebius mu(m)
            int mu = 1, mm = m;
            for (int f = 2; f * f <= mm; ++f) {
                if (mm % f == 0) {
                    mm /= f;
                    if (mm % f == 0) { mu = 0; break; }
                    mu = -mu;
                }
            }
            if (mu != 0 && mm > 1) mu = -mu;
            if (mu == 0) continue;
            acc += Int(mu) * ext[d];
        }
        out[e] = acc / e;
    }
    return out;
}

Int conf_count_orbits(const std::vector<int>& orbit_sizes, const GroupMultiset& M) {
    // assign whole orbits to groups (or leave some free) so each group hits its
    // exact size; orbits of equal size are interchangeable picks, so aggregate
    // by size and count subset choices with binomial coefficients
    const int r = M.count();
    std::map<int, Int> tally; // orbit size -> number available
    for (int s : orbit_sizes) tally[s] += 1;
    std::vector<std::pair<int, Int>> sizes(tally.begin(), tally.end());

    auto binomial = [](const Int& n, int k) {
        Int acc(1);
        for (int i = 0; i < k; ++i) {
            acc *= n - i;
            acc /= i + 1;
        }
        return acc;
    };

    std::vector<int> remaining = M.parts;
    std::function<Int(size_t)> rec = [&](size_t si) -> Int {
        bool done = std::all_of(remaining.begin(), remaining.end(), [](int v) { return v == 0; });
        if (done) return Int(1);
        if (si == sizes.size()) return Int(0);
        const auto& [size, avail] = sizes[si];
        // counts of size-`size` orbits given to each group
        Int acc(0);
        std::function<void(int, Int, const Int&)> over_groups = [&](int s, Int used,
                                                                    const Int& ways) {
            if (ways == 0) return;
            if (s == r) {
                acc += ways * rec(si + 1);
                return;
            }
            for (int c = 0; c * size <= remaining[s]; ++c) {
                if (used + c > avail) break;
                remaining[s] -= c * size;
                over_groups(s + 1, used + c, ways * binomial(avail - used, c));
                remaining[s] += c * size;
            }
        };
        over_groups(0, Int(0), Int(1));
        return acc;
    };
    return rec(0);
}

Int conf_count(const FrobSet& X, const GroupMultiset& M, int k) {
    if (M.total() > X.n) return Int(0);
    return conf_count_orbits(X.orbit_sizes_of_power(k), M);
}

bool check_inclusion_exclusion(const FrobMap& f, int kmax) {
    f.validate();
    std::vector<bool> in_image(f.target.n, false);
    for (int x = 0; x < f.source.n; ++x) in_image[f.map[x]] = true;

    for (int k = 1; k <= kmax; ++k) {
        std::vector<int> tauY = f.target.power(k);
        Int lhs(0);
        for (int y = 0; y < f.target.n; ++y)
            if (in_image[y] && tauY[y] == y) lhs += 1;

        // per fixed fiber, orbit sizes of sigma^k restricted to the fiber
        std::vector<int> tauX = f.source.power(k);
        Int rhs(0);
        for (int y = 0; y < f.target.n; ++y) {
            if (tauY[y] != y) continue;
            std::vector<int> fiber;
            for (int x = 0; x < f.source.n; ++x)
                if (f.map[x] == y) fiber.push_back(x);
            if (fiber.empty()) continue;
            std::vector<int> index(f.source.n, -1);
            for (size_t i = 0; i < fiber.size(); ++i) index[fiber[i]] = static_cast<int>(i);
            std::vector<bool> seen(fiber.size(), false);
            std::vector<int> orbit_sizes;
            for (size_t i = 0; i < fiber.size(); ++i) {
                if (seen[i]) continue;
                int len = 0, j = static_cast<int>(i);
                while (!seen[j]) {
                    seen[j] = true;
                    j = index[tauX[fiber[j]]];
                    ++len;
                }
                orbit_sizes.push_back(len);
            }
            for (int total = 1; total <= static_cast<int>(fiber.size()); ++total)
                for (const auto& mu : compositions_of(total)) {
                    Int term = conf_count_orbits(orbit_sizes, GroupMultiset(mu.parts));
                    if (mu.parts.size() % 2 == 0) term = -term;
                    rhs += term; // (-1)^{parts - 1}
                }
        }
        if (lhs != rhs) return false;
    }
    return true;
}

bool check_zeta_pole(const FrobSet& X, int kmax) {
    if (X.n == 0) throw std::invalid_argument("check_zeta_pole: nonempty set required");
    for (int k = 1; k <= kmax; ++k) {
        std::vector<int> orbit_sizes = X.orbit_sizes_of_power(k);
        Int acc(1); // the empty composition
        for (int total = 1; total <= X.n; ++total)
            for (const auto& mu : compositions_of(total)) {
                Int term = conf_count_orbits(orbit_sizes, GroupMultiset(mu.parts));
                if (mu.parts.size() % 2 != 0) term = -term;
                acc += term;
            }
        if (acc != 0) return false;
    }
    return true;
}

FrobSet random_frobset(std::mt19937_64& rng, int max_size) {
    std::uniform_int_distribution<int> size_dist(1, max_size);
    FrobSet X;
    X.n = size_dist(rng);
    X.sigma.resize(X.n);
    std::iota(X.sigma.begin(), X.sigma.end(), 0);
    std::shuffle(X.sigma.begin(), X.sigma.end(), rng);
    return X;
}

FrobMap random_frobmap(std::mt19937_64& rng, int max_source_size) {
    FrobMap f;
    f.target = random_frobset(rng, 4);

    // target orbits
    std::vector<std::vector<int>> yorbits;
    {
        std::vector<bool> seen(f.target.n, false);
        for (int i = 0; i < f.target.n; ++i) {
            if (seen[i]) continue;
            std::vector<int> orb;
            int j = i;
            while (!seen[j]) {
                seen[j] = true;
                orb.push_back(j);
                j = f.target.sigma[j];
            }
            yorbits.push_back(std::move(orb));
        }
    }

    std::uniform_int_distribution<int> size_dist(0, max_source_size);
    int budget = size_dist(rng);
    f.source.n = 0;
    // add source orbits of length m*c over random target orbits of length m
    while (budget > 0) {
        std::uniform_int_distribution<size_t> pick(0, yorbits.size() - 1);
        const auto& yorb = yorbits[pick(rng)];
        int m = static_cast<int>(yorb.size());
        if (m > budget) break;
        std::uniform_int_distribution<int> mult(1, budget / m);
        int c = mult(rng);
        int len = m * c;
        int base = f.source.n;
        for (int i = 0; i < len; ++i) {
            f.source.sigma.push_back(base + (i + 1) % len);
            f.map.push_back(yorb[i % m]);
        }
        f.source.n += len;
        budget -= len;
    }
    f.validate();
    return f;
}

std::vector<DensityRow> density_table(int n, int d_lo, int d_hi, const FqField& F,
                                      const SampleMode& mode) {
    std::vector<DensityRow> rows;
    Rat prediction(1);
    for (int j = 1; j <= n + 1; ++j) prediction *= Rat(1) - rat_pow(Rat(Int(F.q())), -j);
    for (int d = d_lo; d <= d_hi; ++d) {
        SmoothCount c = count_smooth_forms(n, d, F, mode);
        DensityRow row;
        row.d = d;
        row.smooth = c.smooth;
        row.total = c.total;
        row.density = Rat(c.smooth, c.total);
        row.prediction = prediction;
        row.gap = row.density - prediction;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace motstats
