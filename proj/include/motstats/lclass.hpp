#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>

#include "motstats/numbers.hpp"

namespace motstats {

// Integer Laurent polynomial in the distinguished symbol L (class of the
// affine line). Sparse map exponent -> coefficient, zero coefficients pruned.
class LClass {
public:
    std::map<long, Int> coeffs;

    LClass() = default;
    explicit LClass(Int constant) {
        if (constant != 0) coeffs.emplace(0, std::move(constant));
    }
    explicit LClass(long constant) : LClass(Int(constant)) {}

    static LClass monomial(long exp, Int c = Int(1)) {
        LClass r;
        if (c != 0) coeffs_insert(r, exp, std::move(c));
        return r;
    }
    static LClass zero() { return LClass(); }
    static LClass one() { return LClass(Int(1)); }
    static LClass L(long exp = 1) { return monomial(exp); }

    bool is_zero() const { return coeffs.empty(); }

    Int coeff(long exp) const {
        auto it = coeffs.find(exp);
        return it == coeffs.end() ? Int(0) : it->second;
    }

    // nullopt encodes dimension -infinity (the zero class)
    std::optional<long> dim() const {
        if (coeffs.empty()) return std::nullopt;
        return coeffs.rbegin()->first;
    }
    std::optional<long> low() const {
        if (coeffs.empty()) return std::nullopt;
        return coeffs.begin()->first;
    }

    LClass& operator+=(const LClass& o) {
        for (const auto& [e, c] : o.coeffs) add_term(e, c);
        return *this;
    }
    LClass& operator-=(const LClass& o) {
        for (const auto& [e, c] : o.coeffs) add_term(e, -c);
        return *this;
    }
    friend LClass operator+(LClass a, const LClass& b) { return a += b; }
    friend LClass operator-(LClass a, const LClass& b) { return a -= b; }
    friend LClass operator-(const LClass& a) {
        LClass r;
        for (const auto& [e, c] : a.coeffs) r.coeffs.emplace(e, -c);
        return r;
    }
    friend LClass operator*(const LClass& a, const LClass& b) {
        LClass r;
        for (const auto& [ea, ca] : a.coeffs)
            for (const auto& [eb, cb] : b.coeffs) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LClass& operator*=(const LClass& o) { return *this = *this * o; }

    friend LClass operator*(const LClass& a, const Int& n) {
        LClass r;
        if (n == 0) return r;
        for (const auto& [e, c] : a.coeffs) r.coeffs.emplace(e, c * n);
        return r;
    }

    LClass pow(unsigned long n) const {
        LClass acc = one(), base = *this;
        while (n > 0) {
            if (n & 1) acc *= base;
            if (n >>= 1) base *= base;
        }
        return acc;
    }

    bool operator==(const LClass& o) const { return coeffs == o.coeffs; }
    bool operator!=(const LClass& o) const { return coeffs != o.coeffs; }
    bool operator<(const LClass& o) const { return coeffs < o.coeffs; }

    Rat eval(const Rat& q) const {
        Rat acc(0);
        for (const auto& [e, c] : coeffs) acc += Rat(c) * rat_pow(q, e);
        return acc;
    }

    void add_term(long exp, const Int& c) {
        if (c == 0) return;
        auto [it, fresh] = coeffs.try_emplace(exp, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) coeffs.erase(it);
        }
    }

    // drop all terms with exponent <= floor
    LClass truncated_above(long floor) const {
        LClass r;
        for (auto it = coeffs.upper_bound(floor); it != coeffs.end(); ++it)
            r.coeffs.emplace(it->first, it->second);
        return r;
    }

    std::string str() const;

private:
    static void coeffs_insert(LClass& r, long e, Int c) { r.coeffs.emplace(e, std::move(c)); }
};

// Laurent series in L^{-1} known modulo the filtration: only exponents
// strictly above `floor` are stored; everything at or below is unknown.
class FilteredClass {
public:
    std::map<long, Int> terms;
    long floor = std::numeric_limits<long>::min();

    FilteredClass() = default;
    FilteredClass(LClass c, long fl) : floor(fl) {
        for (auto& [e, v] : c.truncated_above(fl).coeffs) terms.emplace(e, v);
    }

    static FilteredClass exact(const LClass& c) {
        FilteredClass r;
        for (const auto& [e, v] : c.coeffs) r.terms.emplace(e, v);
        return r;
    }

    std::optional<long> dim() const {
        if (terms.empty()) return std::nullopt;
        return terms.rbegin()->first;
    }

    LClass known_part() const {
        LClass r;
        for (const auto& [e, c] : terms) r.coeffs.emplace(e, c);
        return r;
    }

    void clamp(long new_floor) {
        if (new_floor <= floor) { floor = std::max(floor, new_floor); return; }
        floor = new_floor;
        for (auto it = terms.begin(); it != terms.end();)
            it = (it->first <= floor) ? terms.erase(it) : std::next(it);
    }

    friend FilteredClass operator+(const FilteredClass& a, const FilteredClass& b) {
        FilteredClass r = a;
        r.clamp(std::max(a.floor, b.floor));
        for (const auto& [e, c] : b.terms) {
            if (e <= r.floor) continue;
            auto [it, fresh] = r.terms.try_emplace(e, c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0) r.terms.erase(it);
            }
        }
        return r;
    }
    friend FilteredClass operator-(const FilteredClass& a, const FilteredClass& b) {
        FilteredClass nb = b;
        for (auto& [e, c] : nb.terms) c = -c;
        return a + nb;
    }
    friend FilteredClass operator*(const FilteredClass& a, const FilteredClass& b) {
        auto dim_or = [](const FilteredClass& f) {
            auto d = f.dim();
            return d ? *d : std::numeric_limits<long>::min();
        };
        FilteredClass r;
        long fa = a.floor, fb = b.floor;
        long da = dim_or(a), db = dim_or(b);
        // floor(x*y) = max(floor(x)+dim(y), floor(y)+dim(x)); min() stands in for -inf
        long cand1 = (fa == std::numeric_limits<long>::min() || db == std::numeric_limits<long>::min())
                         ? std::numeric_limits<long>::min() : fa + db;
        long cand2 = (fb == std::numeric_limits<long>::min() || da == std::numeric_limits<long>::min())
                         ? std::numeric_limits<long>::min() : fb + da;
        r.floor = std::max(cand1, cand2);
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                long e = ea + eb;
                if (e <= r.floor) continue;
                Int prod = ca * cb;
                auto [it, fresh] = r.terms.try_emplace(e, prod);
                if (!fresh) {
                    it->second += prod;
                    if (it->second == 0) r.terms.erase(it);
                }
            }
        return r;
    }

    // equality of the commonly-known range
    friend bool agree_above(const FilteredClass& a, const FilteredClass& b, long fl) {
        auto ka = a.known_part().truncated_above(fl);
        auto kb = b.known_part().truncated_above(fl);
        return ka == kb;
    }

    bool operator==(const FilteredClass& o) const { return floor == o.floor && terms == o.terms; }

    std::string str() const;
};

std::string lmono_str(long exp, const Int& c, bool leading);

} // namespace motstats
