#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "motstats/lclass.hpp"

namespace motstats {

// Truncated multivariate power series with LClass coefficients.
// Exponent vectors are indexed by `variables`; only total degree <= maxdeg kept.
class TSeries {
public:
    std::vector<std::string> variables;
    int maxdeg = 0;
    std::map<std::vector<int>, LClass> coeffs;

    TSeries() = default;
    TSeries(std::vector<std::string> vars, int D) : variables(std::move(vars)), maxdeg(D) {}

    static TSeries unit(std::vector<std::string> vars, int D) {
        TSeries s(std::move(vars), D);
        s.coeffs.emplace(std::vector<int>(s.variables.size(), 0), LClass::one());
        return s;
    }

    static int total_degree(const std::vector<int>& e) {
        return std::accumulate(e.begin(), e.end(), 0);
    }

    LClass coeff(const std::vector<int>& e) const {
        auto it = coeffs.find(e);
        return it == coeffs.end() ? LClass::zero() : it->second;
    }
    // convenience for univariate series
    LClass coeff1(int n) const { return coeff(std::vector<int>{n}); }

    void add_term(const std::vector<int>& e, const LClass& c) {
        if (c.is_zero() || total_degree(e) > maxdeg) return;
        auto [it, fresh] = coeffs.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }

    friend TSeries operator*(const TSeries& a, const TSeries& b) {
        TSeries r(a.variables, std::min(a.maxdeg, b.maxdeg));
        for (const auto& [ea, ca] : a.coeffs) {
            int da = total_degree(ea);
            if (da > r.maxdeg) continue;
            for (const auto& [eb, cb] : b.coeffs) {
                if (da + total_degree(eb) > r.maxdeg) continue;
                std::vector<int> e(ea.size());
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    friend TSeries operator+(const TSeries& a, const TSeries& b) {
        TSeries r(a.variables, std::min(a.maxdeg, b.maxdeg));
        for (const auto& [e, c] : a.coeffs) r.add_term(e, c);
        for (const auto& [e, c] : b.coeffs) r.add_term(e, c);
        return r;
    }

    bool same_coeffs(const TSeries& o) const { return coeffs == o.coeffs; }

    std::string str() const;
};

// Univariate helpers.
TSeries ts_univariate(const std::string& var, int D);
// 1 / s, requires s(0) = 1
TSeries ts_inverse(const TSeries& s);
// a / b, requires b(0) = 1
TSeries ts_divide(const TSeries& a, const TSeries& b);
// s(t) -> s(t^k), truncated at s.maxdeg
TSeries ts_compose_power(const TSeries& s, int k);

} // namespace motstats
