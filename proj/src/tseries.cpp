#include "motstats/tseries.hpp"

#include <sstream>
#include <stdexcept>

namespace motstats {

std::string TSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (size_t i = 0; i < variables.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << variables[i];
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    if (first) os << "0";
    return os.str();
}

TSeries ts_univariate(const std::string& var, int D) { return TSeries({var}, D); }

TSeries ts_inverse(const TSeries& s) {
    if (s.variables.size() != 1) throw std::invalid_argument("ts_inverse: univariate only");
    if (s.coeff1(0) != LClass::one()) throw std::invalid_argument("ts_inverse: constant term must be 1");
    TSeries r(s.variables, s.maxdeg);
    std::vector<LClass> inv(s.maxdeg + 1);
    inv[0] = LClass::one();
    for (int n = 1; n <= s.maxdeg; ++n) {
        LClass acc;
        for (int k = 1; k <= n; ++k) acc += s.coeff1(k) * inv[n - k];
        inv[n] = -acc;
    }
    for (int n = 0; n <= s.maxdeg; ++n) r.add_term({n}, inv[n]);
    return r;
}

TSeries ts_divide(const TSeries& a, const TSeries& b) { return a * ts_inverse(b); }

TSeries ts_compose_power(const TSeries& s, int k) {
    if (s.variables.size() != 1) throw std::invalid_argument("ts_compose_power: univariate only");
    if (k < 1) throw std::invalid_argument("ts_compose_power: k >= 1");
    TSeries r(s.variables, s.maxdeg);
    for (const auto& [e, c] : s.coeffs) {
        long ne = static_cast<long>(e[0]) * k;
        if (ne > s.maxdeg) continue;
        r.add_term({static_cast<int>(ne)}, c);
    }
    return r;
}

} // namespace motstats
