#include "motstats/lclass.hpp"

#include <sstream>

namespace motstats {

std::string lmono_str(long exp, const Int& c, bool leading) {
    std::ostringstream os;
    Int a = c < 0 ? Int(-c) : c;
    if (leading) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    bool unit_coeff = (a == 1) && exp != 0;
    if (!unit_coeff) os << a.str();
    if (exp != 0) {
        if (!unit_coeff) os << "*";
        os << "L";
        if (exp != 1) os << "^" << exp;
    }
    return os.str();
}

std::string LClass::str() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool leading = true;
    // highest power first reads better
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        os << lmono_str(it->first, it->second, leading);
        leading = false;
    }
    return os.str();
}

std::string FilteredClass::str() const {
    std::ostringstream os;
    os << known_part().str() << " + O(L^" << floor << ")";
    return os.str();
}

} // namespace motstats
