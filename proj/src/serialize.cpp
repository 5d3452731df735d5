#include "motstats/serialize.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace motstats {

namespace {

json int_to_json(const Int& v) {
    // keep arbitrary-precision values lossless on the wire
    if (v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max())
        return static_cast<int64_t>(v);
    return v.str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer or integer string");
}

} // namespace

json to_json(const LClass& c) {
    json coeffs = json::object();
    for (const auto& [e, v] : c.coeffs) coeffs[std::to_string(e)] = int_to_json(v);
    return json{{"coeffs", coeffs}};
}

LClass lclass_from_json(const json& j) {
    LClass c;
    for (const auto& [key, value] : j.at("coeffs").items())
        c.add_term(std::stol(key), int_from_json(value));
    return c;
}

json to_json(const FilteredClass& c) {
    json terms = json::object();
    for (const auto& [e, v] : c.terms) terms[std::to_string(e)] = int_to_json(v);
    json out{{"coeffs", terms}};
    if (c.floor != std::numeric_limits<long>::min()) out["floor"] = c.floor;
    return out;
}

FilteredClass filtered_from_json(const json& j) {
    FilteredClass c;
    if (j.contains("floor")) c.floor = j.at("floor").get<long>();
    for (const auto& [key, value] : j.at("coeffs").items()) {
        long e = std::stol(key);
        if (e <= c.floor) continue;
        Int v = int_from_json(value);
        if (v != 0) c.terms.emplace(e, std::move(v));
    }
    return c;
}

json to_json(const TSeries& s) {
    json terms = json::array();
    for (const auto& [e, c] : s.coeffs) {
        json mono = json::object();
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) mono[s.variables[i]] = e[i];
        terms.push_back(json{{"monomial", mono}, {"coeff", to_json(c)}});
    }
    return json{{"variables", s.variables}, {"maxdeg", s.maxdeg}, {"terms", terms}};
}

json to_json(const GroupMultiset& m) { return json(m.parts); }

GroupMultiset multiset_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("group multiset: expected an array");
    return GroupMultiset(j.get<std::vector<int>>());
}

json to_json(const EulerFactorSpec& spec) {
    json strata = json::array();
    for (const auto& st : spec.strata) {
        json terms = json::array();
        for (const auto& term : st.terms) {
            json mono = json::object();
            for (size_t i = 0; i < term.monomial.size(); ++i)
                if (term.monomial[i] != 0) mono[spec.variables[i]] = term.monomial[i];
            terms.push_back(json{{"monomial", mono}, {"coeff", to_json(term.coeff)}});
        }
        strata.push_back(json{{"base", to_json(st.base)}, {"terms", terms}});
    }
    return json{{"variables", spec.variables}, {"strata", strata}};
}

EulerFactorSpec euler_spec_from_json(const json& j) {
    EulerFactorSpec spec;
    spec.variables = j.at("variables").get<std::vector<std::string>>();
    for (const auto& st : j.at("strata")) {
        EulerStratum stratum;
        stratum.base = lclass_from_json(st.at("base"));
        for (const auto& term : st.at("terms")) {
            EulerTerm t;
            t.monomial.assign(spec.variables.size(), 0);
            for (const auto& [var, exp] : term.at("monomial").items()) {
                auto it = std::find(spec.variables.begin(), spec.variables.end(), var);
                if (it == spec.variables.end())
                    throw std::invalid_argument("euler spec: unknown variable " + var);
                t.monomial[it - spec.variables.begin()] = exp.get<int>();
            }
            t.coeff = lclass_from_json(term.at("coeff"));
            stratum.terms.push_back(std::move(t));
        }
        spec.strata.push_back(std::move(stratum));
    }
    spec.validate();
    return spec;
}

json to_json(const WittDivisor& f) {
    json support = json::object();
    for (const auto& [a, k] : f.support) support[rat_to_string(a)] = int_to_json(k);
    return json{{"support", support}};
}

WittDivisor witt_from_json(const json& j) {
    WittDivisor f;
    for (const auto& [key, value] : j.at("support").items())
        f.add_point(rat_from_string(key), int_from_json(value));
    return f;
}

json to_json(const DensityReport& r) {
    json out;
    out["truncated"] = to_json(r.truncated);
    if (r.exact) out["exact"] = to_json(*r.exact);
    if (r.spec) out["spec"] = to_json(*r.spec);
    if (!r.metadata.empty()) out["metadata"] = r.metadata;
    return out;
}

} // namespace motstats
