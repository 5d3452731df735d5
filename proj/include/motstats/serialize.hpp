#pragma once

#include <json.hpp>

#include "motstats/euler.hpp"
#include "motstats/lclass.hpp"
#include "motstats/theorems.hpp"
#include "motstats/tseries.hpp"
#include "motstats/witt.hpp"

namespace motstats {

using nlohmann::json;

json to_json(const LClass& c);          // {"coeffs": {"<exp>": <int>}}
LClass lclass_from_json(const json& j);

json to_json(const FilteredClass& c);   // adds {"floor": <int>}
FilteredClass filtered_from_json(const json& j);

json to_json(const TSeries& s);
json to_json(const GroupMultiset& m);   // sorted array of ints
GroupMultiset multiset_from_json(const json& j);

json to_json(const EulerFactorSpec& spec);
EulerFactorSpec euler_spec_from_json(const json& j);

json to_json(const WittDivisor& f);     // {"support": {"p/q": <int>}}
WittDivisor witt_from_json(const json& j);

json to_json(const DensityReport& r);

} // namespace motstats
