#pragma once

#include <json.hpp>

#include "spin3/state.hpp"

namespace spin3 {

// JSON wire formats, bit-exact round-trip, deterministic field order:
//   Rational       "num/den" string, "/den" omitted when den == 1
//   KPoly          [{"deg": d, "coeff": "num/den"}, ...], strictly increasing deg
//   UState         {"g":…, "dn":…, "m":…, "dp":…, "etas": [[label, weight], …]}
//   CorrelatorKey  {"m":…, "shift":…, "r":…}
//   LinComb        [{"key": …, "coeff": …}, …] sorted by key

nlohmann::ordered_json to_json(const KPoly& p);
nlohmann::ordered_json to_json(const UState& s);
nlohmann::ordered_json to_json(const CorrelatorKey& key);
nlohmann::ordered_json to_json(const LinComb& lc);

KPoly kpoly_from_json(const nlohmann::json& j);
UState ustate_from_json(const nlohmann::json& j);
CorrelatorKey key_from_json(const nlohmann::json& j);
LinComb lincomb_from_json(const nlohmann::json& j);

}  // namespace spin3
