#include "spin3/json_io.hpp"

namespace spin3 {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json to_json(const KPoly& p) {
  ordered_json out = ordered_json::array();
  for (int deg = 0; deg <= p.degree(); ++deg) {
    const Rational& c = p.coeff(deg);
    if (c.is_zero()) continue;
    out.push_back({{"deg", deg}, {"coeff", c.str()}});
  }
  return out;
}

KPoly kpoly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a JSON array");
  KPoly p;
  int prev_deg = -1;
  for (const auto& entry : j) {
    if (!entry.is_object() || !entry.contains("deg") || !entry.contains("coeff") ||
        !entry.at("deg").is_number_integer() || !entry.at("coeff").is_string())
      throw ParseError("polynomial entries must be {\"deg\": int, \"coeff\": string}");
    const int deg = entry.at("deg").get<int>();
    if (deg <= prev_deg) throw ParseError("polynomial degrees must be strictly increasing");
    prev_deg = deg;
    p += KPoly::monomial(deg, Rational::parse(entry.at("coeff").get<std::string>()));
  }
  return p;
}

ordered_json to_json(const UState& s) {
  ordered_json etas = ordered_json::array();
  for (const auto& f : s.etas.factors()) etas.push_back({f.label, f.weight});
  return {{"g", s.genus}, {"dn", s.dn}, {"m", s.m}, {"dp", s.dp}, {"etas", std::move(etas)}};
}

UState ustate_from_json(const json& j) {
  if (!j.is_object() || !j.contains("g") || !j.contains("dn") || !j.contains("m") ||
      !j.contains("dp") || !j.contains("etas") || !j.at("etas").is_array())
    throw ParseError("state must be {\"g\",\"dn\",\"m\",\"dp\",\"etas\"}");
  std::vector<EtaFactor> factors;
  for (const auto& pair : j.at("etas")) {
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError("eta entries must be [label, weight] pairs");
    factors.push_back({pair.at(0).get<int>(), pair.at(1).get<int>()});
  }
  return UState{j.at("g").get<int>(), j.at("dn").get<int>(), j.at("m").get<int>(),
                j.at("dp").get<int>(), EtaMultiset(std::move(factors))};
}

ordered_json to_json(const CorrelatorKey& key) {
  return {{"m", key.m}, {"shift", key.shift}, {"r", key.r}};
}

CorrelatorKey key_from_json(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("shift") || !j.contains("r"))
    throw ParseError("correlator key must be {\"m\",\"shift\",\"r\"}");
  return CorrelatorKey{j.at("m").get<int>(), j.at("shift").get<int>(), j.at("r").get<int>()};
}

ordered_json to_json(const LinComb& lc) {
  ordered_json out = ordered_json::array();
  for (const auto& [key, coeff] : lc.terms())
    out.push_back({{"key", to_json(key)}, {"coeff", to_json(coeff)}});
  return out;
}

LinComb lincomb_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("linear combination must be a JSON array");
  LinComb lc;
  for (const auto& entry : j) {
    if (!entry.is_object() || !entry.contains("key") || !entry.contains("coeff"))
      throw ParseError("linear combination entries must be {\"key\",\"coeff\"}");
    lc.add(key_from_json(entry.at("key")), kpoly_from_json(entry.at("coeff")));
  }
  return lc;
}

}  // namespace spin3
