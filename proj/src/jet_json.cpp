#include "cusplab/jet_json.hpp"

#include "cusplab/errors.hpp"

namespace cusplab {

namespace {

nlohmann::json rational_to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) {
    const long n = q.get_num().get_si();
    if (n >= -(1L << 53) && n <= (1L << 53)) return n;
  }
  return to_string(q);
}

Rational rational_from_json(const nlohmann::json& v, const std::string& where) {
  try {
    if (v.is_number_integer()) return make_rational(v.get<long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
  } catch (const error& e) {
    throw error(errc::parse, where + ": " + e.what());
  }
  throw error(errc::parse, where + ": expected integer or \"p/q\" string");
}

void reject_unknown_fields(const nlohmann::json& j,
                           std::initializer_list<const char*> allowed,
                           const std::string& what) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed)
      if (key == a) known = true;
    if (!known) throw error(errc::parse, what + ": unknown field \"" + key + "\"");
  }
}

}  // namespace

nlohmann::json jet_to_json(const Jet& jet) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int i = 1; i <= jet.order; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& c : jet.at(i)) row.push_back(rational_to_json(c));
    coeffs.push_back(std::move(row));
  }
  return {{"dim", jet.dim}, {"order", jet.order}, {"coeffs", std::move(coeffs)}};
}

Jet jet_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw error(errc::parse, "jet: expected a JSON object");
  reject_unknown_fields(j, {"dim", "order", "coeffs"}, "jet");
  if (!j.contains("dim") || !j.contains("order") || !j.contains("coeffs"))
    throw error(errc::parse, "jet: fields dim, order, coeffs are required");
  if (!j["dim"].is_number_integer() || !j["order"].is_number_integer())
    throw error(errc::parse, "jet: dim and order must be integers");
  const int dim = j["dim"].get<int>();
  const int order = j["order"].get<int>();
  if (dim < 1) throw error(errc::parse, "jet: dim must be >= 1");
  if (order < 1) throw error(errc::parse, "jet: order must be >= 1");
  const auto& coeffs = j["coeffs"];
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != order)
    throw error(errc::parse, "jet: coeffs must be an array of length order");
  Jet jet = Jet::zero(dim, order);
  for (int i = 1; i <= order; ++i) {
    const auto& row = coeffs[i - 1];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw error(errc::parse,
                  "jet: coeffs[" + std::to_string(i - 1) + "] must have " +
                      std::to_string(dim) + " entries");
    RatVec v(dim);
    for (int c = 0; c < dim; ++c) {
      v[c] = rational_from_json(row[c], "jet: coeffs[" + std::to_string(i - 1) +
                                            "][" + std::to_string(c) + "]");
    }
    jet.set(i, std::move(v));
  }
  return jet;
}

nlohmann::json map_to_json(const MapJet& map) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [alpha, value] : map.terms) {
    nlohmann::json val = nlohmann::json::array();
    for (const auto& c : value) val.push_back(rational_to_json(c));
    terms.push_back({{"alpha", alpha}, {"value", std::move(val)}});
  }
  return {{"dim", map.dim}, {"terms", std::move(terms)}};
}

MapJet map_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw error(errc::parse, "map: expected a JSON object");
  reject_unknown_fields(j, {"dim", "terms"}, "map");
  if (!j.contains("dim") || !j.contains("terms"))
    throw error(errc::parse, "map: fields dim and terms are required");
  const int dim = j["dim"].get<int>();
  if (dim < 1) throw error(errc::parse, "map: dim must be >= 1");
  MapJet map;
  map.dim = dim;
  const auto& terms = j["terms"];
  if (!terms.is_array()) throw error(errc::parse, "map: terms must be an array");
  int index = 0;
  for (const auto& term : terms) {
    const std::string where = "map: terms[" + std::to_string(index) + "]";
    if (!term.is_object()) throw error(errc::parse, where + ": expected object");
    reject_unknown_fields(term, {"alpha", "value"}, where);
    if (!term.contains("alpha") || !term.contains("value"))
      throw error(errc::parse, where + ": alpha and value are required");
    std::vector<int> alpha = term["alpha"].get<std::vector<int>>();
    const auto& val = term["value"];
    if (!val.is_array() || static_cast<int>(val.size()) != dim)
      throw error(errc::parse, where + ": value must have dim entries");
    RatVec value(dim);
    for (int c = 0; c < dim; ++c)
      value[c] = rational_from_json(val[c], where + ".value[" + std::to_string(c) + "]");
    try {
      map.add_term(alpha, std::move(value));
    } catch (const error& e) {
      throw error(errc::parse, where + ": " + e.what());
    }
    ++index;
  }
  return map;
}

}  // namespace cusplab
