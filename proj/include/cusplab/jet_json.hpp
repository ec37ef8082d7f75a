#pragma once

#include <json.hpp>

#include "cusplab/jet.hpp"

namespace cusplab {

// Wire encoding of a jet:
//   {"dim": N, "order": K, "coeffs": [[c, ...], ...]}
// coeffs[i-1] is the coefficient vector of t^i; entries are integers or
// strings "p/q". Unknown fields are rejected. Parse failures name the
// offending coefficient index.
nlohmann::json jet_to_json(const Jet& jet);
Jet jet_from_json(const nlohmann::json& j);

// {"dim": N, "terms": [{"alpha": [a1..aN], "value": [c, ...]}, ...]}
nlohmann::json map_to_json(const MapJet& map);
MapJet map_from_json(const nlohmann::json& j);

}  // namespace cusplab
