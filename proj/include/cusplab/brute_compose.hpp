#pragma once

#include "cusplab/jet.hpp"

namespace cusplab {

// Reference compositions by naive truncated polynomial substitution. No
// partition enumeration is involved; the test suite uses these as the
// independent oracle for compose_param / compose_coord.
Jet brute_compose_param(const Jet& gamma, const ParamJet& phi);
Jet brute_compose_coord(const MapJet& map, const Jet& gamma);

}  // namespace cusplab
