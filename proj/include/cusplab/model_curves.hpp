#pragma once

#include <string>
#include <vector>

#include "cusplab/classify.hpp"
#include "cusplab/jet.hpp"

namespace cusplab {

// One entry per concrete model curve covered by the criteria. `monomials`
// lists (order, component, coefficient) triples of t -> (t^{n_1}, ...);
// `min_dim` is the smallest ambient dimension the model fits in.
struct ModelCurve {
  std::string name;
  CuspTag tag;
  std::optional<int> sigma;
  int min_dim;
  std::vector<std::tuple<int, int, long>> monomials;
};

const std::vector<ModelCurve>& model_catalog();

// Jet of the named model embedded in R^dim; throws errc::contract for an
// unknown name or dim < min_dim.
Jet model_jet(const std::string& name, int dim, int order = kDefaultJetOrder);

Jet model_jet(const ModelCurve& model, int dim, int order = kDefaultJetOrder);

}  // namespace cusplab
