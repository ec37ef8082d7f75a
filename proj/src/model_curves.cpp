#include "cusplab/model_curves.hpp"

#include "cusplab/errors.hpp"

namespace cusplab {

const std::vector<ModelCurve>& model_catalog() {
  static const std::vector<ModelCurve> catalog = {
      {"C23", CuspTag::C23, {}, 2, {{2, 0, 1}, {3, 1, 1}}},
      {"C25", CuspTag::C25, {}, 2, {{2, 0, 1}, {5, 1, 1}}},
      {"C27", CuspTag::C27, {}, 2, {{2, 0, 1}, {7, 1, 1}}},
      {"C34", CuspTag::C34, {}, 2, {{3, 0, 1}, {4, 1, 1}}},
      {"C345", CuspTag::C345, {}, 3, {{3, 0, 1}, {4, 1, 1}, {5, 2, 1}}},
      {"C35", CuspTag::C35, {}, 2, {{3, 0, 1}, {5, 1, 1}}},
      {"C357", CuspTag::C357, {}, 3, {{3, 0, 1}, {5, 1, 1}, {7, 2, 1}}},
      {"C378", CuspTag::C378, {}, 3, {{3, 0, 1}, {7, 1, 1}, {8, 2, 1}}},
      {"C37", CuspTag::C37, 0, 2, {{3, 0, 1}, {7, 1, 1}}},
      {"C37p8", CuspTag::C37, 1, 2, {{3, 0, 1}, {7, 1, 1}, {8, 1, 1}}},
      {"C37_11", CuspTag::C37_11, 0, 3, {{3, 0, 1}, {7, 1, 1}, {11, 2, 1}}},
      {"C37p8_11", CuspTag::C37_11, 1, 3,
       {{3, 0, 1}, {7, 1, 1}, {8, 1, 1}, {11, 2, 1}}},
      {"C4567", CuspTag::C4567, {}, 4,
       {{4, 0, 1}, {5, 1, 1}, {6, 2, 1}, {7, 3, 1}}},
      {"C456", CuspTag::C456, {}, 3, {{4, 0, 1}, {5, 1, 1}, {6, 2, 1}}},
      {"C457", CuspTag::C457, {}, 3, {{4, 0, 1}, {5, 1, 1}, {7, 2, 1}}},
      {"C45", CuspTag::C45, 0, 2, {{4, 0, 1}, {5, 1, 1}}},
      {"C45p7", CuspTag::C45, 1, 2, {{4, 0, 1}, {5, 1, 1}, {7, 1, 1}}},
      {"C45m7", CuspTag::C45, -1, 2, {{4, 0, 1}, {5, 1, 1}, {7, 1, -1}}},
      {"C45_11", CuspTag::C45_11, 0, 3, {{4, 0, 1}, {5, 1, 1}, {11, 2, 1}}},
      {"C45p7_11", CuspTag::C45_11, 1, 3,
       {{4, 0, 1}, {5, 1, 1}, {7, 1, 1}, {11, 2, 1}}},
      {"C45m7_11", CuspTag::C45_11, -1, 3,
       {{4, 0, 1}, {5, 1, 1}, {7, 1, -1}, {11, 2, 1}}},
  };
  return catalog;
}

Jet model_jet(const ModelCurve& model, int dim, int order) {
  if (dim < model.min_dim)
    throw error(errc::contract, "model " + model.name + " needs dim >= " +
                                    std::to_string(model.min_dim));
  Jet jet = Jet::zero(dim, order);
  for (const auto& [ord, comp, coeff] : model.monomials) {
    if (ord > order)
      throw error(errc::contract, "model " + model.name + " needs order >= " +
                                      std::to_string(ord));
    RatVec v = jet.at(ord);
    v[comp] += make_rational(coeff);
    jet.set(ord, std::move(v));
  }
  return jet;
}

Jet model_jet(const std::string& name, int dim, int order) {
  for (const auto& model : model_catalog()) {
    if (model.name == name) return model_jet(model, dim, order);
  }
  throw error(errc::contract, "unknown model curve: " + name);
}

}  // namespace cusplab
