#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "cusplab/jet.hpp"

namespace cusplab {

// Polynomial curve in R^N over binary64, derived from a jet. Derivatives of
// any order are closed-form, so only integrals and limits downstream are
// numeric.
struct PolyCurve {
  int dim = 0;
  int degree = 0;
  std::vector<std::vector<double>> comp;  // comp[j][d] = coefficient of t^d
  std::optional<Jet> source;

  static PolyCurve from_jet(const Jet& jet);

  Eigen::VectorXd value(double t) const;
  Eigen::VectorXd derivative(double t, int k) const;  // k = 0 gives value
};

}  // namespace cusplab
