#include "cusplab/polycurve.hpp"

#include "cusplab/errors.hpp"

namespace cusplab {

PolyCurve PolyCurve::from_jet(const Jet& jet) {
  PolyCurve c;
  c.dim = jet.dim;
  c.degree = jet.order;
  c.comp.assign(jet.dim, std::vector<double>(jet.order + 1, 0.0));
  for (int i = 1; i <= jet.order; ++i) {
    const RatVec& v = jet.at(i);
    for (int j = 0; j < jet.dim; ++j) c.comp[j][i] = v[j].get_d();
  }
  c.source = jet;
  return c;
}

Eigen::VectorXd PolyCurve::value(double t) const { return derivative(t, 0); }

Eigen::VectorXd PolyCurve::derivative(double t, int k) const {
  if (k < 0) throw error(errc::contract, "PolyCurve::derivative: negative order");
  Eigen::VectorXd out(dim);
  for (int j = 0; j < dim; ++j) {
    // Horner on the k-th derivative: coefficient of t^(d-k) is
    // comp[j][d] * d! / (d-k)!.
    double acc = 0.0;
    for (int d = degree; d >= k; --d) {
      double f = comp[j][d];
      for (int r = 0; r < k; ++r) f *= static_cast<double>(d - r);
      acc = acc * t + f;
    }
    out[j] = acc;
  }
  return out;
}

}  // namespace cusplab
