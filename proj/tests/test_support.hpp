#pragma once

#include <random>

#include "cusplab/jet.hpp"
#include "cusplab/rat_linalg.hpp"

// Deterministic generators shared by the unit and acceptance suites. These
// intentionally do not reuse the library's internal equivalence generator,
// so the oracle tests exercise an independent sampling path.
namespace testgen {

using cusplab::Jet;
using cusplab::MapJet;
using cusplab::ParamJet;
using cusplab::RatVec;
using cusplab::Rational;

inline long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Rational rat(std::mt19937_64& rng) {
  static const long dens[] = {1, 1, 2, 3, 4};
  return cusplab::make_rational(draw(rng, -4, 4), dens[draw(rng, 0, 4)]);
}

inline Rational nonzero_rat(std::mt19937_64& rng) {
  for (;;) {
    Rational q = rat(rng);
    if (q != 0) return q;
  }
}

inline Jet random_jet(std::mt19937_64& rng, int dim, int order, int min_order = 1) {
  Jet j = Jet::zero(dim, order);
  for (int i = min_order; i <= order; ++i) {
    RatVec v(dim);
    for (int c = 0; c < dim; ++c) v[c] = rat(rng);
    j.set(i, std::move(v));
  }
  return j;
}

inline ParamJet random_param(std::mt19937_64& rng, int order) {
  ParamJet p;
  p.order = order;
  p.coeffs.assign(order, Rational(0));
  p.coeffs[0] = nonzero_rat(rng);
  for (int i = 2; i <= order; ++i)
    if (draw(rng, 0, 1)) p.coeffs[i - 1] = rat(rng);
  return p;
}

inline MapJet random_map(std::mt19937_64& rng, int dim, int max_degree = 3) {
  std::vector<RatVec> matrix;
  do {
    matrix.assign(dim, RatVec(dim, Rational(0)));
    for (int i = 0; i < dim; ++i) {
      matrix[i][i] = nonzero_rat(rng);
      for (int j = 0; j < dim; ++j)
        if (i != j && draw(rng, 0, 1)) matrix[i][j] = rat(rng);
    }
  } while (cusplab::rat_det(matrix) == 0);
  MapJet m = MapJet::linear(matrix);
  const long extra = draw(rng, 1, 2 * dim);
  for (long k = 0; k < extra; ++k) {
    std::vector<int> alpha(dim, 0);
    const long degree = draw(rng, 2, max_degree);
    for (long d = 0; d < degree; ++d) alpha[draw(rng, 0, dim - 1)] += 1;
    RatVec value(dim);
    for (int c = 0; c < dim; ++c) value[c] = rat(rng);
    m.add_term(alpha, std::move(value));
  }
  return m;
}

}  // namespace testgen
