#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cusplab/rational.hpp"

namespace cusplab {

// The deepest classification criterion reads order 11; one spare order by
// default. Operations that need coefficients beyond a jet's order throw
// errc::insufficient_order instead of assuming zeros.
inline constexpr int kDefaultJetOrder = 12;
inline constexpr int kMaxPartitionN = 64;

// Multi-index beta with sum_i i*beta[i-1] == n.
struct Partition {
  int n = 0;
  std::vector<int> beta;

  bool operator==(const Partition&) const = default;
};

// Every beta in Z_{>=0}^n with sum i*beta_i = n, each exactly once, in
// lexicographic order of the beta vector. n above kMaxPartitionN throws
// errc::size_limit.
std::vector<Partition> partitions(int n);

// Truncated Taylor expansion of a curve germ (R,0) -> (R^N,0):
//   gamma(t) = sum_{i=1}^{order} coeff(i) t^i + o(t^order).
// coeff(i) is the i-th divided derivative gamma^(i)(0)/i!. All entries are
// exact rationals; there is no floating point anywhere in this module.
struct Jet {
  int dim = 0;
  int order = 0;
  std::vector<RatVec> coeffs;  // coeffs[i-1] holds coeff(i), size dim each

  static Jet zero(int dim, int order);

  const RatVec& at(int i) const;  // throws errc::insufficient_order past order
  void set(int i, RatVec v);

  bool operator==(const Jet&) const = default;
};

// Parameter change germ phi: (R,0) -> (R,0), phi(s) = sum coeffs[i-1] s^i.
// A diffeomorphism germ requires coeffs[0] != 0; compositions check it.
struct ParamJet {
  int order = 0;
  RatVec coeffs;

  static ParamJet identity(int order);
};

// Polynomial coordinate transformation germ Phi: (R^N,0) -> (R^N,0), stored
// as Taylor coefficients d^alpha Phi(0)/alpha! per multi-index alpha with
// |alpha| >= 1. The degree-1 part must be invertible.
struct MapJet {
  int dim = 0;
  std::map<std::vector<int>, RatVec> terms;

  static MapJet identity(int dim);
  // matrix[i][j] = dPhi_i/dx_j(0)
  static MapJet linear(const std::vector<RatVec>& matrix);

  void add_term(const std::vector<int>& alpha, RatVec value);
  std::vector<RatVec> linear_part() const;
  int max_degree() const;

  bool operator==(const MapJet&) const = default;
};

// Jet of gamma(phi(s)), truncated to min(gamma.order, phi.order).
// Throws errc::invalid_diffeo when phi^[1] = 0.
Jet compose_param(const Jet& gamma, const ParamJet& phi);

// Jet of Phi(gamma(t)) to gamma.order. Throws errc::invalid_transform when
// the degree-1 part of Phi is singular.
Jet compose_coord(const MapJet& map, const Jet& gamma);

// Composition of two parameter changes as a jet: (phi1 . phi2)(s) =
// phi1(phi2(s)), truncated to min of the orders.
ParamJet compose_params(const ParamJet& phi1, const ParamJet& phi2);

// Smallest i with coeff(i) != 0, or nullopt when the jet vanishes to its
// order (undetermined multiplicity).
std::optional<int> multiplicity(const Jet& gamma);

}  // namespace cusplab
