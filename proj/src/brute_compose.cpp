#include "cusplab/brute_compose.hpp"

#include "cusplab/errors.hpp"

namespace cusplab {

namespace {

// Dense truncated polynomial with coefficients p[0..K].
using Poly = RatVec;

Poly poly_mul(const Poly& a, const Poly& b, int K) {
  Poly c(K + 1, Rational(0));
  for (int i = 0; i <= K; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= K; ++j) {
      if (b[j] == 0) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

}  // namespace

Jet brute_compose_param(const Jet& gamma, const ParamJet& phi) {
  if (phi.order < 1 || phi.coeffs.empty() || phi.coeffs[0] == 0)
    throw error(errc::invalid_diffeo, "brute_compose_param: phi^[1] = 0");
  const int K = std::min(gamma.order, phi.order);
  Poly phi_poly(K + 1, Rational(0));
  for (int i = 1; i <= K; ++i) phi_poly[i] = phi.coeffs[i - 1];

  std::vector<Poly> out(gamma.dim, Poly(K + 1, Rational(0)));
  Poly power(K + 1, Rational(0));
  power[0] = 1;  // phi^0
  for (int d = 1; d <= K; ++d) {
    power = poly_mul(power, phi_poly, K);
    const RatVec& gd = gamma.at(d);
    for (int j = 0; j < gamma.dim; ++j) {
      if (gd[j] == 0) continue;
      for (int idx = 0; idx <= K; ++idx) out[j][idx] += gd[j] * power[idx];
    }
  }
  Jet result = Jet::zero(gamma.dim, K);
  for (int n = 1; n <= K; ++n) {
    RatVec v(gamma.dim);
    for (int j = 0; j < gamma.dim; ++j) v[j] = out[j][n];
    result.set(n, std::move(v));
  }
  return result;
}

Jet brute_compose_coord(const MapJet& map, const Jet& gamma) {
  if (map.dim != gamma.dim)
    throw error(errc::contract, "brute_compose_coord: dimension mismatch");
  const int K = gamma.order;
  std::vector<Poly> comp(gamma.dim, Poly(K + 1, Rational(0)));
  for (int n = 1; n <= K; ++n)
    for (int j = 0; j < gamma.dim; ++j) comp[j][n] = gamma.at(n)[j];

  std::vector<Poly> out(gamma.dim, Poly(K + 1, Rational(0)));
  for (const auto& [alpha, value] : map.terms) {
    Poly mono(K + 1, Rational(0));
    mono[0] = 1;
    for (int j = 0; j < gamma.dim; ++j)
      for (int rep = 0; rep < alpha[j]; ++rep) mono = poly_mul(mono, comp[j], K);
    for (int i = 0; i < gamma.dim; ++i) {
      if (value[i] == 0) continue;
      for (int idx = 0; idx <= K; ++idx) out[i][idx] += value[i] * mono[idx];
    }
  }
  Jet result = Jet::zero(gamma.dim, K);
  for (int n = 1; n <= K; ++n) {
    RatVec v(gamma.dim);
    for (int i = 0; i < gamma.dim; ++i) v[i] = out[i][n];
    result.set(n, std::move(v));
  }
  return result;
}

}  // namespace cusplab
