#include "cusplab/jet.hpp"

#include <optional>
#include <string>

#include "cusplab/errors.hpp"
#include "cusplab/rat_linalg.hpp"

namespace cusplab {

namespace {

void enumerate_partitions(int n, int pos, int rem, std::vector<int>& beta,
                          std::vector<Partition>& out) {
  if (pos == n) {
    if (rem == 0) out.push_back(Partition{n, beta});
    return;
  }
  const int part = pos + 1;
  for (int b = 0; b * part <= rem; ++b) {
    beta[pos] = b;
    enumerate_partitions(n, pos + 1, rem - b * part, beta, out);
  }
  beta[pos] = 0;
}

const std::vector<Partition>& partitions_cached(int n) {
  static constexpr int kCached = 16;
  static const auto* table = [] {
    auto* t = new std::vector<std::vector<Partition>>(kCached + 1);
    for (int n = 1; n <= kCached; ++n) {
      std::vector<int> beta(n, 0);
      enumerate_partitions(n, 0, n, beta, (*t)[n]);
    }
    return t;
  }();
  return (*table)[n];
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 1) throw error(errc::contract, "partitions: n must be positive");
  if (n > kMaxPartitionN)
    throw error(errc::size_limit,
                "partitions: n = " + std::to_string(n) + " exceeds cap " +
                    std::to_string(kMaxPartitionN),
                n);
  if (n <= 16) return partitions_cached(n);
  std::vector<Partition> out;
  std::vector<int> beta(n, 0);
  enumerate_partitions(n, 0, n, beta, out);
  return out;
}

Jet Jet::zero(int dim, int order) {
  Jet j;
  j.dim = dim;
  j.order = order;
  j.coeffs.assign(order, RatVec(dim, Rational(0)));
  return j;
}

const RatVec& Jet::at(int i) const {
  if (i < 1) throw error(errc::contract, "Jet::at: index must be >= 1");
  if (i > order)
    throw error(errc::insufficient_order,
                "jet of order " + std::to_string(order) +
                    " cannot provide coefficient " + std::to_string(i) +
                    "; order " + std::to_string(i) + " required",
                i);
  return coeffs[i - 1];
}

void Jet::set(int i, RatVec v) {
  if (i < 1 || i > order) throw error(errc::contract, "Jet::set: index out of range");
  if (static_cast<int>(v.size()) != dim)
    throw error(errc::contract, "Jet::set: wrong vector dimension");
  coeffs[i - 1] = std::move(v);
}

ParamJet ParamJet::identity(int order) {
  ParamJet p;
  p.order = order;
  p.coeffs.assign(order, Rational(0));
  p.coeffs[0] = 1;
  return p;
}

MapJet MapJet::identity(int dim) {
  MapJet m;
  m.dim = dim;
  for (int j = 0; j < dim; ++j) {
    std::vector<int> alpha(dim, 0);
    alpha[j] = 1;
    RatVec col(dim, Rational(0));
    col[j] = 1;
    m.terms.emplace(std::move(alpha), std::move(col));
  }
  return m;
}

MapJet MapJet::linear(const std::vector<RatVec>& matrix) {
  const int n = static_cast<int>(matrix.size());
  MapJet m;
  m.dim = n;
  for (int j = 0; j < n; ++j) {
    std::vector<int> alpha(n, 0);
    alpha[j] = 1;
    RatVec col(n, Rational(0));
    for (int i = 0; i < n; ++i) col[i] = matrix[i][j];
    if (!is_zero_vec(col)) m.terms.emplace(std::move(alpha), std::move(col));
  }
  return m;
}

void MapJet::add_term(const std::vector<int>& alpha, RatVec value) {
  if (static_cast<int>(alpha.size()) != dim)
    throw error(errc::contract, "MapJet::add_term: alpha has wrong length");
  int deg = 0;
  for (int a : alpha) {
    if (a < 0) throw error(errc::contract, "MapJet::add_term: negative index");
    deg += a;
  }
  if (deg < 1) throw error(errc::contract, "MapJet::add_term: |alpha| must be >= 1");
  if (static_cast<int>(value.size()) != dim)
    throw error(errc::contract, "MapJet::add_term: value has wrong dimension");
  if (is_zero_vec(value)) {
    terms.erase(alpha);
    return;
  }
  terms[alpha] = std::move(value);
}

std::vector<RatVec> MapJet::linear_part() const {
  std::vector<RatVec> jac(dim, RatVec(dim, Rational(0)));
  for (int j = 0; j < dim; ++j) {
    std::vector<int> alpha(dim, 0);
    alpha[j] = 1;
    auto it = terms.find(alpha);
    if (it == terms.end()) continue;
    for (int i = 0; i < dim; ++i) jac[i][j] = it->second[i];
  }
  return jac;
}

int MapJet::max_degree() const {
  int deg = 0;
  for (const auto& [alpha, value] : terms) {
    int d = 0;
    for (int a : alpha) d += a;
    deg = std::max(deg, d);
  }
  return deg;
}

Jet compose_param(const Jet& gamma, const ParamJet& phi) {
  if (phi.order < 1 || phi.coeffs.empty() || phi.coeffs[0] == 0)
    throw error(errc::invalid_diffeo, "compose_param: phi^[1] = 0 is not a diffeomorphism");
  const int K = std::min(gamma.order, phi.order);
  Jet out = Jet::zero(gamma.dim, K);
  for (int n = 1; n <= K; ++n) {
    RatVec acc(gamma.dim, Rational(0));
    for (const auto& p : partitions(n)) {
      int d = 0;
      for (int b : p.beta) d += b;
      if (d > K) continue;
      const RatVec& gd = gamma.at(d);
      if (is_zero_vec(gd)) continue;  // multiplicity shortcut
      Rational factor(factorial(d));
      bool zero = false;
      for (int i = 1; i <= n; ++i) {
        const int b = p.beta[i - 1];
        if (b == 0) continue;
        if (phi.coeffs[i - 1] == 0) {
          zero = true;
          break;
        }
        factor /= Rational(factorial(b));
        factor *= rat_pow(phi.coeffs[i - 1], static_cast<unsigned>(b));
      }
      if (zero) continue;
      acc += factor * gd;
    }
    out.set(n, std::move(acc));
  }
  return out;
}

namespace {

// Depth-first walk over the matrices (q_{ij}) with prescribed row sums
// beta_i, restricted to columns where gamma^[i] is nonzero (all other
// choices contribute nothing). Accumulates the summand for each complete
// matrix into `acc`.
struct CoordAccumulator {
  const MapJet& map;
  const Jet& gamma;
  int dim;
  const std::vector<int>* rows = nullptr;   // orders i with beta_i > 0
  const Partition* part = nullptr;

  std::vector<int> alpha;
  RatVec acc;

  void run(const Partition& p, const std::vector<int>& active_rows) {
    part = &p;
    rows = &active_rows;
    alpha.assign(dim, 0);
    walk(0, Rational(1), Integer(1));
  }

  void walk(std::size_t row_idx, const Rational& prod, const Integer& qfact) {
    if (row_idx == rows->size()) {
      auto it = map.terms.find(alpha);
      if (it == map.terms.end()) return;
      Integer afact(1);
      for (int a : alpha) afact *= factorial(a);
      const Rational c = prod * Rational(afact) / Rational(qfact);
      for (int i = 0; i < dim; ++i) acc[i] += c * it->second[i];
      return;
    }
    const int i = (*rows)[row_idx];
    const int b = part->beta[i - 1];
    const RatVec& gi = gamma.at(i);
    distribute(row_idx, 0, b, gi, prod, qfact);
  }

  // Spread the remaining `rem` of beta_i over components j..dim-1.
  void distribute(std::size_t row_idx, int j, int rem, const RatVec& gi,
                  const Rational& prod, const Integer& qfact) {
    if (j == dim) {
      if (rem == 0) walk(row_idx + 1, prod, qfact);
      return;
    }
    // q_{ij} = 0 branch
    distribute(row_idx, j + 1, rem, gi, prod, qfact);
    if (gi[j] == 0) return;
    Rational p = prod;
    for (int q = 1; q <= rem; ++q) {
      p *= gi[j];
      alpha[j] += 1;
      distribute(row_idx, j + 1, rem - q, gi, p, qfact * factorial(q));
    }
    alpha[j] -= rem;
  }
};

}  // namespace

Jet compose_coord(const MapJet& map, const Jet& gamma) {
  if (map.dim != gamma.dim)
    throw error(errc::contract, "compose_coord: dimension mismatch");
  if (rat_det(map.linear_part()) == 0)
    throw error(errc::invalid_transform,
                "compose_coord: singular degree-1 part");
  const int K = gamma.order;
  Jet out = Jet::zero(gamma.dim, K);
  CoordAccumulator walker{map, gamma, gamma.dim, nullptr, nullptr, {}, {}};
  for (int n = 1; n <= K; ++n) {
    walker.acc.assign(gamma.dim, Rational(0));
    for (const auto& p : partitions(n)) {
      std::vector<int> active;
      bool zero = false;
      for (int i = 1; i <= n; ++i) {
        if (p.beta[i - 1] == 0) continue;
        if (is_zero_vec(gamma.at(i))) {
          zero = true;  // Rem-2.8 style shortcut: the whole summand vanishes
          break;
        }
        active.push_back(i);
      }
      if (zero) continue;
      walker.run(p, active);
    }
    out.set(n, walker.acc);
  }
  return out;
}

ParamJet compose_params(const ParamJet& phi1, const ParamJet& phi2) {
  // Reuse the curve machinery: a parameter change is a curve into R^1.
  Jet lifted = Jet::zero(1, phi1.order);
  for (int i = 1; i <= phi1.order; ++i) lifted.set(i, {phi1.coeffs[i - 1]});
  const Jet composed = compose_param(lifted, phi2);
  ParamJet out;
  out.order = composed.order;
  out.coeffs.resize(composed.order);
  for (int i = 1; i <= composed.order; ++i) out.coeffs[i - 1] = composed.at(i)[0];
  return out;
}

std::optional<int> multiplicity(const Jet& gamma) {
  for (int i = 1; i <= gamma.order; ++i) {
    if (!is_zero_vec(gamma.at(i))) return i;
  }
  return std::nullopt;
}

}  // namespace cusplab
