#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cusplab/jet.hpp"
#include "cusplab/rat_linalg.hpp"

namespace cusplab {

enum class CuspTag {
  C23,
  C25,
  C27,
  C34,
  C345,
  C35,
  C357,
  C378,
  C37,      // (3, 7_{8 sigma}),        sigma in {0, 1}
  C37_11,   // (3, 7_{8 sigma}, 11),    sigma in {0, 1}
  C4567,
  C456,
  C457,
  C45,      // (4, 5_{7 sigma}),        sigma in {-1, 0, 1}
  C45_11,   // (4, 5_{7 sigma}, 11),    sigma in {-1, 0, 1}
  OutsideCatalog,
  UndeterminedMultiplicity,
};

std::string to_string(CuspTag tag);

// Outcome of the classification decision tree. `scalars` holds exactly the
// quantities the matched criterion defines (lambda, mu, lambda2, lambda3,
// mu1, mu2, A8, B8); `derived` holds the auxiliary vectors (V7, V8, V11,
// V4511) that were computed along the way, as diagnostics. `trace` records
// each span condition evaluated and whether it held, in evaluation order.
struct CuspClass {
  CuspTag tag = CuspTag::OutsideCatalog;
  std::optional<int> sigma;
  std::optional<int> multiplicity;
  std::map<std::string, Rational> scalars;
  std::map<std::string, RatVec> derived;
  std::vector<std::pair<std::string, bool>> trace;
};

// Decides membership in every class of the catalog, in exact arithmetic.
// Jets too short for the branch reached throw errc::insufficient_order
// naming the required order. A jet matching no criterion comes back as
// OutsideCatalog with the full trace.
CuspClass classify(const Jet& gamma);

// Seeded random A-equivalence: compose_coord(Phi, compose_param(gamma, phi))
// for a random parameter change and a random polynomial coordinate
// transformation with invertible linear part. Deterministic per seed;
// seed == 0 yields the identity pair.
Jet random_a_equivalence(const Jet& gamma, std::uint64_t seed);

}  // namespace cusplab
