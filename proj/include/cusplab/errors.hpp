#pragma once

#include <stdexcept>
#include <string>

namespace cusplab {

enum class errc {
  size_limit,           // enumeration or table cap exceeded
  invalid_diffeo,       // parameter change with vanishing first coefficient
  invalid_transform,    // coordinate transformation with singular linear part
  insufficient_order,   // jet truncated below the order a computation needs
  infinite_set,         // set materialization requested with gcd(A) != 1
  ill_posed,            // dependent basis where independence is required
  contract,             // caller broke a documented precondition
  assumption_violation, // regularity assumption fails on the given grid
  degenerate_volume,    // Gram volume below tolerance at a sample point
  hypothesis,           // positivity hypothesis of an integration fails
  undefined_invariant,  // invariant undefined (dependent derivative vectors)
  parse,                // malformed input text
};

// Single exception type; `detail` carries the context an error code needs
// (required jet order for insufficient_order, volume index for
// degenerate_volume, coefficient index for parse).
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what, long detail = -1)
      : std::runtime_error(what), code_(code), detail_(detail) {}

  errc code() const noexcept { return code_; }
  long detail() const noexcept { return detail_; }

 private:
  errc code_;
  long detail_;
};

}  // namespace cusplab
