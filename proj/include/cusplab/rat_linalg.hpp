#pragma once

#include <optional>
#include <vector>

#include "cusplab/rational.hpp"

namespace cusplab {

// Exact span-membership solve by Gaussian elimination over Q.
// Returns the unique coefficient vector when `target` lies in the span of
// `basis`, std::nullopt when it does not. The basis must be linearly
// independent; a dependent basis throws errc::ill_posed.
std::optional<RatVec> solve_in_span(const RatVec& target,
                                    const std::vector<RatVec>& basis);

bool rat_independent(const std::vector<RatVec>& vecs);

// Determinant of a square matrix given as rows.
Rational rat_det(std::vector<RatVec> rows);

}  // namespace cusplab
