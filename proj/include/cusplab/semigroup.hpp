#pragma once

#include <vector>

#include "cusplab/rational.hpp"

namespace cusplab {

inline constexpr long kDefaultDenumerantBound = 1'000'000;

// Finite generator set A = {a_1 < ... < a_k} with every a_i >= 2.
struct GeneratorSet {
  std::vector<long> elements;

  // Validates, sorts; rejects duplicates and entries < 2.
  static GeneratorSet of(std::vector<long> elements);

  long max() const { return elements.back(); }
  long gcd() const;
};

struct SemigroupTable {
  GeneratorSet generators;
  int level = 0;                    // n
  std::vector<long> nonrepresentable;
  long frontier = 0;                // every a >= frontier is representable at level n
};

// Number of (x_1..x_k) in Z_{>=0}^k with sum a_i x_i = a and sum x_i >= n.
// Exact big-integer count via bounded dynamic programming; throws
// errc::size_limit when a exceeds `bound`.
Integer denumerant_ge(long a, int n, const GeneratorSet& A,
                      long bound = kDefaultDenumerantBound);

// The complete finite set NR_n(A) = {a : denumerant_ge(a, n, A) == 0}.
// Scans upward until max(A)*(n+1) consecutive representable values certify
// the tail. gcd(A) != 1 makes the set infinite and throws errc::infinite_set.
SemigroupTable nonrepresentable_set(int n, const GeneratorSet& A);

// Checks R_{m+n}(A) == R_m(A) + R_n(A) on [0, bound].
bool verify_additivity(int m, int n, const GeneratorSet& A, long bound);

// Representable set R_n(A) restricted to [0, bound]; helper shared by
// verify_additivity and the tests.
std::vector<long> representable_upto(int n, const GeneratorSet& A, long bound);

}  // namespace cusplab
