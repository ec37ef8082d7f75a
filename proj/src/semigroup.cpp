#include "cusplab/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cusplab/errors.hpp"

namespace cusplab {

namespace {

// Representation counts on [0, bound]:
//   total[v]    = #{x : sum a_i x_i = v}            (any number of parts)
//   exact[p][v] = #{x : sum a_i x_i = v, |x| = p}   for p = 0..parts-1
// so that d_{>=n}(v) = total[v] - sum_{p<n} exact[p][v].
struct CountTable {
  std::vector<Integer> total;
  std::vector<std::vector<Integer>> exact;
};

CountTable build_counts(const GeneratorSet& A, long bound, int parts) {
  CountTable t;
  t.total.assign(bound + 1, Integer(0));
  t.total[0] = 1;
  for (long a : A.elements) {
    for (long v = a; v <= bound; ++v) t.total[v] += t.total[v - a];
  }
  t.exact.assign(parts, std::vector<Integer>(bound + 1, Integer(0)));
  if (parts > 0) {
    t.exact[0][0] = 1;
    for (long a : A.elements) {
      // unbounded knapsack in (parts, value) order; the in-place sweep over
      // ascending v admits reuse of the same generator
      for (int p = 1; p < parts; ++p) {
        for (long v = a; v <= bound; ++v) t.exact[p][v] += t.exact[p - 1][v - a];
      }
    }
  }
  return t;
}

Integer count_ge(const CountTable& t, long v, int n) {
  Integer c = t.total[v];
  for (int p = 0; p < n; ++p) c -= t.exact[p][v];
  return c;
}

}  // namespace

GeneratorSet GeneratorSet::of(std::vector<long> elements) {
  if (elements.empty())
    throw error(errc::contract, "generator set must be non-empty");
  std::sort(elements.begin(), elements.end());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] < 2)
      throw error(errc::contract,
                  "generator " + std::to_string(elements[i]) + " is < 2");
    if (i > 0 && elements[i] == elements[i - 1])
      throw error(errc::contract,
                  "duplicate generator " + std::to_string(elements[i]));
  }
  return GeneratorSet{std::move(elements)};
}

long GeneratorSet::gcd() const {
  long g = 0;
  for (long a : elements) g = std::gcd(g, a);
  return g;
}

Integer denumerant_ge(long a, int n, const GeneratorSet& A, long bound) {
  if (a < 0 || n < 0) throw error(errc::contract, "denumerant_ge: a, n must be >= 0");
  if (a > bound)
    throw error(errc::size_limit,
                "denumerant_ge: a = " + std::to_string(a) + " exceeds bound " +
                    std::to_string(bound),
                a);
  const CountTable t = build_counts(A, a, n);
  return count_ge(t, a, n);
}

SemigroupTable nonrepresentable_set(int n, const GeneratorSet& A) {
  if (n < 0) throw error(errc::contract, "nonrepresentable_set: n must be >= 0");
  if (A.gcd() != 1)
    throw error(errc::infinite_set,
                "NR_n(A) is infinite: gcd of the generators is " +
                    std::to_string(A.gcd()));
  const long run_needed = A.max() * (n + 1);
  long bound = std::max<long>(4 * run_needed, 64);
  for (;;) {
    const CountTable t = build_counts(A, bound, n);
    SemigroupTable table;
    table.generators = A;
    table.level = n;
    long run = 0;
    for (long v = 0; v <= bound; ++v) {
      if (count_ge(t, v, n) == 0) {
        table.nonrepresentable.push_back(v);
        run = 0;
      } else if (++run == run_needed) {
        table.frontier = v - run_needed + 1;
        return table;
      }
    }
    bound *= 2;
  }
}

std::vector<long> representable_upto(int n, const GeneratorSet& A, long bound) {
  const CountTable t = build_counts(A, bound, n);
  std::vector<long> out;
  for (long v = 0; v <= bound; ++v)
    if (count_ge(t, v, n) > 0) out.push_back(v);
  return out;
}

bool verify_additivity(int m, int n, const GeneratorSet& A, long bound) {
  if (A.gcd() != 1)
    throw error(errc::infinite_set, "verify_additivity requires gcd(A) = 1");
  const auto rm = representable_upto(m, A, bound);
  const auto rn = representable_upto(n, A, bound);
  const auto rmn = representable_upto(m + n, A, bound);
  std::vector<char> sumset(bound + 1, 0);
  for (long x : rm) {
    for (long y : rn) {
      if (x + y > bound) break;
      sumset[x + y] = 1;
    }
  }
  std::vector<char> direct(bound + 1, 0);
  for (long v : rmn) direct[v] = 1;
  return sumset == direct;
}

}  // namespace cusplab
