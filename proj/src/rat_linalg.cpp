#include "cusplab/rat_linalg.hpp"

#include "cusplab/errors.hpp"

namespace cusplab {

namespace {

// Reduced row echelon form of an n x m matrix; returns pivot columns.
std::vector<int> rref(std::vector<RatVec>& m) {
  if (m.empty()) return {};
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(m[r], m[pr]);
    const Rational pv = m[r][c];
    for (auto& x : m[r]) x /= pv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<RatVec> solve_in_span(const RatVec& target,
                                    const std::vector<RatVec>& basis) {
  const int n = static_cast<int>(target.size());
  const int k = static_cast<int>(basis.size());
  if (k == 0) {
    if (is_zero_vec(target)) return RatVec{};
    return std::nullopt;
  }
  for (const auto& b : basis) {
    if (static_cast<int>(b.size()) != n)
      throw error(errc::contract, "solve_in_span: dimension mismatch");
  }
  // Augmented system [basis | target], unknowns are the k coefficients.
  std::vector<RatVec> m(n, RatVec(k + 1, Rational(0)));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < k; ++c) m[r][c] = basis[c][r];
    m[r][k] = target[r];
  }
  const auto pivots = rref(m);
  int rank = 0;
  for (int p : pivots)
    if (p < k) ++rank;
  if (rank < k) throw error(errc::ill_posed, "solve_in_span: dependent basis");
  for (int r = rank; r < n; ++r) {
    if (m[r][k] != 0) return std::nullopt;  // inconsistent row: not in span
  }
  RatVec coeff(k, Rational(0));
  for (int r = 0; r < rank; ++r) coeff[pivots[r]] = m[r][k];
  return coeff;
}

bool rat_independent(const std::vector<RatVec>& vecs) {
  if (vecs.empty()) return true;
  std::vector<RatVec> m;
  m.reserve(vecs.size());
  for (const auto& v : vecs) m.push_back(v);
  const auto pivots = rref(m);
  return pivots.size() == vecs.size();
}

Rational rat_det(std::vector<RatVec> rows) {
  const int n = static_cast<int>(rows.size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n)
      throw error(errc::contract, "rat_det: matrix not square");
  }
  Rational det(1);
  for (int c = 0; c < n; ++c) {
    int pr = -1;
    for (int r = c; r < n; ++r) {
      if (rows[r][c] != 0) {
        pr = r;
        break;
      }
    }
    if (pr < 0) return Rational(0);
    if (pr != c) {
      std::swap(rows[pr], rows[c]);
      det = -det;
    }
    det *= rows[c][c];
    const Rational pv = rows[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / pv;
      for (int j = c; j < n; ++j) rows[r][j] -= f * rows[c][j];
    }
  }
  return det;
}

}  // namespace cusplab
