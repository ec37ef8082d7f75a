#include "cusplab/curvature.hpp"

#include <omp.h>

#include <cmath>
#include <limits>
#include <string>

#include "cusplab/errors.hpp"
#include "cusplab/rat_linalg.hpp"

namespace cusplab {

namespace {

constexpr double kGramClampTol = 1e-12;
constexpr double kDegeneracyTol = 1e-9;
constexpr double kQuadratureRelTol = 1e-10;
constexpr int kPanelsPerUnit = 2048;

Eigen::MatrixXd derivative_matrix(const PolyCurve& curve, double t, int upto) {
  Eigen::MatrixXd d(curve.dim, upto);
  for (int k = 1; k <= upto; ++k) d.col(k - 1) = curve.derivative(t, k);
  return d;
}

// Hadamard bound of the Gram determinant of the first i columns; the
// natural scale for clamping and degeneracy decisions.
double hadamard_scale(const Eigen::MatrixXd& d, int i) {
  double scale = 1.0;
  for (int c = 0; c < i; ++c) scale *= d.col(c).squaredNorm();
  return scale;
}

}  // namespace

std::vector<double> gram_volumes(const PolyCurve& curve, double t, int upto) {
  const int n = curve.dim;
  if (upto < 0 || upto > n)
    throw error(errc::contract, "gram_volumes: upto must lie in [0, dim]");
  std::vector<double> v(upto + 1, 1.0);
  if (upto == 0) return v;
  const Eigen::MatrixXd d = derivative_matrix(curve, t, upto);
  for (int i = 1; i <= upto; ++i) {
    if (i == n) {
      v[i] = d.leftCols(n).determinant();
      continue;
    }
    // sqrt of the Gram determinant as a product of singular values; forming
    // the Gram matrix explicitly loses half the digits near rank drops
    const auto sv = d.leftCols(i).jacobiSvd().singularValues();
    double prod = 1.0;
    for (int j = 0; j < sv.size(); ++j) prod *= sv[j];
    v[i] = prod;
  }
  return v;
}

std::vector<double> curvatures(const PolyCurve& curve, double t) {
  const int n = curve.dim;
  if (n < 2) throw error(errc::contract, "curvatures: dim must be >= 2");
  const std::vector<double> v = gram_volumes(curve, t, n);
  const Eigen::MatrixXd d = derivative_matrix(curve, t, n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    const double floor_i = kDegeneracyTol * std::sqrt(std::max(hadamard_scale(d, i), 0.0));
    if (!(v[i] > floor_i))
      throw error(errc::degenerate_volume,
                  "curvatures: V_" + std::to_string(i) +
                      " below degeneracy tolerance at t = " + std::to_string(t),
                  i);
  }
  std::vector<double> kappa(n - 1);
  for (int i = 1; i <= n - 1; ++i)
    kappa[i - 1] = v[i - 1] * v[i + 1] / (v[1] * v[i] * v[i]);
  return kappa;
}

double signed_arclength(const PolyCurve& curve, double t) {
  if (t == 0.0) return 0.0;
  const auto speed = [&](double v) { return curve.derivative(v, 1).norm(); };
  int panels = std::max(16, static_cast<int>(std::ceil(kPanelsPerUnit * std::abs(t))));
  if (panels % 2 != 0) ++panels;
  double prev = std::numeric_limits<double>::infinity();
  for (;;) {
    const double h = t / panels;
    double sum = speed(0.0) + speed(t);
    for (int k = 1; k < panels; ++k) sum += speed(k * h) * (k % 2 ? 4.0 : 2.0);
    const double integral = sum * h / 3.0;
    if (std::abs(integral - prev) <=
        kQuadratureRelTol * std::max(std::abs(integral), 1e-300))
      return integral;
    prev = integral;
    if (panels >= (1 << 22)) return integral;  // smooth integrands never get here
    panels *= 2;
  }
}

PolyCurve associated_regular_curve(const Jet& gamma, int m) {
  const auto mult = multiplicity(gamma);
  if (!mult || *mult != m)
    throw error(errc::contract,
                "associated_regular_curve: jet multiplicity is not " +
                    std::to_string(m));
  // gamma'(t) = t^{m-1} T(t) termwise; hat_gamma = integral of T. On
  // coefficients: coeff i of gamma contributes i/(i-m+1) * coeff at order
  // i-m+1 of hat_gamma. Exact in rationals.
  Jet hat = Jet::zero(gamma.dim, gamma.order - m + 1);
  for (int i = m; i <= gamma.order; ++i) {
    const int target = i - m + 1;
    hat.set(target, Rational(i, target) * gamma.at(i));
  }
  return PolyCurve::from_jet(hat);
}

TauTable one_over_m_arclength(const PolyCurve& curve, int m,
                              const std::vector<double>& grid) {
  if (m < 1) throw error(errc::contract, "one_over_m_arclength: m must be >= 1");
  TauTable table;
  table.t = grid;
  table.s.resize(grid.size());
  table.tau.resize(grid.size());
  double speed_scale = 0.0, span = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    speed_scale = std::max(speed_scale, curve.derivative(grid[k], 1).norm());
    span = std::max(span, std::abs(grid[k]));
  }
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double t = grid[k];
    // the singular point itself (and grid values that are 0 up to roundoff)
    // is exempt from the regularity check
    if (std::abs(t) > 1e-12 * span &&
        curve.derivative(t, 1).norm() <= 1e-14 * speed_scale)
      throw error(errc::assumption_violation,
                  "one_over_m_arclength: gamma' vanishes at interior t = " +
                      std::to_string(t));
    const double s = signed_arclength(curve, t);
    table.s[k] = s;
    table.tau[k] = (s >= 0 ? 1.0 : -1.0) * std::pow(std::abs(s), 1.0 / m);
  }
  for (std::size_t k = 1; k < grid.size(); ++k) {
    if (!(table.tau[k] > table.tau[k - 1]))
      throw error(errc::assumption_violation,
                  "one_over_m_arclength: tau not strictly increasing near t = " +
                      std::to_string(grid[k]));
  }
  // Speed-law check |d gamma / d tau| = m |tau|^{m-1}: a degree-4 local fit
  // through five neighboring samples gives d gamma / d tau at fourth order
  // on the nonuniform tau grid. Points within a few steps of tau = 0 are
  // excluded from the relative residual.
  double residual = 0.0;
  for (std::size_t k = 2; k + 2 < grid.size(); ++k) {
    double span = 0.0;
    for (std::size_t j = k - 2; j <= k + 2; ++j)
      span = std::max(span, std::abs(table.tau[j] - table.tau[k]));
    if (std::abs(table.tau[k]) < 5.0 * span) continue;
    Eigen::MatrixXd a(5, 5);
    Eigen::MatrixXd rhs(5, curve.dim);
    for (int r = 0; r < 5; ++r) {
      const std::size_t idx = k - 2 + r;
      const double u = table.tau[idx] - table.tau[k];
      double p = 1.0;
      for (int c = 0; c < 5; ++c) {
        a(r, c) = p;
        p *= u;
      }
      rhs.row(r) = curve.value(grid[idx]).transpose();
    }
    const Eigen::MatrixXd coef = a.colPivHouseholderQr().solve(rhs);
    const double speed = coef.row(1).norm();
    const double expected = m * std::pow(std::abs(table.tau[k]), m - 1);
    residual = std::max(residual, std::abs(speed - expected) / expected);
  }
  table.speed_law_residual = residual;
  return table;
}

std::vector<double> normalized_curvatures(const PolyCurve& curve, int m,
                                          double t) {
  std::vector<double> mu = curvatures(curve, t);
  const double s = signed_arclength(curve, t);
  const double factor = std::pow(std::abs(s), double(m - 1) / m);
  for (auto& x : mu) x *= factor;
  const int n = curve.dim;
  if (t < 0.0 && (n * (m - 1)) % 2 != 0) mu[n - 2] = -mu[n - 2];
  return mu;
}

double singular_curvature(const Jet& gamma, int m, int i) {
  const int n = gamma.dim;
  if (i < 1 || i > n - 1)
    throw error(errc::contract, "singular_curvature: i must lie in [1, dim-1]");
  const auto mult = multiplicity(gamma);
  if (!mult || *mult != m)
    throw error(errc::contract,
                "singular_curvature: jet multiplicity is not " + std::to_string(m));
  // True derivatives gamma^(m+j)(0) = (m+j)! * gamma^[m+j], exact;
  // v_{m,i+1} reads up to gamma^(m+i)(0).
  std::vector<RatVec> deriv;
  for (int j = 0; j <= i; ++j) {
    const Rational f(factorial(m + j));
    deriv.push_back(f * gamma.at(m + j));
  }
  if (!rat_independent({deriv.begin(), deriv.begin() + i}))
    throw error(errc::undefined_invariant,
                "singular_curvature: gamma^(m)(0)..gamma^(m+" +
                    std::to_string(i - 1) + ")(0) are dependent");

  const auto volume = [&](int j) -> double {
    if (j == 0) return 1.0;
    if (j == n) {
      std::vector<RatVec> rows(n, RatVec(n));
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) rows[r][c] = deriv[c][r];
      return rat_det(rows).get_d();
    }
    std::vector<RatVec> gram(j, RatVec(j));
    for (int a = 0; a < j; ++a)
      for (int b = 0; b < j; ++b) {
        Rational dot(0);
        for (int r = 0; r < n; ++r) dot += deriv[a][r] * deriv[b][r];
        gram[a][b] = dot;
      }
    return std::sqrt(rat_det(gram).get_d());
  };

  const double v1 = volume(1);
  const double vi = volume(i);
  const double vim = volume(i - 1);
  const double vip = volume(i + 1);
  return vim * vip / (std::pow(v1, 1.0 / m) * vi * vi);
}

LimitEstimate normalized_curvature_limit(const PolyCurve& curve, int m, int i,
                                         int k_min, int k_max) {
  if (i < 1 || i > curve.dim - 1)
    throw error(errc::contract, "normalized_curvature_limit: bad index");
  // Extrapolation tableau for t = 2^{-k}; columns past 6 only amplify
  // rounding noise, so the depth is capped there.
  constexpr std::size_t kMaxColumns = 6;
  std::vector<double> prev;
  LimitEstimate est;
  for (int k = k_min; k <= k_max; ++k) {
    const double t = std::ldexp(1.0, -k);
    std::vector<double> row{normalized_curvatures(curve, m, t)[i - 1]};
    for (std::size_t j = 1; j <= std::min(prev.size(), kMaxColumns); ++j) {
      const double w = std::ldexp(1.0, static_cast<int>(j));  // 2^j
      row.push_back(row[j - 1] + (row[j - 1] - prev[j - 1]) / (w - 1.0));
    }
    if (!prev.empty()) est.residual = std::abs(row.back() - prev.back());
    est.value = row.back();
    prev = std::move(row);
  }
  return est;
}

FrenetFrame gram_schmidt_frame(const PolyCurve& curve, double t) {
  const int n = curve.dim;
  FrenetFrame out;
  out.t = t;
  out.volumes = gram_volumes(curve, t, n);
  Eigen::MatrixXd e(n, n);
  Eigen::MatrixXd d = derivative_matrix(curve, t, n - 1);
  for (int i = 0; i < n - 1; ++i) {
    Eigen::VectorXd v = d.col(i);
    for (int j = 0; j < i; ++j) v -= v.dot(e.col(j)) * e.col(j);
    for (int j = 0; j < i; ++j) v -= v.dot(e.col(j)) * e.col(j);  // re-orthogonalize
    const double norm = v.norm();
    if (norm <= kGramClampTol)
      throw error(errc::degenerate_volume,
                  "gram_schmidt_frame: derivative " + std::to_string(i + 1) +
                      " dependent at t = " + std::to_string(t),
                  i + 1);
    e.col(i) = v / norm;
  }
  // e_N = e_1 x ... x e_{N-1}, expanded along the removed column.
  Eigen::VectorXd last(n);
  for (int j = 0; j < n; ++j) {
    Eigen::MatrixXd minor(n - 1, n - 1);
    for (int c = 0, cc = 0; c < n; ++c) {
      if (c == j) continue;
      for (int r = 0; r < n - 1; ++r) minor(r, cc) = e(c, r);
      ++cc;
    }
    last[j] = ((j % 2 == 0) ? 1.0 : -1.0) * minor.determinant();
  }
  e.col(n - 1) = last;
  out.frame = std::move(e);
  return out;
}

double invert_tau(const PolyCurve& curve, int m, double tau, double t_max) {
  const double target = (tau >= 0 ? 1.0 : -1.0) * std::pow(std::abs(tau), m);
  double lo = 0.0, hi = (tau >= 0 ? t_max : -t_max);
  const double s_hi = signed_arclength(curve, hi);
  if ((tau >= 0 && s_hi < target) || (tau < 0 && s_hi > target))
    throw error(errc::contract, "invert_tau: tau outside the bracket");
  for (int iter = 0; iter < 80; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double s = signed_arclength(curve, mid);
    if ((s < target) == (tau >= 0))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

ProfileRow profile_row(const PolyCurve& curve, int m, double t) {
  ProfileRow row;
  row.t = t;
  row.s = signed_arclength(curve, t);
  row.tau = (row.s >= 0 ? 1.0 : -1.0) * std::pow(std::abs(row.s), 1.0 / m);
  try {
    row.kappa = curvatures(curve, t);
    row.mu = normalized_curvatures(curve, m, t);
  } catch (const error& e) {
    if (e.code() != errc::degenerate_volume) throw;
    row.degenerate = true;
    row.kappa.assign(curve.dim - 1, std::numeric_limits<double>::quiet_NaN());
    row.mu.assign(curve.dim - 1, std::numeric_limits<double>::quiet_NaN());
  }
  return row;
}

}  // namespace

CurvatureProfile profile_grid(const PolyCurve& curve, int m,
                              const std::vector<double>& ts) {
  CurvatureProfile out;
  out.m = m;
  out.rows.resize(ts.size());
  const std::int64_t count = static_cast<std::int64_t>(ts.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < count; ++k)
    out.rows[k] = profile_row(curve, m, ts[k]);
  return out;
}

CurvatureProfile profile_grid_serial(const PolyCurve& curve, int m,
                                     const std::vector<double>& ts) {
  CurvatureProfile out;
  out.m = m;
  out.rows.resize(ts.size());
  for (std::size_t k = 0; k < ts.size(); ++k)
    out.rows[k] = profile_row(curve, m, ts[k]);
  return out;
}

SampledCurvatures curvatures_from_samples(const SampledCurve& samples, int m,
                                          int fit_degree, int window) {
  const int count = static_cast<int>(samples.tau.size());
  if (count < window || window <= fit_degree)
    throw error(errc::contract, "curvatures_from_samples: too few samples");
  const int n = static_cast<int>(samples.point.front().size());
  const double h = samples.tau[1] - samples.tau[0];

  // Local least-squares fit around each sample; derivatives of the fitted
  // polynomial give gamma^(1..N)(tau_k).
  std::vector<Eigen::MatrixXd> deriv(count);  // n x N, columns gamma^(1..N)
  std::vector<double> speed(count);
  const int half = window / 2;
  for (int k = 0; k < count; ++k) {
    int lo = std::max(0, std::min(k - half, count - window));
    Eigen::MatrixXd a(window, fit_degree + 1);
    Eigen::MatrixXd rhs(window, n);
    for (int r = 0; r < window; ++r) {
      const double u = (samples.tau[lo + r] - samples.tau[k]) / h;
      double p = 1.0;
      for (int c = 0; c <= fit_degree; ++c) {
        a(r, c) = p;
        p *= u;
      }
      rhs.row(r) = samples.point[lo + r].transpose();
    }
    const Eigen::MatrixXd coef = a.colPivHouseholderQr().solve(rhs);
    Eigen::MatrixXd dm(n, n);
    double fact = 1.0;
    for (int r = 1; r <= n; ++r) {
      fact *= r;
      dm.col(r - 1) = fact / std::pow(h, r) * coef.row(r).transpose();
    }
    deriv[k] = dm;
    speed[k] = dm.col(0).norm();
  }

  // Cumulative Simpson for s outward from tau = 0.
  int k0 = 0;
  for (int k = 0; k < count; ++k)
    if (std::abs(samples.tau[k]) < std::abs(samples.tau[k0])) k0 = k;
  std::vector<double> s(count, 0.0);
  const auto pair_step = [&](int a, int b, int c) {
    return h / 3.0 * (speed[a] + 4.0 * speed[b] + speed[c]);
  };
  const auto half_step = [&](int a, int b, int c) {
    return h / 12.0 * (5.0 * speed[a] + 8.0 * speed[b] - speed[c]);
  };
  for (int k = k0 + 1; k < count; ++k) {
    if (k - 1 >= k0 + 1)
      s[k] = s[k - 2] + pair_step(k - 2, k - 1, k);
    else
      s[k] = s[k - 1] + (k + 1 < count ? half_step(k - 1, k, k + 1)
                                       : h / 2.0 * (speed[k - 1] + speed[k]));
  }
  for (int k = k0 - 1; k >= 0; --k) {
    if (k + 1 <= k0 - 1)
      s[k] = s[k + 2] - pair_step(k + 2, k + 1, k);
    else
      s[k] = s[k + 1] - (k - 1 >= 0 ? half_step(k + 1, k, k - 1)
                                    : h / 2.0 * (speed[k + 1] + speed[k]));
  }

  SampledCurvatures out;
  out.tau = samples.tau;
  out.s = s;
  out.kappa.assign(count, {});
  out.mu.assign(count, {});
  for (int k = 0; k < count; ++k) {
    const Eigen::MatrixXd& dm = deriv[k];
    std::vector<double> v(n + 1, 1.0);
    bool degenerate = false;
    for (int i = 1; i <= n; ++i) {
      if (i == n) {
        v[i] = dm.leftCols(n).determinant();
        continue;
      }
      const auto sv = dm.leftCols(i).jacobiSvd().singularValues();
      double prod = 1.0;
      for (int j = 0; j < sv.size(); ++j) prod *= sv[j];
      v[i] = prod;
      if (v[i] <= kDegeneracyTol * std::pow(std::max(speed[k], 1e-30), i))
        degenerate = true;
    }
    if (degenerate) continue;
    std::vector<double> kap(n - 1), mu(n - 1);
    const double factor = std::pow(std::abs(s[k]), double(m - 1) / m);
    for (int i = 1; i <= n - 1; ++i) {
      kap[i - 1] = v[i - 1] * v[i + 1] / (v[1] * v[i] * v[i]);
      mu[i - 1] = kap[i - 1] * factor;
    }
    if (samples.tau[k] < 0.0 && (n * (m - 1)) % 2 != 0) mu[n - 2] = -mu[n - 2];
    out.kappa[k] = std::move(kap);
    out.mu[k] = std::move(mu);
  }
  return out;
}

}  // namespace cusplab
