#include "cusplab/reconstruct.hpp"

#include <cmath>
#include <string>

#include "cusplab/errors.hpp"

namespace cusplab {

namespace {

double horner(const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double ipow(double x, int e) {
  double out = 1.0;
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

Eigen::MatrixXd frenet_matrix(const std::vector<std::vector<double>>& kappa,
                              int n, double s) {
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n - 1; ++i) {
    const double v = horner(kappa[i], s);
    k(i + 1, i) = v;
    k(i, i + 1) = -v;
  }
  return k;
}

void orthonormalize(Eigen::MatrixXd& e) {
  for (int i = 0; i < e.cols(); ++i) {
    for (int j = 0; j < i; ++j) e.col(i) -= e.col(i).dot(e.col(j)) * e.col(j);
    e.col(i) /= e.col(i).norm();
  }
}

// One RK4 step of d(E, g)/dt = (E K(t), w(t, E)) followed by frame
// re-orthonormalization. `w` supplies the position velocity.
template <typename Kfun, typename Wfun>
void rk4_step(double t, double h, Eigen::MatrixXd& e, Eigen::VectorXd& g,
              const Kfun& k_of, const Wfun& w_of) {
  const Eigen::MatrixXd k0 = k_of(t);
  const Eigen::MatrixXd kh = k_of(t + 0.5 * h);
  const Eigen::MatrixXd k1 = k_of(t + h);

  const Eigen::MatrixXd e1 = e * k0;
  const Eigen::VectorXd g1 = w_of(t, e);
  const Eigen::MatrixXd e2 = (e + 0.5 * h * e1) * kh;
  const Eigen::VectorXd g2 = w_of(t + 0.5 * h, e + 0.5 * h * e1);
  const Eigen::MatrixXd e3 = (e + 0.5 * h * e2) * kh;
  const Eigen::VectorXd g3 = w_of(t + 0.5 * h, e + 0.5 * h * e2);
  const Eigen::MatrixXd e4 = (e + h * e3) * k1;
  const Eigen::VectorXd g4 = w_of(t + h, e + h * e3);

  e += h / 6.0 * (e1 + 2.0 * e2 + 2.0 * e3 + e4);
  g += h / 6.0 * (g1 + 2.0 * g2 + 2.0 * g3 + g4);
  orthonormalize(e);
}

struct Branches {
  std::vector<double> x;
  std::vector<Eigen::VectorXd> point;
  std::vector<Eigen::MatrixXd> frame;
};

// Integrates both branches from the shared initial data at 0 and merges the
// samples into one ascending sequence over [-L, L].
template <typename Kfun, typename Wfun>
Branches integrate_both(int dim, double interval, double step,
                        const Eigen::MatrixXd& frame0, const Kfun& k_of,
                        const Wfun& w_of) {
  const long n = std::lround(interval / step);
  if (n < 2) throw error(errc::contract, "integration interval shorter than two steps");
  const double h = interval / static_cast<double>(n);

  Branches out;
  out.x.resize(2 * n + 1);
  out.point.resize(2 * n + 1);
  out.frame.resize(2 * n + 1);
  out.x[n] = 0.0;
  out.point[n] = Eigen::VectorXd::Zero(dim);
  out.frame[n] = frame0;

  for (int dir : {+1, -1}) {
    Eigen::MatrixXd e = frame0;
    Eigen::VectorXd g = Eigen::VectorXd::Zero(dim);
    double x = 0.0;
    for (long j = 1; j <= n; ++j) {
      rk4_step(x, dir * h, e, g, k_of, w_of);
      x = dir * h * static_cast<double>(j);
      const long idx = n + dir * j;
      out.x[idx] = x;
      out.point[idx] = g;
      out.frame[idx] = e;
    }
  }
  return out;
}

void check_positivity(const std::vector<std::vector<double>>& funcs, int n_positive,
                      double interval, double step, const char* label) {
  const long steps = std::lround(interval / step);
  for (int i = 0; i < n_positive; ++i) {
    for (long j = -steps; j <= steps; ++j) {
      const double x = static_cast<double>(j) * step;
      if (!(horner(funcs[i], x) > 0.0))
        throw error(errc::hypothesis,
                    std::string(label) + "_" + std::to_string(i + 1) +
                        " is not positive at " + std::to_string(x));
    }
  }
}

}  // namespace

FrenetResult frenet_integrate(const std::vector<std::vector<double>>& kappa,
                              int dim, double interval, double step,
                              const Eigen::MatrixXd* initial_frame) {
  if (dim < 2) throw error(errc::contract, "frenet_integrate: dim must be >= 2");
  if (static_cast<int>(kappa.size()) != dim - 1)
    throw error(errc::contract, "frenet_integrate: need dim-1 curvature functions");
  check_positivity(kappa, dim - 2, interval, step, "kappa");
  const Eigen::MatrixXd frame0 =
      initial_frame ? *initial_frame : Eigen::MatrixXd::Identity(dim, dim);

  const auto k_of = [&](double s) { return frenet_matrix(kappa, dim, s); };
  const auto w_of = [&](double, const Eigen::MatrixXd& e) -> Eigen::VectorXd {
    return e.col(0);
  };
  Branches b = integrate_both(dim, interval, step, frame0, k_of, w_of);
  return FrenetResult{std::move(b.x), std::move(b.point), std::move(b.frame)};
}

ReconstructedCurve reconstruct_curve(const CurvatureSpec& spec,
                                     const Eigen::MatrixXd* initial_frame) {
  if (spec.dim < 2) throw error(errc::contract, "reconstruct_curve: dim must be >= 2");
  if (spec.m < 2) throw error(errc::contract, "reconstruct_curve: m must be >= 2");
  if (static_cast<int>(spec.mu.size()) != spec.dim - 1)
    throw error(errc::contract, "reconstruct_curve: need dim-1 curvature functions");
  if (!(spec.interval > 0.0) || !(spec.step > 0.0))
    throw error(errc::contract, "reconstruct_curve: interval and step must be positive");
  check_positivity(spec.mu, spec.dim - 2, spec.interval, spec.step, "mu");

  const int n = spec.dim;
  const int m = spec.m;
  const Eigen::MatrixXd frame0 =
      initial_frame ? *initial_frame : Eigen::MatrixXd::Identity(n, n);

  // gamma_1 carries curvatures m*mu_i(tau); T = m e_1 and the position
  // integrates d gamma / d tau = tau^{m-1} T(tau).
  std::vector<std::vector<double>> kappa = spec.mu;
  for (auto& f : kappa)
    for (auto& c : f) c *= m;
  const auto k_of = [&](double tau) { return frenet_matrix(kappa, n, tau); };
  const auto w_of = [&](double tau, const Eigen::MatrixXd& e) -> Eigen::VectorXd {
    return static_cast<double>(m) * ipow(tau, m - 1) * e.col(0);
  };

  Branches b = integrate_both(n, spec.interval, spec.step, frame0, k_of, w_of);

  ReconstructedCurve out;
  out.m = m;
  out.spec = spec;
  out.tau = std::move(b.x);
  out.point = std::move(b.point);
  out.frame = std::move(b.frame);

  const double h = out.tau[1] - out.tau[0];
  double residual = 0.0;
  for (std::size_t k = 2; k + 2 < out.tau.size(); ++k) {
    const double tau = out.tau[k];
    if (std::abs(tau) < 5.0 * h) continue;
    const Eigen::VectorXd d =
        (-out.point[k + 2] + 8.0 * out.point[k + 1] - 8.0 * out.point[k - 1] +
         out.point[k - 2]) /
        (12.0 * h);
    const double expected = m * ipow(std::abs(tau), m - 1);
    residual = std::max(residual, std::abs(d.norm() - expected) / expected);
  }
  out.speed_law_residual = residual;
  double min_det = std::numeric_limits<double>::infinity();
  for (const auto& e : out.frame) min_det = std::min(min_det, e.determinant());
  out.min_frame_det = min_det;
  return out;
}

std::vector<double> isometry_signature(const ReconstructedCurve& curve) {
  const std::size_t count = curve.tau.size();
  if (count < 3) throw error(errc::contract, "isometry_signature: need >= 3 samples");
  std::size_t origin = 0;
  for (std::size_t k = 0; k < count; ++k)
    if (std::abs(curve.tau[k]) < std::abs(curve.tau[origin])) origin = k;
  const Eigen::VectorXd base = curve.point[origin];

  constexpr std::size_t kAnchors = 32;
  const std::size_t stride = std::max<std::size_t>(1, count / kAnchors);
  std::vector<Eigen::VectorXd> deltas;
  for (std::size_t k = 0; k < count; k += stride)
    deltas.push_back(curve.point[k] - base);

  std::vector<double> sig;
  for (const auto& d : deltas) sig.push_back(d.norm());
  for (std::size_t a = 0; a < deltas.size(); ++a)
    for (std::size_t b = a; b < deltas.size(); ++b)
      sig.push_back(deltas[a].dot(deltas[b]));
  // Gram data alone cannot see orientation; the uniqueness statement is up
  // to orientation-preserving isometries, so signed volumes of N-tuples of
  // anchors are appended. The tuples are spread across the whole curve
  // (consecutive anchors would be nearly collinear).
  const int n = static_cast<int>(base.size());
  const std::size_t jump = deltas.size() / static_cast<std::size_t>(n);
  if (jump > 0) {
    Eigen::MatrixXd w(n, n);
    for (std::size_t a = 0; a + (n - 1) * jump < deltas.size(); ++a) {
      for (int c = 0; c < n; ++c) w.col(c) = deltas[a + c * jump];
      sig.push_back(w.determinant());
    }
  }
  return sig;
}

}  // namespace cusplab
