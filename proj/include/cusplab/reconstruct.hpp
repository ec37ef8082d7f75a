#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "cusplab/curvature.hpp"

namespace cusplab {

// Prescribed m-normalized curvature data on (-interval, interval). Each
// mu[i] is the ascending coefficient list of a polynomial in tau; the first
// N-2 of them must be strictly positive on the sample grid.
struct CurvatureSpec {
  int dim = 2;
  int m = 2;
  std::vector<std::vector<double>> mu;  // size dim-1
  double interval = 0.5;
  double step = 1e-3;
};

struct ReconstructedCurve {
  int m = 0;
  CurvatureSpec spec;
  std::vector<double> tau;                // uniform, ascending, contains 0
  std::vector<Eigen::VectorXd> point;
  std::vector<Eigen::MatrixXd> frame;     // columns e_1..e_N of gamma_1
  double speed_law_residual = 0.0;        // vs m |tau|^{m-1}, interior samples
  double min_frame_det = 1.0;
};

// Unit-speed regular curve from prescribed curvature functions: integrates
// the skew-tridiagonal Frenet system plus gamma' = e_1 from gamma(0) = 0,
// frame(0) = standard basis, by classical fixed-step 4th-order integration
// with per-step modified Gram-Schmidt re-orthonormalization. kappa_i given
// as tau-polynomial coefficient lists; kappa_1..kappa_{N-2} must stay
// positive on the grid (errc::hypothesis otherwise).
struct FrenetResult {
  std::vector<double> s;
  std::vector<Eigen::VectorXd> point;
  std::vector<Eigen::MatrixXd> frame;
};
FrenetResult frenet_integrate(const std::vector<std::vector<double>>& kappa,
                              int dim, double interval, double step,
                              const Eigen::MatrixXd* initial_frame = nullptr);

// Singular curve of multiplicity m in 1/m-arclength parameterization whose
// m-normalized curvatures match the spec: the frame evolves under the
// Frenet system with curvatures m*mu_i(tau) and the position under
// d gamma / d tau = m tau^{m-1} e_1(tau), both branches from the shared
// initial data at 0.
ReconstructedCurve reconstruct_curve(const CurvatureSpec& spec,
                                     const Eigen::MatrixXd* initial_frame = nullptr);

// Isometry-invariant signature: distances from gamma(0) and the Gram matrix
// stream of (gamma(tau_j) - gamma(0)) over a strided anchor subset. Two
// reconstructions of one spec agree on it; a mirrored one differs when the
// last curvature is nonzero.
std::vector<double> isometry_signature(const ReconstructedCurve& curve);

}  // namespace cusplab
