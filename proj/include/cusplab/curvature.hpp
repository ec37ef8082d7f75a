#pragma once

#include <Eigen/Dense>
#include <vector>

#include "cusplab/polycurve.hpp"

namespace cusplab {

// Frame and Gram volumes at one parameter value. frame columns are
// e_1..e_N (modified Gram-Schmidt on gamma^(1..N-1), e_N by the generalized
// cross product, so det = +1).
struct FrenetFrame {
  double t = 0.0;
  Eigen::MatrixXd frame;
  std::vector<double> volumes;  // V_0..V_N
};

// V_0 = 1; for 0 < i < N the square root of the Gram determinant of
// gamma^(1..i)(t); for i = N the signed determinant. Tiny negative Gram
// determinants (roundoff) are clamped to zero; determinants negative beyond
// tolerance raise an internal error.
std::vector<double> gram_volumes(const PolyCurve& curve, double t, int upto);

// kappa_1..kappa_{N-1} by the volume quotient kappa_i = V_{i-1} V_{i+1}
// / (V_1 V_i^2). A volume V_i (i < N) below the degeneracy tolerance throws
// errc::degenerate_volume with detail = i.
std::vector<double> curvatures(const PolyCurve& curve, double t);

// Signed arclength s(t) = integral_0^t |gamma'(v)| dv, composite Simpson
// with panel doubling until the relative change is below 1e-10.
double signed_arclength(const PolyCurve& curve, double t);

// The regular curve with gamma'(t) = t^{m-1} hat_gamma'(t), via exact
// coefficient shift on the jet. Throws errc::contract when the jet
// multiplicity differs from m.
PolyCurve associated_regular_curve(const Jet& gamma, int m);

// tau(t) = sgn(s(t)) |s(t)|^{1/m} tabulated over a parameter grid, plus the
// worst relative deviation of |d gamma / d tau| from m |tau|^{m-1} at
// interior samples (finite differences; samples with |tau| below a few
// grid steps are excluded from the relative residual).
struct TauTable {
  std::vector<double> t, s, tau;
  double speed_law_residual = 0.0;
};
TauTable one_over_m_arclength(const PolyCurve& curve, int m,
                              const std::vector<double>& grid);

// mu_{m,i}(t) = kappa_i(t) |s(t)|^{(m-1)/m}, the last index carrying the
// extra factor (sgn t)^{N(m-1)}.
std::vector<double> normalized_curvatures(const PolyCurve& curve, int m,
                                          double t);

// sigma_{m,i} from the Gram volumes of the true derivatives
// gamma^(m)(0)..gamma^(m+i-1)(0); the independence precondition is checked
// exactly on the jet and its failure throws errc::undefined_invariant.
double singular_curvature(const Jet& gamma, int m, int i);

// Richardson extrapolation of mu_{m,i}(t) for t = 2^{-k}, k_min..k_max.
struct LimitEstimate {
  double value = 0.0;
  double residual = 0.0;
};
LimitEstimate normalized_curvature_limit(const PolyCurve& curve, int m, int i,
                                         int k_min = 6, int k_max = 16);

FrenetFrame gram_schmidt_frame(const PolyCurve& curve, double t);

// Solves tau(t) = tau for t in [-t_max, t_max] (bisection + Newton).
double invert_tau(const PolyCurve& curve, int m, double tau, double t_max);

// Grid evaluation of s, tau, kappa_i, mu_{m,i}. profile_grid runs the
// samples in parallel (OpenMP); profile_grid_serial is the plain loop kept
// as the reference implementation. Outputs are bit-identical.
struct ProfileRow {
  double t = 0.0, s = 0.0, tau = 0.0;
  std::vector<double> kappa, mu;
  bool degenerate = false;  // assumption (B) failed at this sample
};
struct CurvatureProfile {
  int m = 0;
  std::vector<ProfileRow> rows;
};
CurvatureProfile profile_grid(const PolyCurve& curve, int m,
                              const std::vector<double>& ts);
CurvatureProfile profile_grid_serial(const PolyCurve& curve, int m,
                                     const std::vector<double>& ts);

// Curvatures of a densely sampled curve (local least-squares polynomial
// fits for the derivatives, Simpson for the arclength). Used for round
// trips through reconstructed curves.
struct SampledCurve {
  std::vector<double> tau;               // uniform ascending grid containing 0
  std::vector<Eigen::VectorXd> point;
};
struct SampledCurvatures {
  std::vector<double> tau;
  std::vector<double> s;
  std::vector<std::vector<double>> kappa;  // kappa[k][i-1]
  std::vector<std::vector<double>> mu;
};
SampledCurvatures curvatures_from_samples(const SampledCurve& samples, int m,
                                          int fit_degree = 6, int window = 13);

}  // namespace cusplab
