// Compares the OpenMP curvature-profile kernel against the serial
// reference on a large grid and checks they agree bit for bit.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstring>

#include "cusplab/curvature.hpp"
#include "cusplab/model_curves.hpp"

using namespace cusplab;

namespace {

double seconds(const std::chrono::steady_clock::time_point& a,
               const std::chrono::steady_clock::time_point& b) {
  return std::chrono::duration<double>(b - a).count();
}

}  // namespace

int main(int argc, char** argv) {
  long samples = 20000;
  if (argc > 1) samples = std::atol(argv[1]);

  const Jet jet = model_jet("C23", 3);
  const PolyCurve curve = PolyCurve::from_jet(jet);
  std::vector<double> grid;
  grid.reserve(samples);
  for (long k = 0; k < samples; ++k)
    grid.push_back(-0.5 + (k + 0.5) / samples);  // avoids t = 0 exactly

  const auto t0 = std::chrono::steady_clock::now();
  const CurvatureProfile serial = profile_grid_serial(curve, 2, grid);
  const auto t1 = std::chrono::steady_clock::now();
  const CurvatureProfile parallel = profile_grid(curve, 2, grid);
  const auto t2 = std::chrono::steady_clock::now();

  bool identical = serial.rows.size() == parallel.rows.size();
  for (std::size_t k = 0; identical && k < serial.rows.size(); ++k) {
    identical = std::memcmp(&serial.rows[k].t, &parallel.rows[k].t, sizeof(double)) == 0 &&
                serial.rows[k].kappa == parallel.rows[k].kappa &&
                serial.rows[k].mu == parallel.rows[k].mu;
  }

  const double ts = seconds(t0, t1);
  const double tp = seconds(t1, t2);
  std::printf("samples          %ld\n", samples);
  std::printf("threads          %d\n", omp_get_max_threads());
  std::printf("serial           %.3f s\n", ts);
  std::printf("openmp           %.3f s\n", tp);
  std::printf("speedup          %.2fx\n", ts / tp);
  std::printf("bit-identical    %s\n", identical ? "yes" : "NO");
  return identical ? 0 : 1;
}
