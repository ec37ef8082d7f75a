// Command-line front end: classification, semigroup tables, curvature
// profiles, reconstruction, and jet composition with JSON/CSV I/O.
//
// Exit codes: 0 success, 2 domain errors, 3 I/O or configuration errors.

#include <omp.h>

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "cusplab/classify.hpp"
#include "cusplab/curvature.hpp"
#include "cusplab/errors.hpp"
#include "cusplab/jet_json.hpp"
#include "cusplab/model_curves.hpp"
#include "cusplab/reconstruct.hpp"
#include "cusplab/semigroup.hpp"

namespace {

using nlohmann::json;
using namespace cusplab;

constexpr const char* kVersion = "cusplab 1.0.0 (default jet order 12)";

void apply_thread_cap() {
  if (const char* env = std::getenv("CUSPLAB_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::parse, "cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw error(errc::parse, what + ": " + e.what());
  }
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_output(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error(errc::parse, "cannot open output file: " + path);
  out << content;
}

std::vector<double> parse_grid(const std::string& text) {
  double lo = 0, hi = 0, step = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 ||
      !(step > 0) || !(hi > lo))
    throw error(errc::parse, "grid must be lo:hi:step with step > 0: " + text);
  std::vector<double> out;
  const long count = std::lround((hi - lo) / step);
  for (long k = 0; k <= count; ++k) {
    const double t = lo + k * step;
    if (t > hi + 0.5 * step) break;
    out.push_back(t);
  }
  return out;
}

std::vector<double> parse_poly(const std::string& text) {
  std::vector<double> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      coeffs.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw error(errc::parse, "cannot parse coefficient: " + item);
    }
  }
  if (coeffs.empty()) throw error(errc::parse, "empty coefficient list");
  return coeffs;
}

json rational_map_to_json(const std::map<std::string, Rational>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[k] = to_string(v);
  return out;
}

json classify_one(const Jet& jet, std::uint64_t seed) {
  const Jet subject = seed ? random_a_equivalence(jet, seed) : jet;
  const CuspClass result = classify(subject);
  json trace = json::array();
  for (const auto& [condition, holds] : result.trace)
    trace.push_back({{"condition", condition}, {"holds", holds}});
  json out = {{"class", to_string(result.tag)},
              {"sigma", nullptr},
              {"multiplicity", nullptr},
              {"scalars", rational_map_to_json(result.scalars)},
              {"trace", std::move(trace)}};
  if (result.sigma) out["sigma"] = *result.sigma;
  if (result.multiplicity) out["multiplicity"] = *result.multiplicity;
  return out;
}

int run_classify(const std::string& input, const std::string& output,
                 int order, std::uint64_t seed) {
  const json doc = parse_json(read_input(input), "input");
  const auto load = [&](const json& j) {
    Jet jet = jet_from_json(j);
    if (order > 0) {
      if (order > jet.order)
        throw error(errc::parse, "--order " + std::to_string(order) +
                                     " exceeds the jet's stored order " +
                                     std::to_string(jet.order));
      jet.coeffs.resize(order);
      jet.order = order;
    }
    return jet;
  };

  json result;
  if (doc.is_array()) {
    std::vector<Jet> jets;
    jets.reserve(doc.size());
    for (const auto& item : doc) jets.push_back(load(item));
    std::vector<json> rows(jets.size());
    std::exception_ptr failure;
    const std::int64_t count = static_cast<std::int64_t>(jets.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < count; ++k) {
      try {
        rows[k] = classify_one(jets[k], seed);
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    result = json::array();
    for (auto& row : rows) result.push_back(std::move(row));
  } else {
    result = classify_one(load(doc), seed);
  }

  const std::string text = result.dump() + "\n";
  if (output.empty())
    std::cout << text;
  else
    write_output(output, text);
  return 0;
}

int run_semigroup(const std::string& gens, int level, long denumerant_a) {
  std::vector<long> elements;
  std::stringstream ss(gens);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      elements.push_back(std::stol(item));
    } catch (const std::exception&) {
      throw error(errc::parse, "cannot parse generator: " + item);
    }
  }
  const GeneratorSet a = GeneratorSet::of(elements);
  if (denumerant_a >= 0) {
    std::cout << denumerant_ge(denumerant_a, level, a).get_str() << "\n";
    return 0;
  }
  const SemigroupTable table = nonrepresentable_set(level, a);
  std::cout << json(table.nonrepresentable).dump() << "\n";
  return 0;
}

int run_curvature(const std::string& input, int m, const std::string& grid_text,
                  const std::string& output) {
  const Jet jet = jet_from_json(parse_json(read_input(input), "input"));
  const PolyCurve curve = PolyCurve::from_jet(jet);
  const std::vector<double> grid = parse_grid(grid_text);
  const CurvatureProfile profile = profile_grid(curve, m, grid);

  std::ostringstream csv;
  csv << "t,s,tau";
  for (int i = 1; i < curve.dim; ++i) csv << ",kappa_" << i;
  for (int i = 1; i < curve.dim; ++i) csv << ",mu_" << i;
  csv << "\n";
  for (const auto& row : profile.rows) {
    csv << fmt(row.t) << "," << fmt(row.s) << "," << fmt(row.tau);
    for (double k : row.kappa) csv << "," << fmt(k);
    for (double mu : row.mu) csv << "," << fmt(mu);
    csv << "\n";
  }

  json sigma = json::object();
  json limits = json::object();
  for (int i = 1; i < curve.dim; ++i) {
    const std::string key = std::to_string(i);
    try {
      sigma[key] = singular_curvature(jet, m, i);
    } catch (const error&) {
      sigma[key] = nullptr;
    }
    try {
      const LimitEstimate est = normalized_curvature_limit(curve, m, i);
      limits[key] = {{"value", est.value}, {"residual", est.residual}};
    } catch (const error&) {
      limits[key] = nullptr;
    }
  }
  long degenerate = 0;
  for (const auto& row : profile.rows) degenerate += row.degenerate ? 1 : 0;
  const json summary = {{"m", m},
                        {"samples", profile.rows.size()},
                        {"degenerate_samples", degenerate},
                        {"singular_curvature", std::move(sigma)},
                        {"limit", std::move(limits)}};

  if (output.empty()) {
    std::cout << csv.str();
    std::cerr << summary.dump() << "\n";
  } else {
    write_output(output + ".csv", csv.str());
    write_output(output + ".json", summary.dump() + "\n");
  }
  return 0;
}

int run_reconstruct(int dim, int m, const std::vector<std::string>& mu_texts,
                    double interval, double step, const std::string& output) {
  CurvatureSpec spec;
  spec.dim = dim;
  spec.m = m;
  spec.interval = interval;
  spec.step = step;
  if (static_cast<int>(mu_texts.size()) != dim - 1)
    throw error(errc::parse, "expected " + std::to_string(dim - 1) +
                                 " --mu polynomials, got " +
                                 std::to_string(mu_texts.size()));
  for (const auto& text : mu_texts) spec.mu.push_back(parse_poly(text));

  const ReconstructedCurve curve = reconstruct_curve(spec);

  std::ostringstream csv;
  csv << "tau";
  for (int j = 1; j <= dim; ++j) csv << ",gamma_" << j;
  csv << "\n";
  for (std::size_t k = 0; k < curve.tau.size(); ++k) {
    csv << fmt(curve.tau[k]);
    for (int j = 0; j < dim; ++j) csv << "," << fmt(curve.point[k][j]);
    csv << "\n";
  }

  // Round trip: recompute the normalized curvatures from the samples and
  // report the sup deviation from the prescribed polynomials on the part of
  // the interval where the fit windows are clean.
  SampledCurve samples{curve.tau, curve.point};
  json roundtrip = json::array();
  try {
    const SampledCurvatures rec = curvatures_from_samples(samples, m);
    const double h = curve.tau[1] - curve.tau[0];
    for (int i = 0; i < dim - 1; ++i) {
      double sup = 0.0;
      bool any = false;
      for (std::size_t k = 0; k < rec.tau.size(); ++k) {
        const double tau = rec.tau[k];
        if (std::abs(tau) < 0.05 || std::abs(tau) > interval - 10 * h) continue;
        if (rec.mu[k].empty()) continue;
        double expected = 0.0, p = 1.0;
        for (double c : spec.mu[i]) {
          expected += c * p;
          p *= tau;
        }
        sup = std::max(sup, std::abs(rec.mu[k][i] - expected));
        any = true;
      }
      roundtrip.push_back(any ? json(sup) : json(nullptr));
    }
  } catch (const error&) {
    for (int i = 0; i < dim - 1; ++i) roundtrip.push_back(nullptr);
  }

  const json summary = {{"m", m},
                        {"samples", curve.tau.size()},
                        {"speed_law_residual", curve.speed_law_residual},
                        {"min_frame_det", curve.min_frame_det},
                        {"roundtrip_mu_error", std::move(roundtrip)}};

  if (output.empty()) {
    std::cout << csv.str();
    std::cerr << summary.dump() << "\n";
  } else {
    write_output(output + ".csv", csv.str());
    write_output(output + ".json", summary.dump() + "\n");
  }
  return 0;
}

int run_compose(const std::string& input, const std::string& param_text,
                const std::string& map_path, std::uint64_t seed,
                const std::string& output) {
  Jet jet = jet_from_json(parse_json(read_input(input), "input"));
  if (!param_text.empty()) {
    ParamJet phi;
    std::stringstream ss(param_text);
    std::string item;
    while (std::getline(ss, item, ',')) phi.coeffs.push_back(parse_rational(item));
    phi.order = static_cast<int>(phi.coeffs.size());
    if (phi.order < jet.order) {
      phi.coeffs.resize(jet.order, Rational(0));
      phi.order = jet.order;
    }
    jet = compose_param(jet, phi);
  }
  if (!map_path.empty()) {
    const MapJet map = map_from_json(parse_json(read_input(map_path), "map"));
    jet = compose_coord(map, jet);
  }
  if (seed != 0) jet = random_a_equivalence(jet, seed);
  const std::string text = jet_to_json(jet).dump() + "\n";
  if (output.empty())
    std::cout << text;
  else
    write_output(output, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_cap();
  CLI::App app{"Singularity classification and curvature toolkit for curves in R^N"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  auto* cls = app.add_subcommand("classify", "Classify a curve jet (JSON in, JSON out)");
  std::string cls_input, cls_output;
  int cls_order = 0;
  std::uint64_t cls_seed = 0;
  cls->add_option("--input", cls_input, "jet JSON file, or - for stdin")->required();
  cls->add_option("--output", cls_output, "write result JSON here instead of stdout");
  cls->add_option("--order", cls_order, "truncate the jet to this order first");
  cls->add_option("--seed", cls_seed,
                  "apply the seeded random A-equivalence before classifying");

  auto* sg = app.add_subcommand("semigroup", "Nonrepresentable sets and denumerants");
  std::string sg_gens;
  int sg_level = 2;
  long sg_denu = -1;
  sg->add_option("--gens", sg_gens, "generators, e.g. 3,5")->required();
  sg->add_option("--level", sg_level, "minimum number of parts n")->capture_default_str();
  sg->add_option("--denumerant", sg_denu, "print d_{>=n}(a; A) for this a instead");

  auto* cv = app.add_subcommand("curvature", "Curvature profile over a grid (CSV + JSON)");
  std::string cv_input, cv_grid, cv_output;
  int cv_m = 0;
  cv->add_option("--input", cv_input, "jet JSON file, or - for stdin")->required();
  cv->add_option("--m", cv_m, "multiplicity")->required()->check(CLI::PositiveNumber);
  cv->add_option("--grid", cv_grid, "parameter grid lo:hi:step")->required();
  cv->add_option("--output", cv_output, "basename; writes .csv and .json");

  auto* rc = app.add_subcommand("reconstruct",
                                "Curve from prescribed normalized curvatures");
  int rc_dim = 2, rc_m = 2;
  double rc_interval = 0.5, rc_step = 1e-3;
  std::vector<std::string> rc_mu;
  std::string rc_output;
  rc->add_option("--dim", rc_dim, "ambient dimension N")->capture_default_str();
  rc->add_option("--m", rc_m, "multiplicity")->capture_default_str();
  rc->add_option("--mu", rc_mu,
                 "polynomial coefficients c0,c1,... of one mu_i; repeat per i")
      ->required();
  rc->add_option("--interval", rc_interval, "half-width of the tau interval")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  rc->add_option("--step", rc_step, "integration step")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  rc->add_option("--output", rc_output, "basename; writes .csv and .json");

  auto* cp = app.add_subcommand("compose", "Apply parameter/coordinate changes to a jet");
  std::string cp_input, cp_param, cp_map, cp_output;
  std::uint64_t cp_seed = 0;
  cp->add_option("--input", cp_input, "jet JSON file, or - for stdin")->required();
  cp->add_option("--param", cp_param, "parameter change coefficients c1,c2,...");
  cp->add_option("--map", cp_map, "coordinate transformation JSON file");
  cp->add_option("--seed", cp_seed, "apply the seeded random A-equivalence");
  cp->add_option("--output", cp_output, "write jet JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (cls->parsed()) return run_classify(cls_input, cls_output, cls_order, cls_seed);
    if (sg->parsed()) return run_semigroup(sg_gens, sg_level, sg_denu);
    if (cv->parsed()) return run_curvature(cv_input, cv_m, cv_grid, cv_output);
    if (rc->parsed())
      return run_reconstruct(rc_dim, rc_m, rc_mu, rc_interval, rc_step, rc_output);
    if (cp->parsed()) return run_compose(cp_input, cp_param, cp_map, cp_seed, cp_output);
  } catch (const cusplab::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == errc::parse ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 3;
}
