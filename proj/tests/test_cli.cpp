#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

#include "cusplab/classify.hpp"
#include "cusplab/jet_json.hpp"
#include "cusplab/model_curves.hpp"

namespace {

using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr interleaved
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CUSPLAB_CLI_PATH) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path fixture(const std::string& rel) {
  return std::filesystem::path(CUSPLAB_FIXTURE_DIR) / rel;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("version banner") {
  const RunResult r = run_cli("--version");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("cusplab") != std::string::npos);
  CHECK(r.output.find("12") != std::string::npos);
}

TEST_CASE("classify the bundled (2,3) fixture") {
  const RunResult r = run_cli("classify --input " + fixture("models/C23_N2.json").string());
  CHECK(r.exit_code == 0);
  const json out = json::parse(r.output);
  CHECK(out["class"] == "C23");
  CHECK(out["multiplicity"] == 2);
  CHECK(out["sigma"].is_null());
}

TEST_CASE("classify with --order truncation") {
  const RunResult r = run_cli("classify --order 3 --input " +
                              fixture("models/C23_N2.json").string());
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.output)["class"] == "C23");
}

TEST_CASE("semigroup output bytes") {
  const RunResult r = run_cli("semigroup --gens 3,5 --level 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "[0,1,2,3,4,5,7]\n");

  const RunResult d = run_cli("semigroup --gens 3,5 --level 2 --denumerant 8");
  CHECK(d.exit_code == 0);
  CHECK(d.output == "1\n");

  const RunResult g = run_cli("semigroup --gens 2,4 --level 1");
  CHECK(g.exit_code == 2);  // gcd != 1 is a domain error
}

TEST_CASE("deterministic bytes across repeated runs") {
  const std::string cls = "classify --seed 7 --input " +
                          fixture("models/C357_N3.json").string();
  CHECK(run_cli(cls).output == run_cli(cls).output);

  const std::string curv = "curvature --m 2 --grid -0.2:0.2:0.01 --input " +
                           fixture("models/C23_N2.json").string();
  const RunResult a = run_cli(curv);
  const RunResult b = run_cli(curv);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("t,s,tau,kappa_1,mu_1") != std::string::npos);
}

TEST_CASE("thread cap does not change the bytes") {
  const std::string args = "classify --input " + fixture("models/C45p7_11_N4.json").string();
  const RunResult many = run_cli(args);
  RunResult one;
  {
    const std::string cmd = std::string("CUSPLAB_THREADS=1 ") +
                            CUSPLAB_CLI_PATH + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) one.output.append(buf, got);
    one.exit_code = WEXITSTATUS(pclose(pipe));
  }
  CHECK(many.exit_code == 0);
  CHECK(one.exit_code == 0);
  CHECK(many.output == one.output);
}

TEST_CASE("reconstruct emits tau^2 for zero curvature") {
  const RunResult r = run_cli("reconstruct --dim 2 --m 2 --mu 0 --interval 0.3 --step 1e-3");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.output);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "tau,gamma_1,gamma_2");
  int rows = 0;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '{') continue;  // trailing JSON summary
    double tau, x, y;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &tau, &x, &y) == 3);
    CHECK(std::abs(x - tau * tau) < 1e-9);
    CHECK(std::abs(y) < 1e-9);
    ++rows;
  }
  CHECK(rows == 601);
}

TEST_CASE("compose subcommand applies a parameter change") {
  const auto out = temp_file("cusplab_compose_out.json");
  const RunResult r = run_cli("compose --param 1,1 --output " + out.string() +
                              " --input " + fixture("models/C23_N2.json").string());
  CHECK(r.exit_code == 0);
  std::ifstream in(out);
  const cusplab::Jet jet = cusplab::jet_from_json(json::parse(in));
  // (t^2, t^3) through s + s^2: x picks up 2s^3 + s^4, y stays s^3 + ...
  CHECK(jet.at(2) == cusplab::RatVec{cusplab::Rational(1), cusplab::Rational(0)});
  CHECK(jet.at(3) == cusplab::RatVec{cusplab::Rational(2), cusplab::Rational(1)});
  std::filesystem::remove(out);
}

TEST_CASE("malformed jets name the offending coefficient") {
  const auto bad = temp_file("cusplab_bad_jet.json");
  std::ofstream(bad) << R"({"dim":2,"order":2,"coeffs":[[1,0],["x/y",0]]})";
  const RunResult r = run_cli("classify --input " + bad.string());
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("coeffs[1][0]") != std::string::npos);
  std::filesystem::remove(bad);

  const auto unknown = temp_file("cusplab_unknown_field.json");
  std::ofstream(unknown) << R"({"dim":2,"order":1,"coeffs":[[0,0]],"spare":1})";
  const RunResult u = run_cli("classify --input " + unknown.string());
  CHECK(u.exit_code == 3);
  std::filesystem::remove(unknown);

  const RunResult missing = run_cli("classify --input /nonexistent/path.json");
  CHECK(missing.exit_code == 3);

  const RunResult badflag = run_cli("classify --input x --no-such-flag");
  CHECK(badflag.exit_code == 3);
}

TEST_CASE("batch classification preserves order") {
  json batch = json::array();
  batch.push_back(cusplab::jet_to_json(cusplab::model_jet("C23", 2)));
  batch.push_back(cusplab::jet_to_json(cusplab::model_jet("C45m7", 3)));
  batch.push_back(cusplab::jet_to_json(cusplab::model_jet("C357", 4)));
  const auto path = temp_file("cusplab_batch.json");
  std::ofstream(path) << batch.dump();
  const RunResult r = run_cli("classify --input " + path.string());
  CHECK(r.exit_code == 0);
  const json out = json::parse(r.output);
  REQUIRE(out.is_array());
  REQUIRE(out.size() == 3);
  CHECK(out[0]["class"] == "C23");
  CHECK(out[1]["class"] == "C45");
  CHECK(out[1]["sigma"] == -1);
  CHECK(out[2]["class"] == "C357");
  std::filesystem::remove(path);
}

TEST_CASE("bundled model corpus round-trips") {
  namespace fs = std::filesystem;
  int seen = 0;
  for (const auto& entry : fs::directory_iterator(fixture("models"))) {
    if (entry.path().extension() != ".json") continue;
    ++seen;
    std::ifstream in(entry.path());
    const json doc = json::parse(in);
    const cusplab::Jet jet = cusplab::jet_from_json(doc);
    const cusplab::CuspClass got = cusplab::classify(jet);

    // filename <model>_N<dim>.json carries the expected tag
    const std::string stem = entry.path().stem().string();
    const std::string model_name = stem.substr(0, stem.rfind("_N"));
    const cusplab::ModelCurve* model = nullptr;
    for (const auto& mc : cusplab::model_catalog())
      if (mc.name == model_name) model = &mc;
    REQUIRE(model != nullptr);
    CAPTURE(stem);
    CHECK(got.tag == model->tag);
    CHECK(got.sigma == model->sigma);

    const cusplab::Jet reparsed = cusplab::jet_from_json(cusplab::jet_to_json(jet));
    CHECK(reparsed == jet);
  }
  CHECK(seen >= 50);  // 21 models over N = 2, 3, 4 where embeddable
}
