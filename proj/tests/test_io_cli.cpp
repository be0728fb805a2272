#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "dmlab/config.hpp"
#include "dmlab/io.hpp"
#include "dmlab/propagator.hpp"
#include "dmlab/random_fields.hpp"

using namespace dmlab;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
  const fs::path p = fs::temp_directory_path() / ("dmlab_test_" + tag);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(DMLAB_BIN) + " " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) { return read_text_file(p); }

const char* kSmallConfig = R"({
  "grid": {"n": 512, "length": 60.0},
  "quadrature_nodes": 24,
  "solver": {"lambda": 1.0, "max_iters": 500, "tol_step": 1e-10, "tol_residual": 1e-8,
             "sigma0_re": 0.6024, "sigma0_im": -2.0, "mixing": 1.0},
  "seed": 7,
  "threads": 1,
  "deterministic": true,
  "out_dir": "unused"
})";

}  // namespace

TEST_CASE("field snapshot round trip") {
  const fs::path dir = fresh_dir("snapshot");
  const Grid g(256, 30.0);
  const Field f = random_mixture(5, 0).sample_normalized(g);

  write_field_snapshot(f, dir / "f.csv");
  const Field back = read_field_snapshot(dir / "f.csv");

  CHECK(back.grid == f.grid);
  CHECK(back.space == f.space);
  for (int j = 0; j < g.n; ++j) CHECK(back.values[j] == f.values[j]);

  // frequency-space snapshots carry their tag
  write_field_snapshot(fourier(f), dir / "fhat.csv");
  const Field bhat = read_field_snapshot(dir / "fhat.csv");
  CHECK(bhat.space == Space::frequency);
  CHECK(slurp(dir / "fhat.csv").substr(0, 2) == "k,");

  CHECK_THROWS(read_field_snapshot(dir / "missing.csv"));
}

TEST_CASE("config round trip and validation") {
  const RunConfig cfg = RunConfig::from_json_text(kSmallConfig);
  CHECK(cfg.grid_n == 512);
  CHECK(cfg.solver.sigma0.real() == doctest::Approx(0.6024));
  CHECK(cfg.deterministic);

  const RunConfig again = RunConfig::from_json_text(cfg.to_json_text());
  CHECK(again.to_json_text() == cfg.to_json_text());

  CHECK_THROWS_AS(RunConfig::from_json_text(R"({"grid": {"n": 512}, "typo_key": 1})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(RunConfig::from_json_text(R"({"grid": {"n": 512, "len": 60}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(RunConfig::from_json_text(R"({"suites": ["nope"]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(RunConfig::from_json_text(R"({"grid": {"n": 511}})"),
                  std::invalid_argument);
}

TEST_CASE("cli solve: outputs, determinism, exit codes") {
  const fs::path dir = fresh_dir("cli_solve");
  write_text_file(dir / "config.json", kSmallConfig);

  const std::string base = "solve --config " + (dir / "config.json").string();

  REQUIRE(run_cli(base + " --out " + (dir / "out1").string()) == 0);
  CHECK(fs::exists(dir / "out1" / "soliton.csv"));
  CHECK(fs::exists(dir / "out1" / "soliton.csv.meta.json"));
  CHECK(fs::exists(dir / "out1" / "result.json"));
  CHECK(fs::exists(dir / "out1" / "effective_config.json"));

  const auto result = nlohmann::json::parse(slurp(dir / "out1" / "result.json"));
  CHECK(result.at("converged").get<bool>());
  const double omega = result.at("omega").get<double>();
  CHECK(omega >= 0.418);
  CHECK(omega <= 0.538);
  CHECK(result.at("residual").get<double>() <= 1e-8);

  // byte-identical rerun
  REQUIRE(run_cli(base + " --out " + (dir / "out2").string()) == 0);
  CHECK(slurp(dir / "out1" / "result.json") == slurp(dir / "out2" / "result.json"));
  CHECK(slurp(dir / "out1" / "soliton.csv") == slurp(dir / "out2" / "soliton.csv"));

  // the effective config reloads to an identical run
  const RunConfig eff = RunConfig::load(dir / "out1" / "effective_config.json");
  CHECK(eff.to_json_text() == slurp(dir / "out1" / "effective_config.json"));
  CHECK(eff.grid_n == 512);
  CHECK(eff.seed == 7);
  CHECK(eff.solver.tol_residual == doctest::Approx(1e-8));

  // max_iters = 0: non-convergence, exit 2, trace emitted
  auto j = nlohmann::json::parse(kSmallConfig);
  j["solver"]["max_iters"] = 0;
  write_text_file(dir / "bad.json", j.dump());
  CHECK(run_cli("solve --config " + (dir / "bad.json").string() + " --out " +
                (dir / "out3").string()) == 2);
  const auto failed = nlohmann::json::parse(slurp(dir / "out3" / "result.json"));
  CHECK(!failed.at("converged").get<bool>());
  CHECK(failed.contains("trace"));
}

TEST_CASE("cli verify: suites and usage errors") {
  const fs::path dir = fresh_dir("cli_verify");
  REQUIRE(run_cli("verify --suite bounds --out " + dir.string()) == 0);
  const auto rep = nlohmann::json::parse(slurp(dir / "verify_report.json"));
  CHECK(rep.at("pass").get<bool>());
  bool has_delta = false;
  for (const auto& r : rep.at("reports"))
    for (const auto& c : r.at("checks"))
      if (c.at("check") == "delta_star" && c.at("pass").get<bool>()) has_delta = true;
  CHECK(has_delta);

  CHECK(run_cli("verify --suite nonsense --out " + dir.string()) == 64);
  CHECK(run_cli("bogus-subcommand") == 64);
}

TEST_CASE("cli tails: soliton input, advisory input, missing input") {
  const fs::path dir = fresh_dir("cli_tails");
  write_text_file(dir / "config.json", kSmallConfig);

  REQUIRE(run_cli("solve --config " + (dir / "config.json").string() + " --out " +
                  (dir / "sol").string()) == 0);
  CHECK(run_cli("tails --soliton " + (dir / "sol" / "soliton.csv").string() + " --config " +
                (dir / "config.json").string() + " --out " + (dir / "t1").string()) == 0);
  const auto rep = nlohmann::json::parse(slurp(dir / "t1" / "tails_report.json"));
  CHECK(!rep.at("advisory").get<bool>());
  CHECK(rep.at("pass").get<bool>());
  CHECK(fs::exists(dir / "t1" / "tails.csv"));
  const std::string csv = slurp(dir / "t1" / "tails.csv");
  CHECK(csv.substr(0, csv.find('\n')) == "s,alpha,beta,alpha_bar,beta_bar,envelope");

  // a plain gaussian is not a soliton: advisory report, still exit 0
  const Grid g(512, 60.0);
  const Field gauss = gaussian_exact(ChirpedGaussian::normalized(complexd{1.0, 0.0}), 0.0, g);
  write_field_snapshot(gauss, dir / "gauss.csv");
  CHECK(run_cli("tails --soliton " + (dir / "gauss.csv").string() + " --config " +
                (dir / "config.json").string() + " --out " + (dir / "t2").string()) == 0);
  const auto adv = nlohmann::json::parse(slurp(dir / "t2" / "tails_report.json"));
  CHECK(adv.at("advisory").get<bool>());

  CHECK(run_cli("tails --soliton " + (dir / "nothere.csv").string() + " --out " +
                (dir / "t3").string()) == 1);
}

TEST_CASE("DMLAB_OUT fallback") {
  const fs::path dir = fresh_dir("cli_env");
  setenv("DMLAB_OUT", (dir / "env_out").c_str(), 1);
  CHECK(run_cli("verify --suite duality") == 0);
  unsetenv("DMLAB_OUT");
  CHECK(fs::exists(dir / "env_out" / "verify_report.json"));
}
