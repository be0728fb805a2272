#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dmlab/runner.hpp"

namespace {

struct CommonFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  bool deterministic = false;
  std::string out_dir;
};

void attach_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path, "JSON run configuration");
  cmd->add_option("--seed", flags.seed, "64-bit RNG seed");
  cmd->add_option("--threads", flags.threads, "worker thread cap");
  cmd->add_flag("--deterministic", flags.deterministic, "fixed summation order");
  cmd->add_option("--out", flags.out_dir, "output directory");
}

dmlab::RunConfig resolve_config(const CommonFlags& flags) {
  dmlab::RunConfig cfg = flags.config_path.empty()
                             ? dmlab::RunConfig{}
                             : dmlab::RunConfig::load(flags.config_path);
  if (flags.seed) cfg.seed = *flags.seed;
  if (flags.threads) cfg.threads = *flags.threads;
  if (flags.deterministic) cfg.deterministic = true;
  // precedence: --out, config value, DMLAB_OUT, ./out
  if (!flags.out_dir.empty()) cfg.out_dir = flags.out_dir;
  if (cfg.out_dir.empty())
    if (const char* env = std::getenv("DMLAB_OUT"); env && *env) cfg.out_dir = env;
  if (cfg.out_dir.empty()) cfg.out_dir = "out";
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dispersion-managed soliton laboratory"};
  app.require_subcommand(1);

  CommonFlags solve_flags, verify_flags, tails_flags;
  std::string suite = "all";
  std::string soliton_path;

  CLI::App* solve = app.add_subcommand("solve", "compute the ground-state soliton");
  attach_common(solve, solve_flags);

  CLI::App* verify = app.add_subcommand("verify", "run inequality suites");
  attach_common(verify, verify_flags);
  verify->add_option("--suite", suite,
                     "bounds | bilinear | quasilocal | duality | strichartz | all");

  CLI::App* tails = app.add_subcommand("tails", "tail profile and decay checks");
  attach_common(tails, tails_flags);
  tails->add_option("--soliton", soliton_path, "field snapshot CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : dmlab::exit_usage;
  }

  try {
    if (solve->parsed()) {
      const auto cfg = resolve_config(solve_flags);
      return dmlab::run_solve(cfg, cfg.out_dir);
    }
    if (verify->parsed()) {
      static const std::vector<std::string> known{"bounds",     "bilinear", "quasilocal",
                                                  "duality",    "strichartz", "all"};
      if (std::find(known.begin(), known.end(), suite) == known.end()) {
        std::cerr << "unknown suite: " << suite << "\n";
        return dmlab::exit_usage;
      }
      const auto cfg = resolve_config(verify_flags);
      return dmlab::run_verify(cfg, suite, cfg.out_dir);
    }
    if (tails->parsed()) {
      const auto cfg = resolve_config(tails_flags);
      return dmlab::run_tails(cfg, soliton_path, cfg.out_dir);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return dmlab::exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return dmlab::exit_io;
  }
  return dmlab::exit_usage;
}
