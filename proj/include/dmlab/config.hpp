#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "dmlab/grid.hpp"
#include "dmlab/solver.hpp"

namespace dmlab {

// Run configuration for the command-line driver. JSON with strict
// validation: unknown keys are rejected.
struct RunConfig {
  int grid_n = 1024;
  double grid_length = 80.0;
  int quadrature_nodes = 32;
  SolverConfig solver = SolverConfig::defaults();
  std::vector<std::string> suites{"all"};
  std::uint64_t seed = 20080415;
  int threads = 1;
  bool deterministic = false;
  std::string out_dir;  // empty resolves via DMLAB_OUT, then "out"

  Grid grid() const { return Grid(grid_n, grid_length); }

  static RunConfig from_json_text(const std::string& text);
  static RunConfig load(const std::filesystem::path& path);
  std::string to_json_text() const;
  void validate() const;
};

}  // namespace dmlab
