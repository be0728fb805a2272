#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dmlab/config.hpp"

namespace dmlab {

struct CheckResult {
  std::string check;
  nlohmann::json params;
  double value = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // bound - value
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass = true;

  void add(CheckResult c);
  nlohmann::json to_json() const;
};

// Inequality suites. The bounds suite samples random fields on the
// configured grid; the geometry suites (bilinear, quasilocal, duality,
// strichartz) run on dedicated grids sized for their support layouts
// and time windows.
SuiteReport verify_bounds(const RunConfig& cfg);
SuiteReport verify_strichartz(const RunConfig& cfg);
SuiteReport verify_bilinear(const RunConfig& cfg);
SuiteReport verify_quasilocal(const RunConfig& cfg);
SuiteReport verify_duality(const RunConfig& cfg);

// suite in {bounds, bilinear, quasilocal, duality, strichartz, all};
// throws std::invalid_argument for anything else.
std::vector<SuiteReport> run_suites(const RunConfig& cfg, const std::string& suite);

}  // namespace dmlab
