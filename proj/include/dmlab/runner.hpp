#pragma once

#include <filesystem>
#include <string>

#include "dmlab/config.hpp"

namespace dmlab {

// Exit-code contract: 0 success, 1 I/O failure, 2 numerical
// non-convergence or failed check, 64 usage error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_io = 1;
inline constexpr int exit_numeric = 2;
inline constexpr int exit_usage = 64;

// Solves the ground state and writes soliton.csv (+ sidecar),
// result.json and effective_config.json into out_dir.
int run_solve(const RunConfig& cfg, const std::filesystem::path& out_dir);

// Runs the requested suite and writes verify_report.json.
int run_verify(const RunConfig& cfg, const std::string& suite,
               const std::filesystem::path& out_dir);

// Reads a soliton snapshot, writes tails.csv and tails_report.json.
// Non-soliton inputs (residual above the gate) produce an advisory
// report and exit 0 without asserting the inequalities.
int run_tails(const RunConfig& cfg, const std::filesystem::path& soliton_csv,
              const std::filesystem::path& out_dir);

}  // namespace dmlab
