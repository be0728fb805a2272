#pragma once

#include <filesystem>
#include <string>

#include "dmlab/grid.hpp"
#include "dmlab/tails.hpp"

namespace dmlab {

// Field snapshot: CSV with header `x,re,im` (position) or `k,re,im`
// (frequency), plus a JSON sidecar `<path>.meta.json` holding
// {n, length, space}. Values are printed with 17 significant digits so
// the round trip is exact.
void write_field_snapshot(const Field& f, const std::filesystem::path& csv_path);
Field read_field_snapshot(const std::filesystem::path& csv_path);

// TailProfile CSV: `s,alpha,beta,alpha_bar,beta_bar,envelope`; the
// envelope column is `nan` where no envelope is defined.
void write_tail_profile(const TailProfile& p, const std::vector<double>& envelope,
                        const std::filesystem::path& csv_path);

void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace dmlab
