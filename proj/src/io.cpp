#include "dmlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dmlab {

namespace {

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path) {
  auto p = csv_path;
  p += ".meta.json";
  return p;
}

}  // namespace

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_field_snapshot(const Field& f, const std::filesystem::path& csv_path) {
  std::ostringstream csv;
  csv << (f.space == Space::position ? "x,re,im\n" : "k,re,im\n");
  for (int j = 0; j < f.n(); ++j) {
    const double coord = f.space == Space::position ? f.grid.x(j) : f.grid.k(j);
    csv << fmt(coord) << ',' << fmt(f.values[j].real()) << ',' << fmt(f.values[j].imag())
        << '\n';
  }
  write_text_file(csv_path, csv.str());

  nlohmann::json meta;
  meta["n"] = f.grid.n;
  meta["length"] = f.grid.length;
  meta["space"] = f.space == Space::position ? "position" : "frequency";
  write_text_file(sidecar_path(csv_path), meta.dump(2) + "\n");
}

Field read_field_snapshot(const std::filesystem::path& csv_path) {
  const auto meta = nlohmann::json::parse(read_text_file(sidecar_path(csv_path)));
  const int n = meta.at("n").get<int>();
  const double length = meta.at("length").get<double>();
  const std::string space_s = meta.at("space").get<std::string>();
  if (space_s != "position" && space_s != "frequency")
    throw std::runtime_error("snapshot sidecar: bad space tag");
  const Space space = space_s == "position" ? Space::position : Space::frequency;

  std::istringstream in(read_text_file(csv_path));
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("snapshot: empty file");
  std::vector<complexd> values;
  values.reserve(n);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double coord, re, im;
    if (std::sscanf(line.c_str(), "%lg,%lg,%lg", &coord, &re, &im) != 3)
      throw std::runtime_error("snapshot: malformed row: " + line);
    values.emplace_back(re, im);
  }
  if (static_cast<int>(values.size()) != n)
    throw std::runtime_error("snapshot: row count does not match sidecar");
  return Field(Grid(n, length), space, std::move(values));
}

void write_tail_profile(const TailProfile& p, const std::vector<double>& envelope,
                        const std::filesystem::path& csv_path) {
  std::ostringstream csv;
  csv << "s,alpha,beta,alpha_bar,beta_bar,envelope\n";
  for (int i = 0; i < p.size(); ++i) {
    const double env =
        i < static_cast<int>(envelope.size()) ? envelope[i] : std::nan("");
    csv << fmt(p.s[i]) << ',' << fmt(p.alpha[i]) << ',' << fmt(p.beta[i]) << ','
        << fmt(p.alpha_bar[i]) << ',' << fmt(p.beta_bar[i]) << ',' << fmt(env) << '\n';
  }
  write_text_file(csv_path, csv.str());
}

}  // namespace dmlab
