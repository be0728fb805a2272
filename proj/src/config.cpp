#include "dmlab/config.hpp"

#include <stdexcept>

#include <json.hpp>

#include "dmlab/io.hpp"

namespace dmlab {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed)
      if (key == a) known = true;
    if (!known) throw std::invalid_argument("config: unknown key '" + key + "' in " + where);
  }
}

}  // namespace

RunConfig RunConfig::from_json_text(const std::string& text) {
  const json j = json::parse(text);
  RunConfig cfg;

  reject_unknown(j, {"grid", "quadrature_nodes", "solver", "suites", "seed", "threads",
                     "deterministic", "out_dir"},
                 "top level");

  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    reject_unknown(g, {"n", "length"}, "grid");
    if (g.contains("n")) cfg.grid_n = g.at("n").get<int>();
    if (g.contains("length")) cfg.grid_length = g.at("length").get<double>();
  }
  if (j.contains("quadrature_nodes")) cfg.quadrature_nodes = j.at("quadrature_nodes").get<int>();
  if (j.contains("solver")) {
    const auto& s = j.at("solver");
    reject_unknown(s, {"lambda", "max_iters", "tol_step", "tol_residual", "sigma0_re",
                       "sigma0_im", "mixing"},
                   "solver");
    if (s.contains("lambda")) cfg.solver.lambda = s.at("lambda").get<double>();
    if (s.contains("max_iters")) cfg.solver.max_iters = s.at("max_iters").get<int>();
    if (s.contains("tol_step")) cfg.solver.tol_step = s.at("tol_step").get<double>();
    if (s.contains("tol_residual")) cfg.solver.tol_residual = s.at("tol_residual").get<double>();
    if (s.contains("sigma0_re"))
      cfg.solver.sigma0 = complexd{s.at("sigma0_re").get<double>(), cfg.solver.sigma0.imag()};
    if (s.contains("sigma0_im"))
      cfg.solver.sigma0 = complexd{cfg.solver.sigma0.real(), s.at("sigma0_im").get<double>()};
    if (s.contains("mixing")) cfg.solver.mixing = s.at("mixing").get<double>();
  }
  if (j.contains("suites")) cfg.suites = j.at("suites").get<std::vector<std::string>>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("threads")) cfg.threads = j.at("threads").get<int>();
  if (j.contains("deterministic")) cfg.deterministic = j.at("deterministic").get<bool>();
  if (j.contains("out_dir")) cfg.out_dir = j.at("out_dir").get<std::string>();

  cfg.validate();
  return cfg;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
  return from_json_text(read_text_file(path));
}

std::string RunConfig::to_json_text() const {
  json j;
  j["grid"]["n"] = grid_n;
  j["grid"]["length"] = grid_length;
  j["quadrature_nodes"] = quadrature_nodes;
  j["solver"]["lambda"] = solver.lambda;
  j["solver"]["max_iters"] = solver.max_iters;
  j["solver"]["tol_step"] = solver.tol_step;
  j["solver"]["tol_residual"] = solver.tol_residual;
  j["solver"]["sigma0_re"] = solver.sigma0.real();
  j["solver"]["sigma0_im"] = solver.sigma0.imag();
  j["solver"]["mixing"] = solver.mixing;
  j["suites"] = suites;
  j["seed"] = seed;
  j["threads"] = threads;
  j["deterministic"] = deterministic;
  j["out_dir"] = out_dir;
  return j.dump(2) + "\n";
}

void RunConfig::validate() const {
  Grid check(grid_n, grid_length);  // throws on bad n/length
  (void)check;
  if (quadrature_nodes < 1) throw std::invalid_argument("config: quadrature_nodes must be >= 1");
  if (threads < 1) throw std::invalid_argument("config: threads must be >= 1");
  solver.validate();
  static const std::vector<std::string> known{"bounds",    "bilinear", "quasilocal",
                                              "duality",   "strichartz", "all"};
  for (const auto& s : suites) {
    bool ok = false;
    for (const auto& k : known)
      if (s == k) ok = true;
    if (!ok) throw std::invalid_argument("config: unknown suite '" + s + "'");
  }
}

}  // namespace dmlab
