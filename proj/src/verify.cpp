#include "dmlab/verify.hpp"

#include <cmath>
#include <stdexcept>

#include "dmlab/bilinear.hpp"
#include "dmlab/bounds.hpp"
#include "dmlab/functionals.hpp"
#include "dmlab/random_fields.hpp"

namespace dmlab {

void SuiteReport::add(CheckResult c) {
  pass = pass && c.pass;
  checks.push_back(std::move(c));
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["pass"] = pass;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e;
    e["check"] = c.check;
    e["params"] = c.params;
    e["value"] = c.value;
    e["bound"] = c.bound;
    e["margin"] = c.margin;
    e["pass"] = c.pass;
    j["checks"].push_back(e);
  }
  return j;
}

namespace {

CheckResult upper_check(std::string name, nlohmann::json params, double value,
                        double bound) {
  CheckResult c;
  c.check = std::move(name);
  c.params = std::move(params);
  c.value = value;
  c.bound = bound;
  c.margin = bound - value;
  c.pass = value <= bound;
  return c;
}

CheckResult window_check(std::string name, nlohmann::json params, double value,
                         double lo, double hi) {
  CheckResult c;
  c.check = std::move(name);
  c.params = std::move(params);
  c.value = value;
  c.bound = hi;
  c.margin = std::min(value - lo, hi - value);
  c.pass = value >= lo && value <= hi;
  return c;
}

}  // namespace

SuiteReport verify_bounds(const RunConfig& cfg) {
  SuiteReport rep;
  rep.suite = "bounds";

  const Grid grid = cfg.grid();
  const QuadratureRule rule = gauss_legendre(cfg.quadrature_nodes);

  const DeltaOptimum opt = optimize_delta();
  rep.add(window_check("delta_star", {{"window", "3.32 +- 0.05"}}, opt.delta_star,
                       3.32 - 0.05, 3.32 + 0.05));
  rep.add(window_check("lower_bound_value", {{"threshold", "1.05/sqrt(2 pi)"}},
                       opt.value, constants::P1_lower_factor,
                       constants::P1_upper));

  // two-sided consistency of the certified window
  double worst = 0.0;
  for (double d = 0.25; d <= 64.0; d *= 2.0) worst = std::max(worst, gaussian_lower_bound(d));
  rep.add(upper_check("lower_below_upper", {{"delta_grid", "0.25..64"}}, worst,
                      constants::P1_upper));

  const int samples = 50;
  double max_q = 0.0, max_r = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Field f = random_mixture(cfg.seed, i).sample_normalized(grid);
    max_q = std::max(max_q, std::abs(eval_Q4(f, f, f, f, rule)));
    max_r = std::max(max_r, std::abs(eval_R(f, f, f, f, rule)));
  }
  rep.add(upper_check("q4_random_upper", {{"samples", samples}, {"seed", cfg.seed}},
                      max_q, constants::P1_upper + 1e-6));
  rep.add(upper_check("r_random_bound", {{"samples", samples}, {"seed", cfg.seed}},
                      max_r, constants::R_bound + 1e-6));

  const P1Estimate est = p1_estimate_random(samples, cfg.seed, grid, rule);
  rep.add(window_check("p1_estimate_random", {{"samples", samples}, {"argmax", est.argmax}},
                       est.max_q, opt.value - 1e-4, constants::P1_upper + 1e-6));
  return rep;
}

SuiteReport verify_strichartz(const RunConfig& cfg) {
  SuiteReport rep;
  rep.suite = "strichartz";
  const QuadratureRule rule = gauss_legendre(cfg.quadrature_nodes);

  // sharpness probe: wide box so the sextic mass stays clear of the
  // boundary over the whole window
  {
    const Grid grid(8192, 800.0);
    const Field f = gaussian_exact(ChirpedGaussian::normalized(complexd{1.0, 0.0}), 0.0, grid);
    const StrichartzResult r = strichartz_check(f, 100.0, rule);
    CheckResult c;
    c.check = "gaussian_sharpness";
    c.params = {{"t_extent", 100.0}, {"tail_bound", r.tail_bound}};
    c.value = r.lhs;
    c.bound = r.rhs;
    c.margin = 1e-3 - std::abs(r.lhs - r.rhs);
    c.pass = std::abs(r.lhs - r.rhs) <= 1e-3;
    rep.add(c);
  }

  // random fields never exceed the sharp bound
  {
    const Grid grid(4096, 400.0);
    const int samples = 30;
    double worst = -1.0;
    bool all_ok = true;
    for (int i = 0; i < samples; ++i) {
      const Field f = random_mixture(cfg.seed, i).sample_normalized(grid);
      const StrichartzResult r = strichartz_check(f, 20.0, rule);
      all_ok = all_ok && r.ok && r.resolved;
      worst = std::max(worst, r.lhs - r.rhs);
    }
    CheckResult c = upper_check("random_bound", {{"samples", samples}, {"t_extent", 20.0}},
                                worst, 1e-6);
    c.pass = c.pass && all_ok;
    rep.add(c);
  }
  return rep;
}

SuiteReport verify_bilinear(const RunConfig& cfg) {
  SuiteReport rep;
  rep.suite = "bilinear";
  const QuadratureRule rule = gauss_legendre(std::max(cfg.quadrature_nodes, 32));
  const Grid grid(2048, 400.0);

  const std::vector<double> dists{1.0, 2.0, 4.0, 8.0};

  // frequency-separated pairs, plain measure
  {
    double prev_norm = -1.0;
    double worst_jump = 0.0;
    for (double d : dists) {
      const double w = 1.0;  // bump width in k
      const Field f1 = make_bump(grid, d / 2.0, d / 2.0 + w, Space::frequency, 10);
      const Field f2 = make_bump(grid, -d / 2.0 - w, -d / 2.0, Space::frequency, 10);
      const double nrm = bilinear_norm(f1, f2, 0.0, 20.0, 0, rule, true);
      const double bound = 1.0 / std::sqrt(2.0 * d);
      rep.add(upper_check("bilinear_fourier_dist_" + std::to_string(static_cast<int>(d)),
                          {{"dist", d}, {"t_extent", 20.0}}, nrm, bound + 1e-4));
      if (prev_norm >= 0.0) worst_jump = std::max(worst_jump, nrm / prev_norm);
      prev_norm = nrm;
    }
    // translating the same bumps apart never increases the norm
    rep.add(upper_check("bilinear_fourier_monotone", {{"dists", "1,2,4,8"}}, worst_jump,
                        1.05));
  }

  // x-separated pairs, |t|^{-1} measure
  {
    double prev_norm = -1.0;
    double worst_jump = 0.0;
    for (double d : dists) {
      const double w = 2.0;  // bump width in x
      const Field f1 = make_bump(grid, d / 2.0, d / 2.0 + w, Space::position, 10);
      const Field f2 = make_bump(grid, -d / 2.0 - w, -d / 2.0, Space::position, 10);
      const double nrm = bilinear_norm(f1, f2, 1e-3, 20.0, -1, rule, true);
      const double bound = 1.0 / std::sqrt(d);
      rep.add(upper_check("bilinear_x_dist_" + std::to_string(static_cast<int>(d)),
                          {{"dist", d}, {"window", "1e-3..20"}}, nrm, bound + 1e-4));
      if (prev_norm >= 0.0) worst_jump = std::max(worst_jump, nrm / prev_norm);
      prev_norm = nrm;
    }
    rep.add(upper_check("bilinear_x_monotone", {{"dists", "1,2,4,8"}}, worst_jump, 1.05));
  }

  // quadrilinear corollary, one separated pair
  {
    const QuadratureRule qrule = gauss_legendre(cfg.quadrature_nodes);
    const Grid qgrid(1024, 80.0);
    const Field f1 = make_bump(qgrid, 2.0, 4.0, Space::position, 10);
    const Field f2 = make_bump(qgrid, -4.0, -2.0, Space::position, 10);
    const Field f3 = make_bump(qgrid, -1.0, 1.0, Space::position, 10);
    const Field f4 = make_bump(qgrid, -0.5, 1.5, Space::position, 10);
    const MultilinearResult mx = multilinear_bound_check(f1, f2, f3, f4, 0, 1,
                                                         Space::position, qrule);
    rep.add(upper_check("multilinear_x", {{"dist", mx.distance}}, mx.value, mx.bound + 1e-8));

    const Field g1 = make_bump(qgrid, 1.0, 2.0, Space::frequency, 10);
    const Field g2 = make_bump(qgrid, -2.0, -1.0, Space::frequency, 10);
    const Field g3 = make_bump(qgrid, -0.5, 0.5, Space::frequency, 10);
    const Field g4 = make_bump(qgrid, -0.7, 0.3, Space::frequency, 10);
    const MultilinearResult mk = multilinear_bound_check(g1, g2, g3, g4, 0, 1,
                                                         Space::frequency, qrule);
    rep.add(upper_check("multilinear_fourier", {{"dist", mk.distance}}, mk.value,
                        mk.bound + 1e-8));

    // overlapping supports fall back to the plain P1 bound
    const MultilinearResult mo = multilinear_bound_check(f3, f4, f3, f4, 0, 1,
                                                         Space::position, qrule);
    rep.add(upper_check("multilinear_overlap", {{"dist", mo.distance}}, mo.value,
                        mo.bound + 1e-8));
  }
  return rep;
}

SuiteReport verify_quasilocal(const RunConfig& cfg) {
  SuiteReport rep;
  rep.suite = "quasilocal";
  const QuadratureRule rule = gauss_legendre(cfg.quadrature_nodes);
  const Grid grid(1024, 80.0);
  const double s = 1.0;

  const Field inner1 = make_bump(grid, -0.75, 0.15, Space::position, 10);
  const Field inner2 = make_bump(grid, -0.45, 0.45, Space::position, 10);
  const Field inner3 = make_bump(grid, -0.15, 0.75, Space::position, 10);

  {
    const Field outer = make_bump(grid, 3.5, 4.5, Space::position, 10);
    const double r = quasilocality_check(outer, inner1, inner2, inner3, s, 0,
                                         Space::position, rule);
    rep.add(upper_check("quasilocal_x", {{"s", s}}, r, 1e-8));
  }
  {
    const Field outer = make_bump(grid, 3.2, 4.2, Space::frequency, 10);
    const Field in1 = make_bump(grid, -0.75, 0.15, Space::frequency, 10);
    const Field in2 = make_bump(grid, -0.45, 0.45, Space::frequency, 10);
    const Field in3 = make_bump(grid, -0.15, 0.75, Space::frequency, 10);
    const double r = quasilocality_check(outer, in1, in2, in3, s, 0,
                                         Space::frequency, rule);
    rep.add(upper_check("quasilocal_fourier", {{"s", s}}, r, 1e-8));
  }
  {
    // violated geometry: the first slot sits on the resonant set
    // supp f2 - supp f3 + supp f4 of the inner bumps, so the value is
    // far above the quasi-local floor
    const Field bad = make_bump(grid, -0.7, 0.7, Space::position, 10);
    const complexd q = eval_Q4(bad, inner1, inner2, inner3, rule);
    const double r = std::abs(q) / (norm(bad) * norm(inner1) * norm(inner2) * norm(inner3));
    CheckResult c;
    c.check = "quasilocal_negative_control";
    c.params = {{"s", s}, {"outer", "-0.7..0.7"}};
    c.value = r;
    c.bound = 1e-3;
    c.margin = r - 1e-3;
    c.pass = r >= 1e-3;
    rep.add(c);
  }
  return rep;
}

SuiteReport verify_duality(const RunConfig& cfg) {
  SuiteReport rep;
  rep.suite = "duality";
  const QuadratureRule rule = gauss_legendre(std::max(cfg.quadrature_nodes, 48));
  const Grid grid(1024, 80.0);

  const std::vector<std::pair<complexd, complexd>> pairs{
      {complexd{1.0, 0.0}, complexd{2.0, 0.0}},
      {complexd{1.5, 0.0}, complexd{0.8, 0.0}},
      {complexd{1.0, 0.5}, complexd{2.0, -0.5}},
  };
  int idx = 0;
  for (const auto& [s1, s2] : pairs) {
    const Field f1 = gaussian_exact(ChirpedGaussian::normalized(s1), 0.0, grid);
    const Field f2 = gaussian_exact(ChirpedGaussian::normalized(s2), 0.0, grid);
    const DualityResult d = duality_check(f1, f2, 0.1, 1.0, rule);
    CheckResult c = upper_check("bilinear_duality_pair_" + std::to_string(idx++),
                                {{"window", "0.1..1"}}, d.rel_err, 1e-5);
    c.pass = c.pass && d.wrap_guard_ok;
    rep.add(c);
  }

  // windowed functional under t = 1/(4 tau): psi = t^{-1} 1_{[a,b]}
  // matches 2x the plain window on the inverse transforms
  {
    const double a = 0.25, b = 1.0;
    const Field f = gaussian_exact(ChirpedGaussian::normalized(complexd{1.0, 0.0}), 0.0, grid);
    const complexd lhs = eval_Q_windowed(f, f, f, f, a, b, -1, rule);
    const Field g = inverse_transform_field(f);
    const complexd rhs =
        2.0 * eval_Q_windowed(g, g, g, g, 1.0 / (4.0 * b), 1.0 / (4.0 * a), 0, rule);
    const double rel = std::abs(lhs - rhs) / std::abs(rhs);
    rep.add(upper_check("windowed_q_duality", {{"window", "0.25..1"}}, rel, 1e-6));
  }
  return rep;
}

std::vector<SuiteReport> run_suites(const RunConfig& cfg, const std::string& suite) {
  std::vector<SuiteReport> out;
  const bool all = suite == "all";
  if (all || suite == "bounds") out.push_back(verify_bounds(cfg));
  if (all || suite == "strichartz") out.push_back(verify_strichartz(cfg));
  if (all || suite == "bilinear") out.push_back(verify_bilinear(cfg));
  if (all || suite == "quasilocal") out.push_back(verify_quasilocal(cfg));
  if (all || suite == "duality") out.push_back(verify_duality(cfg));
  if (out.empty()) throw std::invalid_argument("unknown suite: " + suite);
  return out;
}

}  // namespace dmlab
