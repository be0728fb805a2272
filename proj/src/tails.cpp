#include "dmlab/tails.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dmlab/functionals.hpp"

namespace dmlab {

std::vector<double> default_s_grid(const Grid& g) {
  const double ratio = std::pow(3.0, 1.0 / 8.0);
  std::vector<double> s;
  // descend from L/2 so that the top of the ladder is exactly L/2
  for (double v = g.length / 2.0; v >= g.dx(); v /= ratio) s.push_back(v);
  s.push_back(0.0);
  std::reverse(s.begin(), s.end());
  return s;
}

namespace {

std::vector<double> tail_curve(const std::vector<complexd>& vals,
                               const std::vector<double>& coords, double weight,
                               const std::vector<double>& s_grid) {
  // cumulative mass from the outside in over |coord| sorted descending
  std::vector<int> order(vals.size());
  for (std::size_t j = 0; j < vals.size(); ++j) order[j] = static_cast<int>(j);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(coords[a]) > std::abs(coords[b]);
  });

  std::vector<double> curve(s_grid.size());
  // s grid descending traversal matches the outside-in accumulation
  std::vector<std::size_t> idx(s_grid.size());
  for (std::size_t i = 0; i < s_grid.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return s_grid[a] > s_grid[b]; });

  double acc = 0.0;
  std::size_t pos = 0;
  for (std::size_t i : idx) {
    const double s = s_grid[i];
    while (pos < order.size() && std::abs(coords[order[pos]]) >= s) {
      acc += std::norm(vals[order[pos]]);
      ++pos;
    }
    curve[i] = std::sqrt(weight * acc);
  }
  return curve;
}

}  // namespace

TailProfile tail_profile(const Field& f, std::vector<double> s_grid) {
  if (f.space != Space::position)
    throw std::invalid_argument("tail_profile: field must be in position space");
  if (s_grid.empty()) s_grid = default_s_grid(f.grid);
  for (double s : s_grid)
    if (s > f.grid.length / 2.0 + 1e-12)
      throw std::invalid_argument("tail_profile: s beyond L/2 is not representable");

  TailProfile p;
  p.s = s_grid;

  std::vector<double> xs(f.n()), ks(f.n());
  for (int j = 0; j < f.n(); ++j) xs[j] = f.grid.x(j);
  for (int m = 0; m < f.n(); ++m) ks[m] = f.grid.k(m);

  const Field fhat = fourier(f);
  p.alpha = tail_curve(f.values, xs, f.grid.dx(), s_grid);
  p.beta = tail_curve(fhat.values, ks, f.grid.dk(), s_grid);

  // post-check: monotonicity must hold exactly by construction
  for (int i = 1; i < p.size(); ++i) {
    if (p.s[i] > p.s[i - 1] && (p.alpha[i] > p.alpha[i - 1] + 1e-15 ||
                                p.beta[i] > p.beta[i - 1] + 1e-15))
      throw std::runtime_error("tail_profile: non-monotone tail curve");
  }

  const double a0 = p.alpha.empty() ? 0.0 : *std::max_element(p.alpha.begin(), p.alpha.end());
  const double b0 = p.beta.empty() ? 0.0 : *std::max_element(p.beta.begin(), p.beta.end());
  p.alpha_bar.resize(p.size());
  p.beta_bar.resize(p.size());
  for (int i = 0; i < p.size(); ++i) {
    p.alpha_bar[i] = a0 > 0.0 ? p.alpha[i] / a0 : 0.0;
    p.beta_bar[i] = b0 > 0.0 ? p.beta[i] / b0 : 0.0;
  }
  return p;
}

namespace {

// index of the grid value equal to 3*s[i], if the ladder contains it
int triple_index(const std::vector<double>& s, int i) {
  const double target = 3.0 * s[i];
  for (std::size_t j = i; j < s.size(); ++j) {
    if (std::abs(s[j] - target) <= 1e-9 * std::max(1.0, target)) return static_cast<int>(j);
    if (s[j] > target * (1.0 + 1e-9)) break;
  }
  return -1;
}

}  // namespace

SelfConsistencyReport selfconsistency_check(const TailProfile& p, TailSide side,
                                            double tol, std::optional<double> residual,
                                            double residual_gate, double floor) {
  SelfConsistencyReport rep;
  rep.side = side;
  rep.advisory = !(residual.has_value() && *residual <= residual_gate);

  const auto& bar = side == TailSide::x ? p.alpha_bar : p.beta_bar;
  const double c = side == TailSide::x ? 1.0 : 0.78;

  rep.min_margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < p.size(); ++i) {
    const int j = triple_index(p.s, i);
    if (j < 0) continue;
    if (bar[i] < floor || bar[j] < floor) continue;  // below discretization noise
    const double a = bar[i];
    const double damp = p.s[i] > 0.0 ? std::min(1.0, c / std::sqrt(p.s[i])) : 1.0;
    const double rhs = a * a * a + 3.0 * damp * (1.0 - a) * a;
    const double lhs = bar[j];
    rep.s.push_back(p.s[i]);
    rep.lhs.push_back(lhs);
    rep.rhs.push_back(rhs);
    rep.margin.push_back(rhs - lhs);
    rep.min_margin = std::min(rep.min_margin, rhs - lhs);
  }
  if (rep.margin.empty()) rep.min_margin = 0.0;
  rep.pass = rep.min_margin >= -tol;
  return rep;
}

double fit_raw_constant(const TailProfile& p, TailSide side, double floor) {
  const auto& curve = side == TailSide::x ? p.alpha : p.beta;
  const double total = curve.empty() ? 0.0 : *std::max_element(curve.begin(), curve.end());
  double c = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    if (!(p.s[i] > 0.0)) continue;
    const int j = triple_index(p.s, i);
    if (j < 0) continue;
    if (curve[j] < floor * total || curve[i] < floor * total) continue;
    const double denom =
        curve[i] * curve[i] * curve[i] + total * total * curve[i] / std::sqrt(p.s[i]);
    if (denom > 0.0) c = std::max(c, curve[j] / denom);
  }
  return c;
}

std::optional<double> choose_s0(const TailProfile& p, TailSide side, double C) {
  const auto& curve = side == TailSide::x ? p.alpha : p.beta;
  const double total = curve.empty() ? 0.0 : *std::max_element(curve.begin(), curve.end());
  const double threshold = std::pow(3.0, -0.25);
  for (int i = 0; i < p.size(); ++i) {
    if (!(p.s[i] > 0.0)) continue;
    if (C * (curve[i] * curve[i] + total * total / std::sqrt(p.s[i])) <= threshold)
      return p.s[i];
  }
  return std::nullopt;
}

EnvelopeReport decay_envelope(const TailProfile& p, double s0, double tol, double floor) {
  if (!(s0 > 0.0)) throw std::invalid_argument("decay_envelope: s0 must be positive");
  int i0 = -1;
  for (int i = 0; i < p.size(); ++i)
    if (std::abs(p.s[i] - s0) <= 1e-9 * std::max(1.0, s0)) i0 = i;
  if (i0 < 0) throw std::invalid_argument("decay_envelope: s0 not in the profile range");

  EnvelopeReport rep;
  rep.s0 = p.s[i0];
  rep.effective_from = 9.0 * rep.s0;
  const double a_s0 = p.alpha[i0];
  const double total = *std::max_element(p.alpha.begin(), p.alpha.end());
  const double pre = a_s0 * std::pow(3.0, 0.25);

  rep.pass = true;
  for (int i = 0; i < p.size(); ++i) {
    if (p.s[i] < rep.s0) continue;
    const double logr = std::log(p.s[i] / (3.0 * rep.s0)) / std::log(3.0);
    const double env = pre * std::pow(3.0, -logr * logr / 4.0);
    const bool below_floor = p.alpha[i] < floor * total;
    const bool holds = below_floor || p.alpha[i] <= env * (1.0 + tol);
    rep.s.push_back(p.s[i]);
    rep.envelope.push_back(env);
    rep.alpha.push_back(p.alpha[i]);
    rep.ok.push_back(holds);
    if (p.s[i] >= rep.effective_from && !holds) rep.pass = false;
  }
  return rep;
}

PointwiseDecay pointwise_decay(const Field& f, double s) {
  if (f.space != Space::position)
    throw std::invalid_argument("pointwise_decay: field must be in position space");
  if (!(s >= 0.0 && s <= f.grid.length / 2.0))
    throw std::invalid_argument("pointwise_decay: s outside the grid");

  PointwiseDecay out;
  auto value_at = [&](double x) {
    const double pos = x / f.grid.dx() + f.grid.n / 2;
    const int j0 = static_cast<int>(std::floor(pos));
    const double frac = pos - j0;
    if (frac > 1e-12 && frac < 1.0 - 1e-12) out.interpolated = true;
    const int ja = std::clamp(j0, 0, f.grid.n - 1);
    const int jb = std::clamp(j0 + 1, 0, f.grid.n - 1);
    return (1.0 - frac) * f.values[ja] + frac * f.values[jb];
  };
  out.value = std::norm(value_at(s)) + std::norm(value_at(-s));

  const double fprime = std::sqrt(kinetic_energy(f));
  TailProfile p = tail_profile(f, {s});
  out.bound = 2.0 * fprime * p.alpha[0];
  out.ok = out.value <= out.bound * (1.0 + 1e-6);
  return out;
}

}  // namespace dmlab
