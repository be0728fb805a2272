#include "dmlab/bilinear.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dmlab/bounds.hpp"
#include "dmlab/functionals.hpp"
#include "dmlab/propagator.hpp"

namespace dmlab {

double SupportSpec::min_abs() const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& iv : intervals) {
    if (iv.lo <= 0.0 && iv.hi >= 0.0) return 0.0;
    best = std::min(best, std::min(std::abs(iv.lo), std::abs(iv.hi)));
  }
  return best;
}

double SupportSpec::max_abs() const {
  double best = 0.0;
  for (const auto& iv : intervals)
    best = std::max(best, std::max(std::abs(iv.lo), std::abs(iv.hi)));
  return best;
}

double dist(const SupportSpec& a, const SupportSpec& b) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : a.intervals) {
    for (const auto& q : b.intervals) {
      if (p.hi < q.lo)
        best = std::min(best, q.lo - p.hi);
      else if (q.hi < p.lo)
        best = std::min(best, p.lo - q.hi);
      else
        return 0.0;
    }
  }
  return best;
}

SupportSpec measure_support(const Field& f, Space space, double rel_threshold) {
  const Field* view = &f;
  Field transformed;
  if (space != f.space) {
    transformed = space == Space::frequency ? fourier(f) : inverse_fourier(f);
    view = &transformed;
  }
  double peak = 0.0;
  for (const auto& v : view->values) peak = std::max(peak, std::abs(v));
  const double thr = peak * rel_threshold;

  auto coord = [&](int j) {
    return space == Space::position ? view->grid.x(j) : view->grid.k(j);
  };

  SupportSpec spec;
  int start = -1;
  for (int j = 0; j <= view->n(); ++j) {
    const bool on = j < view->n() && std::abs(view->values[j]) > thr;
    if (on && start < 0) start = j;
    if (!on && start >= 0) {
      spec.intervals.push_back({coord(start), coord(j - 1)});
      start = -1;
    }
  }
  return spec;
}

Field make_bump(const Grid& grid, double a, double b, Space space, int m) {
  if (!(b > a)) throw std::invalid_argument("make_bump: need a < b");
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  std::vector<complexd> v(grid.n, complexd{0.0, 0.0});
  for (int j = 0; j < grid.n; ++j) {
    const double coord = space == Space::position ? grid.x(j) : grid.k(j);
    const double u = (coord - c) / h;
    if (std::abs(u) < 1.0) v[j] = std::pow(1.0 - u * u, m);
  }
  Field f(grid, space, std::move(v));
  if (space == Space::frequency) f = inverse_fourier(f);
  const double nrm = norm(f);
  if (!(nrm > 0.0)) throw std::invalid_argument("make_bump: bump not resolved on the grid");
  return scale(f, complexd{1.0 / nrm, 0.0});
}

namespace {

double bilinear_sq_over_nodes(const detail::PaddedSet& set,
                              const std::vector<double>& nodes,
                              const std::vector<double>& weights) {
  const double dxp = set.padded_grid().dx();
  std::vector<double> contrib(nodes.size());
  parallel_for(nodes.size(), [&](std::size_t i) {
    const auto u1 = set.evolved(0, nodes[i]);
    const auto u2 = set.evolved(1, nodes[i]);
    std::vector<double> terms(u1.size());
    for (std::size_t j = 0; j < u1.size(); ++j) terms[j] = std::norm(u1[j] * u2[j]);
    contrib[i] = weights[i] * dxp * pairwise_sum(std::move(terms));
  });
  return pairwise_sum(std::move(contrib));
}

}  // namespace

double bilinear_norm(const Field& f1, const Field& f2, double a, double b, int p,
                     const QuadratureRule& rule, bool two_sided) {
  if (p != 0 && p != -1) throw std::invalid_argument("bilinear_norm: p must be 0 or -1");
  if (!(b > a)) throw std::invalid_argument("bilinear_norm: need a < b");
  if (p == -1 && !(a > 0.0))
    throw std::invalid_argument("bilinear_norm: p = -1 needs a > 0");
  if (two_sided && a < 0.0)
    throw std::invalid_argument("bilinear_norm: two_sided needs a >= 0");

  detail::PaddedSet set({&f1, &f2});

  std::vector<double> nodes, weights;
  if (p == -1) {
    map_log_weighted(rule, a, b, nodes, weights);
  } else if (a < 0.0 && b > 0.0) {
    // split at the origin to keep the panels one-signed
    std::vector<double> n2, w2;
    map_to_interval(rule, a, 0.0, nodes, weights);
    map_to_interval(rule, 0.0, b, n2, w2);
    nodes.insert(nodes.end(), n2.begin(), n2.end());
    weights.insert(weights.end(), w2.begin(), w2.end());
  } else {
    map_to_interval(rule, a, b, nodes, weights);
  }

  double sq = bilinear_sq_over_nodes(set, nodes, weights);
  if (two_sided) sq *= 2.0;
  return std::sqrt(std::max(0.0, sq));
}

DualityResult duality_check(const Field& f1, const Field& f2, double a, double b,
                            const QuadratureRule& rule) {
  if (!(a > 0.0 && b > a)) throw std::invalid_argument("duality_check: need 0 < a < b");

  DualityResult out{};
  out.lhs = bilinear_norm(f1, f2, a, b, -1, rule);

  // the one-sided window t in (a,b) maps onto the transform side through
  // the conjugated inverse transform; for real inputs this is plainly
  // the inverse transform
  const Field g1 = inverse_transform_field(conj_field(f1));
  const Field g2 = inverse_transform_field(conj_field(f2));
  out.rhs = std::sqrt(2.0) * bilinear_norm(g1, g2, 1.0 / (4.0 * b), 1.0 / (4.0 * a), 0, rule);

  // non-wrapping guard: evolved mass must stay clear of the box edge on
  // both windows
  auto edge_mass = [](const Field& f, double t) {
    Field u = evolve(f, t);
    const int n = u.n();
    double edge = 0.0, total = 0.0;
    for (int j = 0; j < n; ++j) {
      const double w = std::norm(u.values[j]);
      total += w;
      if (j < n / 16 || j >= n - n / 16) edge = std::max(edge, w);
    }
    return total > 0.0 ? edge / (total * u.grid.dx()) : 0.0;
  };
  out.wrap_guard_ok = edge_mass(f1, b) < 1e-10 && edge_mass(f2, b) < 1e-10 &&
                      edge_mass(g1, 1.0 / (4.0 * a)) < 1e-10 &&
                      edge_mass(g2, 1.0 / (4.0 * a)) < 1e-10;

  out.rel_err = out.rhs > 0.0 ? std::abs(out.lhs - out.rhs) / out.rhs
                              : std::abs(out.lhs - out.rhs);
  return out;
}

double quasilocality_check(const Field& f1, const Field& f2, const Field& f3,
                           const Field& f4, double s, int which, Space space,
                           const QuadratureRule& rule) {
  if (which < 0 || which > 3) throw std::invalid_argument("quasilocality_check: which in 0..3");
  const Field* fs[4] = {&f1, &f2, &f3, &f4};
  const double margin =
      2.0 * (space == Space::position ? f1.grid.dx() : f1.grid.dk());

  for (int i = 0; i < 4; ++i) {
    const SupportSpec spec = measure_support(*fs[i], space);
    if (spec.empty()) continue;
    if (i == which) {
      if (!(spec.min_abs() >= 3.0 * s + margin))
        throw std::invalid_argument("quasilocality_check: outer support too close to 3s");
    } else {
      if (!(spec.max_abs() <= s - margin))
        throw std::invalid_argument("quasilocality_check: inner support exceeds s");
    }
  }

  const complexd q = eval_Q4(f1, f2, f3, f4, rule);
  double prod = 1.0;
  for (const Field* f : fs) prod *= norm(*f);
  if (!(prod > 0.0)) return 0.0;
  return std::abs(q) / prod;
}

MultilinearResult multilinear_bound_check(const Field& f1, const Field& f2,
                                          const Field& f3, const Field& f4, int i,
                                          int j, Space space, const QuadratureRule& rule) {
  if (i < 0 || i > 3 || j < 0 || j > 3 || i == j)
    throw std::invalid_argument("multilinear_bound_check: need distinct indices in 0..3");
  const Field* fs[4] = {&f1, &f2, &f3, &f4};

  MultilinearResult out{};
  out.distance = dist(measure_support(*fs[i], space), measure_support(*fs[j], space));

  const double p1 = constants::P1_upper;
  double bound = p1;
  if (out.distance > 0.0) {
    const double plain = space == Space::position ? constants::multilinear_x
                                                  : constants::multilinear_k;
    const double refined = p1 * (space == Space::position ? constants::refined_x
                                                          : constants::refined_k);
    bound = std::min(bound, std::min(plain, refined) / std::sqrt(out.distance));
  }
  double prod = 1.0;
  for (const Field* f : fs) prod *= norm(*f);
  out.bound = bound * prod;
  out.value = std::abs(eval_Q4(f1, f2, f3, f4, rule));
  out.ok = out.value <= out.bound + 1e-8;
  return out;
}

}  // namespace dmlab
