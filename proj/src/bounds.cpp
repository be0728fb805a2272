#include "dmlab/bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dmlab/functionals.hpp"
#include "dmlab/random_fields.hpp"

namespace dmlab {

double gaussian_lower_bound(double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("gaussian_lower_bound: delta must be positive");
  return std::asinh(delta) / std::sqrt(2.0 * M_PI * delta);
}

DeltaOptimum optimize_delta() {
  double a = 0.1, b = 100.0;
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = gaussian_lower_bound(c);
  double fd = gaussian_lower_bound(d);
  while (b - a > 1e-8) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = gaussian_lower_bound(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = gaussian_lower_bound(d);
    }
  }
  const double delta = 0.5 * (a + b);
  return {delta, gaussian_lower_bound(delta)};
}

namespace {

double sextic_integral_at(const detail::PaddedSet& set, double t) {
  const auto u = set.evolved(0, t);
  std::vector<double> terms(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    const double a2 = std::norm(u[j]);
    terms[j] = a2 * a2 * a2;
  }
  return set.padded_grid().dx() * pairwise_sum(std::move(terms));
}

}  // namespace

StrichartzResult strichartz_check(const Field& f, double t_extent,
                                  const QuadratureRule& rule) {
  if (!(t_extent > 1.0)) throw std::invalid_argument("strichartz_check: t_extent must exceed 1");

  StrichartzResult res{};
  res.resolved = spectral_tail_ratio(f) <= 1e-10;

  detail::PaddedSet set({&f});

  // |t| in [0,1] linearly, [1, t_extent] in log t; both signs of t.
  std::vector<double> nodes, weights, ln, lw;
  map_to_interval(rule, 0.0, 1.0, nodes, weights);
  map_log_weighted(rule, 1.0, t_extent, ln, lw);
  for (std::size_t i = 0; i < ln.size(); ++i) {
    nodes.push_back(ln[i]);
    weights.push_back(lw[i] * ln[i]);  // log rule absorbs 1/t; undo for dt
  }

  std::vector<double> contrib(nodes.size());
  parallel_for(nodes.size(), [&](std::size_t i) {
    contrib[i] = weights[i] *
                 (sextic_integral_at(set, nodes[i]) + sextic_integral_at(set, -nodes[i]));
  });
  res.lhs = pairwise_sum(std::move(contrib));

  const double n2 = norm_sq(f);
  res.rhs = std::pow(constants::S1, 6.0) * n2 * n2 * n2;

  // |T_t f|_inf <= (4 pi |t|)^{-1/2} ||f||_1 bounds the sextic integrand
  // by ||f||_1^4 ||f||_2^2 / (4 pi t)^2; integrating both tails gives
  // 2 ||f||_1^4 ||f||_2^2 / (16 pi^2 T).
  std::vector<double> l1terms(f.n());
  for (int j = 0; j < f.n(); ++j) l1terms[j] = std::abs(f.values[j]);
  const double l1 = f.grid.dx() * pairwise_sum(std::move(l1terms));
  res.tail_bound = 2.0 * std::pow(l1, 4.0) * n2 / (16.0 * M_PI * M_PI * t_extent);

  res.ok = res.lhs <= res.rhs + 1e-6;
  return res;
}

P1Estimate p1_estimate_random(int samples, std::uint64_t seed, const Grid& grid,
                              const QuadratureRule& rule) {
  P1Estimate best{-1.0, ""};
  auto consider = [&](const Field& f, const std::string& desc) {
    const double q = eval_Q4(f, f, f, f, rule).real();
    if (q > best.max_q) {
      best.max_q = q;
      best.argmax = desc;
    }
  };

  // mandatory seeds: the optimally chirped Gaussian and a plain one
  const DeltaOptimum opt = optimize_delta();
  const complexd sigma_star{2.0 / opt.delta_star, -2.0};
  consider(gaussian_exact(ChirpedGaussian::normalized(sigma_star), 0.0, grid),
           "chirped gaussian, optimal width");
  consider(gaussian_exact(ChirpedGaussian::normalized(complexd{1.0, 0.0}), 0.0, grid),
           "gaussian, sigma = 1");

  for (int i = 0; i < samples; ++i) {
    const GaussianMixture mix = random_mixture(seed, static_cast<std::uint64_t>(i));
    std::ostringstream desc;
    desc << "mixture sample " << i << " (" << mix.components.size() << " components)";
    consider(mix.sample_normalized(grid), desc.str());
  }
  return best;
}

}  // namespace dmlab
