#include "dmlab/random_fields.hpp"

#include <cmath>
#include <stdexcept>

namespace dmlab {

Field GaussianMixture::sample(const Grid& grid) const {
  std::vector<complexd> v(grid.n, complexd{0.0, 0.0});
  for (const auto& c : components) {
    if (!(c.sigma.real() > 0.0))
      throw std::invalid_argument("mixture: Re(sigma) must be positive");
    for (int j = 0; j < grid.n; ++j) {
      const double x = grid.x(j) - c.center;
      v[j] += c.amplitude * std::exp(-x * x / c.sigma) *
              std::polar(1.0, c.velocity * grid.x(j));
    }
  }
  return Field(grid, Space::position, std::move(v));
}

Field GaussianMixture::sample_normalized(const Grid& grid, double target) const {
  Field f = sample(grid);
  const double nrm = norm(f);
  if (!(nrm > 0.0)) throw std::invalid_argument("mixture: zero field");
  return scale(f, complexd{target / nrm, 0.0});
}

GaussianMixture random_mixture(std::uint64_t seed, std::uint64_t index) {
  // per-sample generator from a splitmix stream, reproducible and
  // independent of evaluation order
  SplitMix64 stream(seed);
  std::uint64_t sample_seed = 0;
  for (std::uint64_t i = 0; i <= index; ++i) sample_seed = stream.next();
  SplitMix64 rng(sample_seed);

  GaussianMixture mix;
  const int count = 1 + static_cast<int>(rng.next() % 3);
  for (int i = 0; i < count; ++i) {
    GaussianMixture::Component c;
    c.amplitude = std::polar(rng.uniform(0.3, 1.0), rng.uniform(0.0, 2.0 * M_PI));
    c.sigma = complexd{rng.uniform(0.6, 3.0), rng.uniform(-3.0, 3.0)};
    c.center = rng.uniform(-3.0, 3.0);
    c.velocity = rng.uniform(-3.0, 3.0);
    mix.components.push_back(c);
  }
  return mix;
}

}  // namespace dmlab
