#pragma once

#include <cstdint>
#include <vector>

#include "dmlab/grid.hpp"
#include "dmlab/propagator.hpp"

namespace dmlab {

// Sum of chirped Gaussians with frequency shifts and offsets:
//   sum_i A_i exp(-(x - x0_i)^2 / sigma_i) exp(i v_i x).
// The workhorse for seeded test fields; smooth and well localized in
// both representations for the parameter ranges used here.
struct GaussianMixture {
  struct Component {
    complexd amplitude;
    complexd sigma;  // Re > 0
    double center = 0.0;
    double velocity = 0.0;
  };
  std::vector<Component> components;

  Field sample(const Grid& grid) const;
  // sample normalized to ||f|| = target on the grid
  Field sample_normalized(const Grid& grid, double target = 1.0) const;
};

// Deterministic mixture for stream index `index` of the seed; one to
// three components with moderate widths, chirps and offsets.
GaussianMixture random_mixture(std::uint64_t seed, std::uint64_t index);

}  // namespace dmlab
