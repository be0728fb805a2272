#pragma once

#include "dmlab/grid.hpp"

namespace dmlab {

// Gaussian profile A0 * exp(-x^2/sigma0) with Re(sigma0) > 0. Its free
// evolution stays in the family: sigma(t) = sigma0 + 4it and
// A(t) = A0 sqrt(sigma0)/sqrt(sigma(t)).
struct ChirpedGaussian {
  complexd A0{1.0, 0.0};
  complexd sigma0{1.0, 0.0};

  ChirpedGaussian() = default;
  ChirpedGaussian(complexd A0_, complexd sigma0_);

  // ||f||^2 = |A0|^2 sqrt(pi |sigma0|^2 / (2 Re sigma0))
  double norm_sq_analytic() const;

  // Amplitude that gives ||f||^2 = mass, with the phase of A0 kept at 0.
  static ChirpedGaussian normalized(complexd sigma0, double mass = 1.0);
};

// Free evolution exp(i t d^2/dx^2): frequency multiplier exp(-i t k^2).
// Unitary for every real t; negative t inverts.
Field evolve(const Field& f, double t);

// Samples A(t) exp(-x^2/sigma(t)). The path sigma(t) stays in the right
// half-plane, so the principal square root is the continuous branch.
Field gaussian_exact(const ChirpedGaussian& p, double t, const Grid& grid);

// f(x - a) via the spectral phase exp(-i k a).
Field translate(const Field& f, double a);

// Half-width where the evolved profile falls to eps times its peak.
double gaussian_extent(const ChirpedGaussian& p, double t, double eps = 1e-12);

// True when the evolved profile no longer fits in |x| < L/4 and the
// periodic evaluation starts to wrap.
bool wraps(const ChirpedGaussian& p, double t, const Grid& grid);

}  // namespace dmlab
