#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "dmlab/grid.hpp"
#include "dmlab/quadrature.hpp"

namespace dmlab {

// Analytic constants of the quartic/sextic space-time estimates.
namespace constants {

// sharp one-dimensional Strichartz constant, 12^{-1/12}
inline const double S1 = std::pow(12.0, -1.0 / 12.0);
// upper bound on P1 = sup Q4 over the unit sphere, S1^3 = 12^{-1/4}
inline const double P1_upper = std::pow(12.0, -0.25);
// bound on the t-weighted functional, 12^{-1/4}/sqrt(3)
inline const double R_bound = P1_upper / std::sqrt(3.0);
// certified lower-bound value 1.05/sqrt(2 pi)
inline const double P1_lower_factor = 1.05 / std::sqrt(2.0 * M_PI);
// quadrilinear prefactors for separated supports, 2^{-1/4} 3^{-3/8}
// (position pair) and 2^{-3/4} 3^{-1/8} (frequency pair)
inline const double multilinear_x = std::pow(2.0, -0.25) * std::pow(3.0, -0.375);
inline const double multilinear_k = std::pow(2.0, -0.75) * std::pow(3.0, -0.125);
// refinement factors valid relative to P1 itself
inline const double refined_x = 1.33;
inline const double refined_k = 1.1;

}  // namespace constants

// Certified lower bound on P1 from the width-delta Gaussian family:
// asinh(delta) / sqrt(2 pi delta). Requires delta > 0.
double gaussian_lower_bound(double delta);

struct DeltaOptimum {
  double delta_star;
  double value;
};

// Golden-section maximization of gaussian_lower_bound on [0.1, 100]
// to 1e-8; the optimum sits near delta = 3.32.
DeltaOptimum optimize_delta();

struct StrichartzResult {
  double lhs;         // truncated \int \int |T_t f|^6 dx dt
  double rhs;         // 12^{-1/2} ||f||^6
  double tail_bound;  // dispersive bound on the truncated mass
  bool resolved;      // spectral tail below 1e-10 of peak
  bool ok;            // lhs <= rhs + 1e-6
};

// Sextic space-time integral over |t| <= t_extent against the sharp
// bound. The t-integral uses `rule` on [0,1] plus a log-mapped copy on
// [1, t_extent], both sides of t = 0 evaluated explicitly. The truncated
// mass is bounded by 2 ||f||_1^4 ||f||_2^2 / (16 pi^2 t_extent).
StrichartzResult strichartz_check(const Field& f, double t_extent,
                                  const QuadratureRule& rule);

struct P1Estimate {
  double max_q;
  std::string argmax;  // description of the best sample
};

// Largest Q4(f,f,f,f) over `samples` seeded random normalized fields
// plus a mandatory seed set containing the optimally chirped Gaussian.
P1Estimate p1_estimate_random(int samples, std::uint64_t seed, const Grid& grid,
                              const QuadratureRule& rule);

}  // namespace dmlab
