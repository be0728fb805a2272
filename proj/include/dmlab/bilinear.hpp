#pragma once

#include <vector>

#include "dmlab/grid.hpp"
#include "dmlab/quadrature.hpp"

namespace dmlab {

// Union of disjoint closed intervals carrying where a field is
// numerically supported (in x or in k).
struct SupportSpec {
  struct Interval {
    double lo, hi;
  };
  std::vector<Interval> intervals;  // sorted, non-overlapping

  bool empty() const { return intervals.empty(); }
  double min_abs() const;  // distance of the union from the origin
  double max_abs() const;  // farthest point of the union
};

// Minimal gap between the two unions; 0 when they touch or overlap.
double dist(const SupportSpec& a, const SupportSpec& b);

// Samples above 1e-14 of the peak, merged into intervals. `space` picks
// which representation of f is measured.
SupportSpec measure_support(const Field& f, Space space, double rel_threshold = 1e-14);

// Smooth compactly supported bump (1 - u^2)^m on [a,b], u the rescaled
// coordinate; built on the position or frequency lattice and normalized.
// Frequency bumps are returned as position-space fields.
Field make_bump(const Grid& grid, double a, double b, Space space, int m = 8);

// (\int_a^b \int |T_t f1 T_t f2|^2 t^p dx dt)^{1/2} for p in {-1, 0};
// p = -1 uses log-mapped nodes and requires a > 0. `two_sided` doubles
// the square, valid for the even-in-|t| families used here (real
// profiles in x or in k). A window with a < 0 < b (p = 0 only) is split
// at the origin.
double bilinear_norm(const Field& f1, const Field& f2, double a, double b, int p,
                     const QuadratureRule& rule, bool two_sided = false);

struct DualityResult {
  double lhs;      // t^{-1}-weighted norm over (a,b)
  double rhs;      // sqrt(2) x plain norm of the inverse transforms over (1/4b, 1/4a)
  double rel_err;  // |lhs - rhs| / rhs
  bool wrap_guard_ok;
};

// Transform-duality identity of the bilinear norms under t = 1/(4 tau):
//   || T_t f1 T_t f2 ||_{(a,b), t^{-1}} = sqrt(2) || T_tau g1 T_tau g2 ||_{(1/4b,1/4a)}
// with g = inverse transform of f. Requires 0 < a < b.
DualityResult duality_check(const Field& f1, const Field& f2, double a, double b,
                            const QuadratureRule& rule);

// Normalized |Q4| for the separated geometry supp f_which inside
// {|.| > 3s}, all others inside {|.| <= s}; throws unless the measured
// supports satisfy the geometry with margin >= 2 dx (or 2 dk).
double quasilocality_check(const Field& f1, const Field& f2, const Field& f3,
                           const Field& f4, double s, int which, Space space,
                           const QuadratureRule& rule);

struct MultilinearResult {
  double value;     // |Q4(f1..f4)|
  double bound;     // min(P1_upper, c/sqrt(dist)) prod ||f_j||
  double distance;  // measured support separation of the chosen pair
  bool ok;
};

// Quadrilinear estimate for one separated pair (i, j), indices 0-based;
// zero measured separation falls back to the P1 bound alone.
MultilinearResult multilinear_bound_check(const Field& f1, const Field& f2,
                                          const Field& f3, const Field& f4, int i,
                                          int j, Space space, const QuadratureRule& rule);

}  // namespace dmlab
