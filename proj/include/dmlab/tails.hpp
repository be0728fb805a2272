#pragma once

#include <optional>
#include <vector>

#include "dmlab/grid.hpp"

namespace dmlab {

// Tail distributions alpha(s) = (\int_{|x|>=s} |f|^2 dx)^{1/2} and the
// frequency analogue beta(s), with normalized variants alpha/alpha(0)
// and beta/beta(0). alpha and beta are non-increasing and equal ||f||
// at s = 0.
struct TailProfile {
  std::vector<double> s;
  std::vector<double> alpha;
  std::vector<double> beta;
  std::vector<double> alpha_bar;
  std::vector<double> beta_bar;

  int size() const { return static_cast<int>(s.size()); }
};

// Default s grid: 0 followed by a geometric ladder of ratio 3^{1/8} from
// dx up to L/2, so that 3s is itself a grid point whenever 3s <= L/2.
std::vector<double> default_s_grid(const Grid& g);

// Profile of f on `s_grid` (default grid when empty). Samples with
// |x_j| >= s are included in the tail. Requires max(s_grid) <= L/2.
TailProfile tail_profile(const Field& f, std::vector<double> s_grid = {});

enum class TailSide { x, fourier };

struct SelfConsistencyReport {
  TailSide side;
  std::vector<double> s;        // tested s values (3s on the grid)
  std::vector<double> lhs;      // normalized tail at 3s
  std::vector<double> rhs;      // cubic + cross-term bound at s
  std::vector<double> margin;   // rhs - lhs
  double min_margin = 0.0;
  bool pass = false;
  bool advisory = false;        // input not certified as a soliton
};

// Ground-state self-consistency inequality on normalized tails:
//   a(3s) <= a(s)^3 + 3 min(1, c/sqrt(s)) (1 - a(s)) a(s)
// with c = 1 on the x side and c = 0.78 on the frequency side.
// `residual` gates the claim: above `residual_gate` the report is
// advisory. Comparisons are suspended below `floor` times the total mass.
SelfConsistencyReport selfconsistency_check(const TailProfile& p, TailSide side,
                                            double tol = 1e-4,
                                            std::optional<double> residual = std::nullopt,
                                            double residual_gate = 1e-6,
                                            double floor = 1e-12);

// Largest C with alpha(3s) <= C (alpha(s)^3 + alpha(0)^2 alpha(s)/sqrt(s))
// over the usable part of the profile (both sides above the floor).
double fit_raw_constant(const TailProfile& p, TailSide side, double floor = 1e-12);

// Smallest grid s0 with C (alpha(s0)^2 + alpha(0)^2/sqrt(s0)) <= 3^{-1/4}.
std::optional<double> choose_s0(const TailProfile& p, TailSide side, double C);

struct EnvelopeReport {
  double s0 = 0.0;
  double effective_from = 0.0;            // 9 s0
  std::vector<double> s;                  // grid points with s >= s0
  std::vector<double> envelope;           // alpha(s0) 3^{1/4} 3^{-(log3(s/3s0))^2/4}
  std::vector<double> alpha;
  std::vector<bool> ok;                   // alpha <= envelope (1+tol), or below floor
  bool pass = false;                      // all ok on [9 s0, L/2] above the floor
};

// Decay envelope seeded at s0; the bound is only effective from 9 s0 on.
EnvelopeReport decay_envelope(const TailProfile& p, double s0, double tol = 1e-9,
                              double floor = 1e-12);

struct PointwiseDecay {
  double value = 0.0;        // |f(s)|^2 + |f(-s)|^2
  double bound = 0.0;        // 2 ||f'|| alpha(s)
  bool ok = false;
  bool interpolated = false; // s fell off the lattice
};

// |f(s)|^2 + |f(-s)|^2 against the Cauchy-Schwarz tail bound; off-grid s
// is linearly interpolated and flagged.
PointwiseDecay pointwise_decay(const Field& f, double s);

}  // namespace dmlab
