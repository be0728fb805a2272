#pragma once

#include <string>
#include <vector>

#include "dmlab/functionals.hpp"
#include "dmlab/propagator.hpp"

namespace dmlab {

struct SolverConfig {
  double lambda = 1.0;        // target mass ||f||^2
  int max_iters = 2000;
  double tol_step = 1e-10;    // on ||f_{n+1} - f_n|| / sqrt(lambda)
  double tol_residual = 1e-8; // on ||omega f - Q(f,f,f)|| / ||f||
  complexd sigma0{0.0, -2.0}; // init width; Re filled from the optimal chirp
  double mixing = 1.0;        // theta in (0,1]

  static SolverConfig defaults(double lambda = 1.0);
  void validate() const;
};

struct IterationRecord {
  int iter;
  double q_value;
  double residual;
  double step_norm;
};

struct SolitonResult {
  Field field;
  double omega = 0.0;
  double q_value = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
  std::string failure_reason;
  std::vector<IterationRecord> trace;
};

// Normalized fixed-point iteration for omega f = Q(f,f,f) on the sphere
// ||f||^2 = lambda:
//   f_{n+1} = (1-theta) f_n + theta sqrt(lambda) g_n/||g_n||,
//   g_n = Q(f_n,f_n,f_n),
// with the iterate recentered (|f|^2 centroid pinned to x = 0) and
// phase-aligned before the step norm is taken. Q4 ascends along the
// iteration; any decrease beyond rounding aborts with a diagnostic.
SolitonResult solve_ground_state(const SolverConfig& cfg, const QuadratureRule& rule,
                                 const Grid& grid);

// ||omega f - Q(f,f,f)||_2 / ||f||_2; f must be nonzero.
double residual(const Field& f, double omega, const QuadratureRule& rule);

}  // namespace dmlab
