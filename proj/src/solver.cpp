#include "dmlab/solver.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "dmlab/bounds.hpp"

namespace dmlab {

SolverConfig SolverConfig::defaults(double lambda) {
  SolverConfig cfg;
  cfg.lambda = lambda;
  cfg.sigma0 = complexd{2.0 / optimize_delta().delta_star, -2.0};
  return cfg;
}

void SolverConfig::validate() const {
  if (!(lambda > 0.0)) throw std::invalid_argument("solver: lambda must be positive");
  if (!(tol_step > 0.0 && tol_residual > 0.0))
    throw std::invalid_argument("solver: tolerances must be positive");
  if (!(mixing > 0.0 && mixing <= 1.0))
    throw std::invalid_argument("solver: mixing must lie in (0,1]");
  if (!(sigma0.real() > 0.0))
    throw std::invalid_argument("solver: Re(sigma0) must be positive");
  if (max_iters < 0) throw std::invalid_argument("solver: max_iters must be >= 0");
}

namespace {

// pin the |f|^2 centroid to x = 0 (translation symmetry)
Field recenter(const Field& f) {
  std::vector<double> terms(f.n());
  double mass = 0.0;
  for (int j = 0; j < f.n(); ++j) {
    const double w = std::norm(f.values[j]);
    terms[j] = f.grid.x(j) * w;
    mass += w;
  }
  if (!(mass > 0.0)) return f;
  const double c = pairwise_sum(std::move(terms)) / mass;
  return translate(f, -c);
}

// remove the global phase relative to `ref` (gauge symmetry)
Field phase_align(const Field& f, const Field& ref) {
  const complexd c = inner(ref, f);
  const double a = std::abs(c);
  if (a < 1e-300) return f;
  return scale(f, std::conj(c) / a);
}

}  // namespace

SolitonResult solve_ground_state(const SolverConfig& cfg, const QuadratureRule& rule,
                                 const Grid& grid) {
  cfg.validate();
  const double sqrt_lambda = std::sqrt(cfg.lambda);

  Field f = gaussian_exact(ChirpedGaussian::normalized(cfg.sigma0, cfg.lambda), 0.0, grid);

  SolitonResult res;
  double prev_q = -std::numeric_limits<double>::infinity();

  for (int iter = 1; iter <= cfg.max_iters; ++iter) {
    const Field g = eval_Q3(f, f, f, rule);
    const double g_norm = norm(g);
    if (g_norm < 1e-14)
      throw std::runtime_error("solver: degenerate iterate, ||Q(f,f,f)|| below 1e-14");

    const double q = inner(f, g).real();  // = Q4(f,f,f,f) by the adjoint identity
    const double omega = q / cfg.lambda;
    const double res_norm = norm(sub(scale(f, omega), g)) / norm(f);

    // monitored ascent; failure here means the iteration left the
    // regime where the scheme is trustworthy
    if (q < prev_q - 1e-12 * std::max(1.0, std::abs(prev_q))) {
      res.field = f;
      res.omega = omega;
      res.q_value = q;
      res.residual = res_norm;
      res.iterations = iter;
      res.converged = false;
      res.failure_reason = "Q4 decreased along the iteration";
      return res;
    }
    prev_q = q;

    Field next = scale(g, complexd{sqrt_lambda / g_norm, 0.0});
    if (cfg.mixing < 1.0)
      next = add(scale(f, complexd{1.0 - cfg.mixing, 0.0}),
                 scale(next, complexd{cfg.mixing, 0.0}));
    next = recenter(next);
    next = phase_align(next, f);

    const double step = norm(sub(next, f));
    res.trace.push_back({iter, q, res_norm, step});

    if (step <= cfg.tol_step * sqrt_lambda && res_norm <= cfg.tol_residual) {
      res.field = f;
      res.omega = omega;
      res.q_value = q;
      res.residual = res_norm;
      res.iterations = iter;
      res.converged = true;
      return res;
    }
    f = next;
  }

  // non-convergence: report the final state with its trace
  const Field g = eval_Q3(f, f, f, rule);
  res.field = f;
  res.q_value = inner(f, g).real();
  res.omega = res.q_value / cfg.lambda;
  res.residual = norm(sub(scale(f, res.omega), g)) / norm(f);
  res.iterations = cfg.max_iters;
  res.converged = false;
  res.failure_reason = "no convergence within max_iters";
  return res;
}

double residual(const Field& f, double omega, const QuadratureRule& rule) {
  const double f_norm = norm(f);
  if (!(f_norm > 0.0)) throw std::invalid_argument("residual: field must be nonzero");
  const Field g = eval_Q3(f, f, f, rule);
  return norm(sub(scale(f, omega), g)) / f_norm;
}

}  // namespace dmlab
