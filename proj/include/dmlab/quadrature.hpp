#pragma once

#include <vector>

namespace dmlab {

// Quadrature on [0,1] with unit total weight. Gauss-Legendre rules
// integrate polynomials up to degree 2m-1 exactly.
struct QuadratureRule {
  enum class Kind { gauss_legendre, custom };

  std::vector<double> nodes;    // in (0,1)
  std::vector<double> weights;  // positive, sum to 1
  Kind kind = Kind::custom;

  int size() const { return static_cast<int>(nodes.size()); }
};

QuadratureRule gauss_legendre(int m);

// Nodes/weights for \int_a^b g(t) dt, affinely mapped from `rule`.
void map_to_interval(const QuadratureRule& rule, double a, double b,
                     std::vector<double>& nodes, std::vector<double>& weights);

// Nodes/weights for \int_a^b g(t) t^p dt with p = -1, via Gauss-Legendre
// in log t; requires 0 < a < b.
void map_log_weighted(const QuadratureRule& rule, double a, double b,
                      std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace dmlab
