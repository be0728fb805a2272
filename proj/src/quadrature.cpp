#include "dmlab/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace dmlab {

// Newton iteration on P_m, nodes of the [-1,1] rule mapped to [0,1].
QuadratureRule gauss_legendre(int m) {
  if (m < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  QuadratureRule rule;
  rule.kind = QuadratureRule::Kind::gauss_legendre;
  rule.nodes.resize(m);
  rule.weights.resize(m);

  const int half = (m + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (m + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < m; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = m * (z * p0 - p1) / (z * z - 1.0);
      double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    // [-1,1] -> [0,1]: half the nodes by symmetry, weights halved.
    const double w = 1.0 / ((1.0 - z * z) * pp * pp);
    rule.nodes[i] = 0.5 * (1.0 - z);
    rule.nodes[m - 1 - i] = 0.5 * (1.0 + z);
    rule.weights[i] = w;
    rule.weights[m - 1 - i] = w;
  }
  return rule;
}

void map_to_interval(const QuadratureRule& rule, double a, double b,
                     std::vector<double>& nodes, std::vector<double>& weights) {
  if (!(b > a)) throw std::invalid_argument("map_to_interval: need a < b");
  const double len = b - a;
  nodes.resize(rule.size());
  weights.resize(rule.size());
  for (int i = 0; i < rule.size(); ++i) {
    nodes[i] = a + len * rule.nodes[i];
    weights[i] = len * rule.weights[i];
  }
}

void map_log_weighted(const QuadratureRule& rule, double a, double b,
                      std::vector<double>& nodes, std::vector<double>& weights) {
  if (!(a > 0.0 && b > a))
    throw std::invalid_argument("map_log_weighted: need 0 < a < b");
  const double la = std::log(a), lb = std::log(b);
  nodes.resize(rule.size());
  weights.resize(rule.size());
  for (int i = 0; i < rule.size(); ++i) {
    const double u = la + (lb - la) * rule.nodes[i];
    nodes[i] = std::exp(u);
    weights[i] = (lb - la) * rule.weights[i];  // absorbs the 1/t factor
  }
}

}  // namespace dmlab
