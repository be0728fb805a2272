#include "dmlab/functionals.hpp"

#include <cmath>
#include <stdexcept>

#include "dmlab/fft.hpp"

namespace dmlab {

namespace detail {

namespace {

void check_position_common_grid(const std::vector<const Field*>& fs) {
  for (const Field* f : fs) {
    if (f->space != Space::position)
      throw std::invalid_argument("functionals: fields must be in position space");
    if (!(f->grid == fs[0]->grid))
      throw std::invalid_argument("functionals: grid mismatch");
  }
}

}  // namespace

PaddedSet::PaddedSet(const std::vector<const Field*>& fields) {
  check_position_common_grid(fields);
  base_ = fields[0]->grid;
  padded_ = Grid(2 * base_.n, base_.length);
  spectra_.reserve(fields.size());
  for (const Field* f : fields) {
    Field fhat = fourier(*f);
    std::vector<complexd> padded(padded_.n, complexd{0.0, 0.0});
    // base mode m sits at padded index m + n/2 (same k value)
    for (int m = 0; m < base_.n; ++m) padded[m + base_.n / 2] = fhat.values[m];
    spectra_.push_back(std::move(padded));
  }
}

std::vector<complexd> PaddedSet::evolved(std::size_t i, double t) const {
  std::vector<complexd> spec(spectra_[i]);
  for (int m = 0; m < padded_.n; ++m) {
    const double k = padded_.k(m);
    spec[m] *= std::polar(1.0, -t * k * k);
  }
  Field u = inverse_fourier(Field(padded_, Space::frequency, std::move(spec)));
  return std::move(u.values);
}

}  // namespace detail

namespace {

// Q4-style weighted sum over given time nodes.
complexd quartic_sum(const Field& f1, const Field& f2, const Field& f3,
                     const Field& f4, const std::vector<double>& nodes,
                     const std::vector<double>& weights) {
  detail::PaddedSet set({&f1, &f2, &f3, &f4});
  const Grid& pg = set.padded_grid();
  const double dxp = pg.dx();

  std::vector<complexd> contrib(nodes.size());
  parallel_for(nodes.size(), [&](std::size_t i) {
    const double t = nodes[i];
    const auto u1 = set.evolved(0, t);
    const auto u2 = set.evolved(1, t);
    const auto u3 = set.evolved(2, t);
    const auto u4 = set.evolved(3, t);
    std::vector<complexd> terms(pg.n);
    for (int j = 0; j < pg.n; ++j)
      terms[j] = std::conj(u1[j]) * u2[j] * std::conj(u3[j]) * u4[j];
    contrib[i] = weights[i] * dxp * pairwise_sum(std::move(terms));
  });
  return pairwise_sum(std::move(contrib));
}

}  // namespace

complexd eval_Q4(const Field& f1, const Field& f2, const Field& f3,
                 const Field& f4, const QuadratureRule& rule) {
  return quartic_sum(f1, f2, f3, f4, rule.nodes, rule.weights);
}

complexd eval_R(const Field& f1, const Field& f2, const Field& f3,
                const Field& f4, const QuadratureRule& rule) {
  std::vector<double> w(rule.weights);
  for (int i = 0; i < rule.size(); ++i) w[i] *= rule.nodes[i];
  return quartic_sum(f1, f2, f3, f4, rule.nodes, w);
}

complexd eval_Q_windowed(const Field& f1, const Field& f2, const Field& f3,
                         const Field& f4, double a, double b, int p,
                         const QuadratureRule& rule) {
  if (p != -1 && p != 0 && p != 1)
    throw std::invalid_argument("eval_Q_windowed: p must be -1, 0 or 1");
  std::vector<double> nodes, weights;
  if (p == -1) {
    if (!(a > 0.0)) throw std::invalid_argument("eval_Q_windowed: p = -1 needs a > 0");
    map_log_weighted(rule, a, b, nodes, weights);
  } else {
    map_to_interval(rule, a, b, nodes, weights);
    if (p == 1)
      for (std::size_t i = 0; i < nodes.size(); ++i) weights[i] *= nodes[i];
  }
  return quartic_sum(f1, f2, f3, f4, nodes, weights);
}

Field eval_Q3(const Field& f1, const Field& f2, const Field& f3,
              const QuadratureRule& rule) {
  detail::PaddedSet set({&f1, &f2, &f3});
  const Grid& pg = set.padded_grid();
  const Grid& bg = f1.grid;
  const int n = bg.n;

  std::vector<std::vector<complexd>> contrib(rule.size());
  parallel_for(rule.size(), [&](std::size_t i) {
    const double t = rule.nodes[i];
    const auto u1 = set.evolved(0, t);
    const auto u2 = set.evolved(1, t);
    const auto u3 = set.evolved(2, t);
    std::vector<complexd> prod(pg.n);
    for (int j = 0; j < pg.n; ++j) prod[j] = u1[j] * std::conj(u2[j]) * u3[j];
    Field phat = fourier(Field(pg, Space::position, std::move(prod)));
    // dealias: keep only the base lattice, then apply T_{-t}
    std::vector<complexd> node(n);
    for (int m = 0; m < n; ++m) {
      const double k = bg.k(m);
      node[m] = rule.weights[i] * phat.values[m + n / 2] * std::polar(1.0, t * k * k);
    }
    contrib[i] = std::move(node);
  });

  std::vector<complexd> spec = pairwise_sum_vectors(std::move(contrib));
  return inverse_fourier(Field(bg, Space::frequency, std::move(spec)));
}

double kinetic_energy(const Field& f) {
  Field fhat = f.space == Space::frequency ? f : fourier(f);
  std::vector<double> terms(fhat.n());
  for (int m = 0; m < fhat.n(); ++m) {
    const double k = fhat.grid.k(m);
    terms[m] = k * k * std::norm(fhat.values[m]);
  }
  return fhat.grid.dk() * pairwise_sum(std::move(terms));
}

double eval_H(const Field& f, double d_av, const QuadratureRule& rule) {
  return 0.5 * d_av * kinetic_energy(f) - 0.25 * eval_Q4(f, f, f, f, rule).real();
}

double spectral_tail_ratio(const Field& f) {
  Field fhat = f.space == Space::frequency ? f : fourier(f);
  const int n = fhat.n();
  const int band = n / 20;  // outer 5% on each side
  double peak = 0.0, tail = 0.0;
  for (int m = 0; m < n; ++m) {
    const double a = std::abs(fhat.values[m]);
    peak = std::max(peak, a);
    if (m < band || m >= n - band) tail = std::max(tail, a);
  }
  return peak > 0.0 ? tail / peak : 0.0;
}

}  // namespace dmlab
