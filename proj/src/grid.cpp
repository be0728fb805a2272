#include "dmlab/grid.hpp"

#include <cmath>
#include <stdexcept>

#include "dmlab/fft.hpp"

namespace dmlab {

Grid::Grid(int n_, double length_) : n(n_), length(length_) {
  if (n < 16 || n % 2 != 0) throw std::invalid_argument("grid: n must be even and >= 16");
  if (!(length > 0.0)) throw std::invalid_argument("grid: length must be positive");
}

Grid dual_grid(const Grid& g) { return Grid(g.n, 2.0 * M_PI * g.n / g.length); }

Field::Field(Grid g, Space s, std::vector<complexd> v)
    : grid(g), space(s), values(std::move(v)) {
  if (static_cast<int>(values.size()) != grid.n)
    throw std::invalid_argument("field: sample count does not match grid");
}

Field zero_field(const Grid& g, Space s) {
  return Field(g, s, std::vector<complexd>(g.n, complexd{0.0, 0.0}));
}

namespace {

// exp(-i x0 k0) with x0 = -L/2, k0 = -dk*n/2; x0*k0 = pi*n/2, so the
// phase is (-1)^(n/2) for even n.
double corner_phase(const Grid& g) { return (g.n / 2) % 2 == 0 ? 1.0 : -1.0; }

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Field fourier(const Field& f) {
  require(f.space == Space::position, "fourier: input must be in position space");
  const Grid& g = f.grid;
  const int n = g.n;

  // F_m = dx/sqrt(2 pi) * iota * (-1)^m * DFT[(-1)^j f_j]_m
  std::vector<complexd> tmp(n);
  for (int j = 0; j < n; ++j) tmp[j] = (j % 2 == 0 ? f.values[j] : -f.values[j]);
  std::vector<complexd> out = detail::dft_forward(tmp);
  const double base = g.dx() / std::sqrt(2.0 * M_PI) * corner_phase(g);
  for (int m = 0; m < n; ++m) out[m] *= (m % 2 == 0 ? base : -base);
  return Field(g, Space::frequency, std::move(out));
}

Field inverse_fourier(const Field& f) {
  require(f.space == Space::frequency, "inverse_fourier: input must be in frequency space");
  const Grid& g = f.grid;
  const int n = g.n;

  std::vector<complexd> tmp(n);
  for (int m = 0; m < n; ++m) tmp[m] = (m % 2 == 0 ? f.values[m] : -f.values[m]);
  std::vector<complexd> out = detail::dft_backward(tmp);
  const double base = g.dk() / std::sqrt(2.0 * M_PI) * corner_phase(g);
  for (int j = 0; j < n; ++j) out[j] *= (j % 2 == 0 ? base : -base);
  return Field(g, Space::position, std::move(out));
}

complexd inner(const Field& f, const Field& g) {
  require(f.grid == g.grid, "inner: grid mismatch");
  require(f.space == g.space, "inner: representation mismatch");
  std::vector<complexd> terms(f.n());
  for (int j = 0; j < f.n(); ++j) terms[j] = std::conj(f.values[j]) * g.values[j];
  const double w = f.space == Space::position ? f.grid.dx() : f.grid.dk();
  return w * pairwise_sum(std::move(terms));
}

double norm_sq(const Field& f) {
  std::vector<double> terms(f.n());
  for (int j = 0; j < f.n(); ++j) terms[j] = std::norm(f.values[j]);
  const double w = f.space == Space::position ? f.grid.dx() : f.grid.dk();
  return w * pairwise_sum(std::move(terms));
}

double norm(const Field& f) { return std::sqrt(norm_sq(f)); }

Field inverse_transform_field(const Field& f) {
  require(f.space == Space::position, "inverse_transform_field: input must be in position space");
  Field as_freq(dual_grid(f.grid), Space::frequency, f.values);
  return inverse_fourier(as_freq);
}

Field conj_field(const Field& f) {
  std::vector<complexd> v(f.values);
  for (auto& z : v) z = std::conj(z);
  return Field(f.grid, f.space, std::move(v));
}

Field scale(const Field& f, complexd c) {
  std::vector<complexd> v(f.values);
  for (auto& z : v) z *= c;
  return Field(f.grid, f.space, std::move(v));
}

Field add(const Field& f, const Field& g) {
  require(f.grid == g.grid && f.space == g.space, "add: field mismatch");
  std::vector<complexd> v(f.values);
  for (int j = 0; j < f.n(); ++j) v[j] += g.values[j];
  return Field(f.grid, f.space, std::move(v));
}

Field sub(const Field& f, const Field& g) {
  require(f.grid == g.grid && f.space == g.space, "sub: field mismatch");
  std::vector<complexd> v(f.values);
  for (int j = 0; j < f.n(); ++j) v[j] -= g.values[j];
  return Field(f.grid, f.space, std::move(v));
}

}  // namespace dmlab
