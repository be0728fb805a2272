#include "dmlab/propagator.hpp"

#include <cmath>
#include <stdexcept>

namespace dmlab {

ChirpedGaussian::ChirpedGaussian(complexd A0_, complexd sigma0_)
    : A0(A0_), sigma0(sigma0_) {
  if (!(sigma0.real() > 0.0))
    throw std::invalid_argument("chirped gaussian: Re(sigma0) must be positive");
}

double ChirpedGaussian::norm_sq_analytic() const {
  return std::norm(A0) * std::sqrt(M_PI * std::norm(sigma0) / (2.0 * sigma0.real()));
}

ChirpedGaussian ChirpedGaussian::normalized(complexd sigma0, double mass) {
  ChirpedGaussian p(complexd{1.0, 0.0}, sigma0);
  const double amp = std::sqrt(mass / p.norm_sq_analytic());
  p.A0 = complexd{amp, 0.0};
  return p;
}

Field evolve(const Field& f, double t) {
  Field fhat = fourier(f);
  for (int m = 0; m < fhat.n(); ++m) {
    const double k = fhat.grid.k(m);
    fhat.values[m] *= std::polar(1.0, -t * k * k);
  }
  return inverse_fourier(fhat);
}

Field gaussian_exact(const ChirpedGaussian& p, double t, const Grid& grid) {
  const complexd sigma_t = p.sigma0 + complexd{0.0, 4.0 * t};
  const complexd amp = p.A0 * std::sqrt(p.sigma0 / sigma_t);
  std::vector<complexd> v(grid.n);
  for (int j = 0; j < grid.n; ++j) {
    const double x = grid.x(j);
    v[j] = amp * std::exp(-x * x / sigma_t);
  }
  return Field(grid, Space::position, std::move(v));
}

Field translate(const Field& f, double a) {
  Field fhat = f.space == Space::frequency ? f : fourier(f);
  for (int m = 0; m < fhat.n(); ++m)
    fhat.values[m] *= std::polar(1.0, -fhat.grid.k(m) * a);
  return f.space == Space::frequency ? fhat : inverse_fourier(fhat);
}

double gaussian_extent(const ChirpedGaussian& p, double t, double eps) {
  const complexd sigma_t = p.sigma0 + complexd{0.0, 4.0 * t};
  // |exp(-x^2/sigma)| = exp(-x^2 Re(sigma)/|sigma|^2)
  const double decay = p.sigma0.real() / std::norm(sigma_t);
  return std::sqrt(std::log(1.0 / eps) / decay);
}

bool wraps(const ChirpedGaussian& p, double t, const Grid& grid) {
  return gaussian_extent(p, t) > grid.length / 4.0;
}

}  // namespace dmlab
