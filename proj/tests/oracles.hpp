#pragma once

// Test-only oracles, independent of the library's quadrature and FFT
// paths: adaptive Simpson integration plus closed forms for the chirped
// Gaussian family.

#include <cmath>
#include <complex>
#include <functional>

namespace oracles {

inline double simpson_slice(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a,
                                   double b, double fa, double fm, double fb,
                                   double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson_slice(a, m, fa, flm, fm);
  const double right = simpson_slice(m, b, fm, frm, fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  return adaptive_simpson_rec(f, a, b, fa, fm, fb, simpson_slice(a, b, fa, fm, fb), tol,
                              48);
}

// |sigma(t)| for sigma(t) = sigma0 + 4it
inline double abs_sigma(std::complex<double> sigma0, double t) {
  return std::abs(sigma0 + std::complex<double>{0.0, 4.0 * t});
}

// \int_0^1 \int |T_t f|^4 dx dt for f = A0 exp(-x^2/sigma0):
//   |A0|^4 |sigma0|^2 sqrt(pi/(4 Re sigma0)) \int_0^1 dt/|sigma(t)|
inline double q4_gaussian(std::complex<double> A0, std::complex<double> sigma0) {
  const double pre = std::pow(std::abs(A0), 4.0) * std::norm(sigma0) *
                     std::sqrt(M_PI / (4.0 * sigma0.real()));
  return pre * integrate([&](double t) { return 1.0 / abs_sigma(sigma0, t); }, 0.0, 1.0);
}

// same with the weight t dt
inline double r_gaussian(std::complex<double> A0, std::complex<double> sigma0) {
  const double pre = std::pow(std::abs(A0), 4.0) * std::norm(sigma0) *
                     std::sqrt(M_PI / (4.0 * sigma0.real()));
  return pre * integrate([&](double t) { return t / abs_sigma(sigma0, t); }, 0.0, 1.0);
}

// windowed, weight t^p on [a,b]
inline double q4_gaussian_windowed(std::complex<double> A0, std::complex<double> sigma0,
                                   double a, double b, int p) {
  const double pre = std::pow(std::abs(A0), 4.0) * std::norm(sigma0) *
                     std::sqrt(M_PI / (4.0 * sigma0.real()));
  return pre * integrate(
                   [&](double t) { return std::pow(t, p) / abs_sigma(sigma0, t); }, a, b);
}

// \int |T_t f|^6 dx for the same family:
//   |A0|^6 |sigma0|^3 sqrt(pi/(6 Re sigma0)) / |sigma(t)|^2
inline double sextic_slice_gaussian(std::complex<double> A0, std::complex<double> sigma0,
                                    double t) {
  const double s = abs_sigma(sigma0, t);
  return std::pow(std::abs(A0), 6.0) * std::pow(std::abs(sigma0), 3.0) *
         std::sqrt(M_PI / (6.0 * sigma0.real())) / (s * s);
}

// normalization giving ||f||^2 = mass
inline std::complex<double> gaussian_amplitude(std::complex<double> sigma0,
                                               double mass = 1.0) {
  const double n2 = std::sqrt(M_PI * std::norm(sigma0) / (2.0 * sigma0.real()));
  return {std::sqrt(mass / n2), 0.0};
}

}  // namespace oracles
