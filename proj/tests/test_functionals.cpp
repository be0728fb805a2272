#include <doctest.h>

#include <cmath>

#include "dmlab/bounds.hpp"
#include "dmlab/functionals.hpp"
#include "dmlab/propagator.hpp"
#include "dmlab/random_fields.hpp"
#include "oracles.hpp"

using namespace dmlab;

namespace {

const Grid kGrid(1024, 80.0);
const QuadratureRule kRule = gauss_legendre(32);

Field normalized_gaussian(complexd sigma0, const Grid& g = kGrid) {
  return gaussian_exact(ChirpedGaussian::normalized(sigma0), 0.0, g);
}

}  // namespace

TEST_CASE("Q4 matches the chirped-gaussian closed form") {
  for (complexd sigma0 : {complexd{1.0, 0.0}, complexd{2.0, 0.0}, complexd{1.0, 1.0},
                          complexd{0.6024, -2.0}}) {
    const Field f = normalized_gaussian(sigma0);
    const double q = eval_Q4(f, f, f, f, kRule).real();
    const double oracle =
        oracles::q4_gaussian(oracles::gaussian_amplitude(sigma0), sigma0);
    CAPTURE(sigma0.real());
    CAPTURE(sigma0.imag());
    CHECK(std::abs(q - oracle) <= 1e-6 * oracle);
  }

  // the sigma0 = 1 value in closed form: asinh(4)/(4 sqrt(pi))
  const Field f = normalized_gaussian(complexd{1.0, 0.0});
  const double q = eval_Q4(f, f, f, f, kRule).real();
  const double closed = std::asinh(4.0) / (4.0 * std::sqrt(M_PI));
  CHECK(std::abs(q - closed) <= 1e-8);
}

TEST_CASE("Q4 multilinearity, positivity and symmetry") {
  const Field f = normalized_gaussian(complexd{1.0, 0.5});
  const Field z = zero_field(kGrid);

  CHECK(std::abs(eval_Q4(z, f, f, f, kRule)) == 0.0);

  const complexd q = eval_Q4(f, f, f, f, kRule);
  CHECK(q.real() >= -1e-12);
  CHECK(std::abs(q.imag()) <= 1e-12 * std::abs(q));

  // translation/boost invariance of the diagonal value
  Field g = translate(f, 2.5);
  for (int j = 0; j < g.n(); ++j) g.values[j] *= std::polar(1.0, 1.7 * kGrid.x(j));
  const complexd q2 = eval_Q4(g, g, g, g, kRule);
  CHECK(std::abs(q2 - q) <= 1e-10 * std::abs(q));
}

TEST_CASE("Q4 upper bound and Hoelder factorization on random fields") {
  double worst_q = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Field f = random_mixture(2024, i).sample_normalized(kGrid);
    worst_q = std::max(worst_q, std::abs(eval_Q4(f, f, f, f, kRule)));
  }
  CHECK(worst_q <= constants::P1_upper + 1e-8);

  for (int i = 0; i < 10; ++i) {
    const Field f1 = random_mixture(31, 4 * i).sample_normalized(kGrid);
    const Field f2 = random_mixture(31, 4 * i + 1).sample_normalized(kGrid);
    const Field f3 = random_mixture(31, 4 * i + 2).sample_normalized(kGrid);
    const Field f4 = random_mixture(31, 4 * i + 3).sample_normalized(kGrid);
    const double lhs = std::abs(eval_Q4(f1, f2, f3, f4, kRule));
    const double rhs = std::pow(eval_Q4(f1, f1, f1, f1, kRule).real() *
                                    eval_Q4(f2, f2, f2, f2, kRule).real() *
                                    eval_Q4(f3, f3, f3, f3, kRule).real() *
                                    eval_Q4(f4, f4, f4, f4, kRule).real(),
                                0.25);
    CHECK(lhs <= rhs + 1e-8);
    CHECK(lhs <= constants::P1_upper + 1e-8);
  }
}

TEST_CASE("quadrature convergence: node doubling is inert") {
  const Field f = normalized_gaussian(complexd{1.0, -1.0});
  const double q32 = eval_Q4(f, f, f, f, gauss_legendre(32)).real();
  const double q64 = eval_Q4(f, f, f, f, gauss_legendre(64)).real();
  CHECK(std::abs(q32 - q64) <= 1e-10 * std::abs(q64));
}

TEST_CASE("Q3 is the adjoint of Q4") {
  for (int i = 0; i < 20; ++i) {
    const Field g = random_mixture(555, 2 * i).sample_normalized(kGrid);
    const Field f = random_mixture(555, 2 * i + 1).sample_normalized(kGrid);
    const complexd via_q3 = inner(g, eval_Q3(f, f, f, kRule));
    const complexd via_q4 = eval_Q4(g, f, f, f, kRule);
    CHECK(std::abs(via_q3 - via_q4) <= 1e-10);
  }

  const Field f = normalized_gaussian(complexd{1.0, 0.0});
  const Field z = zero_field(kGrid);
  CHECK(norm(eval_Q3(f, z, f, kRule)) == 0.0);
}

TEST_CASE("Q3 commutes with translations") {
  const Field f = normalized_gaussian(complexd{1.3, 0.4});
  const double a = 1.75;
  const Field lhs = eval_Q3(translate(f, a), translate(f, a), translate(f, a), kRule);
  const Field rhs = translate(eval_Q3(f, f, f, kRule), a);
  CHECK(norm(sub(lhs, rhs)) <= 1e-10);
}

TEST_CASE("R functional: weight, bound, closed form") {
  const Field f = normalized_gaussian(complexd{1.0, 0.0});

  const double r = eval_R(f, f, f, f, kRule).real();
  const double q = eval_Q4(f, f, f, f, kRule).real();
  CHECK(r <= q + 1e-12);

  CHECK(std::abs(eval_R(zero_field(kGrid), f, f, f, kRule)) == 0.0);

  const double oracle =
      oracles::r_gaussian(oracles::gaussian_amplitude(complexd{1.0, 0.0}), complexd{1.0, 0.0});
  CHECK(std::abs(r - oracle) <= 1e-6 * oracle);

  double worst = 0.0;
  for (int i = 0; i < 25; ++i) {
    const Field h = random_mixture(717, i).sample_normalized(kGrid);
    worst = std::max(worst, std::abs(eval_R(h, h, h, h, kRule)));
  }
  CHECK(worst <= constants::R_bound + 1e-8);
}

TEST_CASE("averaged hamiltonian") {
  const Field f = normalized_gaussian(complexd{1.0, 0.0});
  const double q = eval_Q4(f, f, f, f, kRule).real();

  CHECK(eval_H(f, 0.0, kRule) == doctest::Approx(-q / 4.0).epsilon(1e-12));
  CHECK(eval_H(zero_field(kGrid), 1.0, kRule) == 0.0);

  // kinetic term against a five-point finite-difference derivative
  const Grid fine(2048, 40.0);
  const Field ff = normalized_gaussian(complexd{1.0, 0.0}, fine);
  double fd = 0.0;
  const double dx = fine.dx();
  for (int j = 2; j < fine.n - 2; ++j) {
    const complexd d = (-ff.values[j + 2] + 8.0 * ff.values[j + 1] - 8.0 * ff.values[j - 1] +
                        ff.values[j - 2]) /
                       (12.0 * dx);
    fd += std::norm(d) * dx;
  }
  const double spectral = kinetic_energy(ff);
  CHECK(std::abs(spectral - fd) <= 1e-6 * spectral);
}

TEST_CASE("windowed functional") {
  const Field f = normalized_gaussian(complexd{1.0, 0.0});

  const complexd full = eval_Q4(f, f, f, f, kRule);
  const complexd win = eval_Q_windowed(f, f, f, f, 0.0, 1.0, 0, kRule);
  CHECK(std::abs(win - full) <= 1e-12 * std::abs(full));

  const complexd rw = eval_R(f, f, f, f, kRule);
  const complexd win1 = eval_Q_windowed(f, f, f, f, 0.0, 1.0, 1, kRule);
  CHECK(std::abs(win1 - rw) <= 1e-12 * std::abs(rw));

  CHECK_THROWS_AS(eval_Q_windowed(f, f, f, f, 0.0, 1.0, -1, kRule), std::invalid_argument);
  CHECK_THROWS_AS(eval_Q_windowed(f, f, f, f, 0.1, 1.0, 2, kRule), std::invalid_argument);

  // weighted-window value against the closed-form oracle
  const complexd wm1 = eval_Q_windowed(f, f, f, f, 0.25, 1.0, -1, gauss_legendre(48));
  const double oracle = oracles::q4_gaussian_windowed(
      oracles::gaussian_amplitude(complexd{1.0, 0.0}), complexd{1.0, 0.0}, 0.25, 1.0, -1);
  CHECK(std::abs(wm1.real() - oracle) <= 1e-8 * oracle);
  CHECK(std::abs(wm1.imag()) <= 1e-12);
}

TEST_CASE("windowed duality under t = 1/(4 tau)") {
  const QuadratureRule rule = gauss_legendre(48);
  const double a = 0.25, b = 1.0;

  SUBCASE("diagonal quadruple") {
    const Field f = normalized_gaussian(complexd{1.0, 0.0});
    const complexd lhs = eval_Q_windowed(f, f, f, f, a, b, -1, rule);
    const Field g = inverse_transform_field(f);
    const complexd rhs =
        2.0 * eval_Q_windowed(g, g, g, g, 1.0 / (4.0 * b), 1.0 / (4.0 * a), 0, rule);
    CHECK(std::abs(lhs - rhs) <= 1e-6 * std::abs(rhs));
  }

  SUBCASE("paired quadruple") {
    const Field f = normalized_gaussian(complexd{1.0, 0.0});
    const Field h = normalized_gaussian(complexd{2.0, 0.0});
    const complexd lhs = eval_Q_windowed(f, f, h, h, a, b, -1, rule);
    const Field fc = inverse_transform_field(f);
    const Field hc = inverse_transform_field(h);
    const complexd rhs =
        2.0 * eval_Q_windowed(fc, fc, hc, hc, 1.0 / (4.0 * b), 1.0 / (4.0 * a), 0, rule);
    CHECK(std::abs(lhs - rhs) <= 1e-6 * std::abs(rhs));
  }
}

TEST_CASE("grid mismatch is rejected") {
  const Field f = normalized_gaussian(complexd{1.0, 0.0});
  const Field other = normalized_gaussian(complexd{1.0, 0.0}, Grid(512, 40.0));
  CHECK_THROWS_AS(eval_Q4(f, f, f, other, kRule), std::invalid_argument);
  CHECK_THROWS_AS(eval_Q3(f, other, f, kRule), std::invalid_argument);
}
