#pragma once

#include <complex>
#include <vector>

#include "dmlab/util.hpp"

namespace dmlab {

// Uniform periodic grid on [-L/2, L/2) with the symmetric frequency
// lattice dk*{-n/2, ..., n/2-1}. n must be even and >= 16; powers of two
// give the fastest transforms.
struct Grid {
  int n = 0;
  double length = 0.0;

  Grid() = default;
  Grid(int n_, double length_);

  double dx() const { return length / n; }
  double dk() const { return 2.0 * M_PI / length; }
  double x(int j) const { return dx() * (j - n / 2); }
  double k(int m) const { return dk() * (m - n / 2); }

  bool operator==(const Grid& other) const = default;
};

// Grid whose frequency lattice coincides with this grid's spatial lattice;
// hosts inverse transforms viewed as functions of a spatial variable.
Grid dual_grid(const Grid& g);

enum class Space { position, frequency };

// Immutable complex samples on a Grid, in either representation.
// Position values are ordered by ascending x, frequency values by
// ascending k.
struct Field {
  Grid grid;
  Space space = Space::position;
  std::vector<complexd> values;

  Field() = default;
  Field(Grid g, Space s, std::vector<complexd> v);

  int n() const { return grid.n; }
};

Field zero_field(const Grid& g, Space s = Space::position);

// Continuum-normalized transform pair: fourier realizes
// (1/sqrt(2*pi)) \int exp(-i x k) f(x) dx on the lattice, and
// inverse_fourier its inverse. Both are unitary for the inner product
// below.
Field fourier(const Field& f);
Field inverse_fourier(const Field& g);

// <f,g> = dx * sum conj(f_j) g_j (position) or dk * sum (frequency);
// conjugate-linear in the first slot.
complexd inner(const Field& f, const Field& g);
double norm(const Field& f);
double norm_sq(const Field& f);

// Checked inverse transform of f viewed as a function: the samples of f
// are read as frequency samples on the dual grid, so the result lives in
// position space on dual_grid(f.grid).
Field inverse_transform_field(const Field& f);

Field conj_field(const Field& f);

Field scale(const Field& f, complexd c);
Field add(const Field& f, const Field& g);
Field sub(const Field& f, const Field& g);

}  // namespace dmlab
