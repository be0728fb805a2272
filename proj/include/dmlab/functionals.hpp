#pragma once

#include "dmlab/grid.hpp"
#include "dmlab/quadrature.hpp"

namespace dmlab {

// Averaged quartic functional
//   Q4(f1,f2,f3,f4) = \int_0^1 \int conj(T_r f1) T_r f2 conj(T_r f3) T_r f4 dx dr,
// r-integral by `rule`. Pointwise products are formed on a 2x
// frequency-padded grid so the quartic product does not alias.
complexd eval_Q4(const Field& f1, const Field& f2, const Field& f3,
                 const Field& f4, const QuadratureRule& rule);

// Cubic map Q(f1,f2,f3) = \int_0^1 T_{-r}[ T_r f1 conj(T_r f2) T_r f3 ] dr,
// adjoint to Q4: <g, Q(f1,f2,f3)> = Q4(g,f1,f2,f3). The padded product is
// truncated back to the base lattice before the inverse evolution.
Field eval_Q3(const Field& f1, const Field& f2, const Field& f3,
              const QuadratureRule& rule);

// Q4 with the measure t dx dt.
complexd eval_R(const Field& f1, const Field& f2, const Field& f3,
                const Field& f4, const QuadratureRule& rule);

// Averaged Hamiltonian (d_av/2) \int |f'|^2 - (1/4) Re Q4(f,f,f,f),
// kinetic term evaluated spectrally.
double eval_H(const Field& f, double d_av, const QuadratureRule& rule);

// \int |f'|^2 dx = dk * sum k^2 |fhat(k)|^2.
double kinetic_energy(const Field& f);

// Window-weighted functional: \int_a^b \int (alternating-conjugate product)
// t^p dx dt for p in {-1, 0, 1}. p = -1 requires 0 < a and uses
// Gauss-Legendre in log t.
complexd eval_Q_windowed(const Field& f1, const Field& f2, const Field& f3,
                         const Field& f4, double a, double b, int p,
                         const QuadratureRule& rule);

// max |fhat| over the outer 10% of the lattice relative to the peak;
// resolved fields keep this below 1e-10.
double spectral_tail_ratio(const Field& f);

namespace detail {

// Spectra of position fields embedded in the 2x lattice, evolved and
// brought back to position space on the padded grid per time node.
class PaddedSet {
 public:
  PaddedSet(const std::vector<const Field*>& fields);

  const Grid& padded_grid() const { return padded_; }
  // T_t of field i sampled on the padded grid.
  std::vector<complexd> evolved(std::size_t i, double t) const;

 private:
  Grid base_;
  Grid padded_;
  std::vector<std::vector<complexd>> spectra_;  // on the padded lattice
};

}  // namespace detail

}  // namespace dmlab
