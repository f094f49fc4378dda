#pragma once

#include <cstddef>

#include "thomcalc/polynomial.hpp"
#include "thomcalc/thom.hpp"

namespace thomcalc {

struct PositivityReport {
  int d = 0;
  int order = 0;
  std::size_t terms = 0;
  Rational min_coeff = 0;
  Monomial witness;  // a z-monomial attaining min_coeff
  // Truncated expansion as a degree-0 Laurent polynomial in z_1..z_d.
  Polynomial expansion;
  bool nonnegative() const { return sgn(min_coeff) >= 0; }
};

// Order of a degree-0 z-monomial in the ratios x_i = z_i / z_{i+1}:
// sum over i < d of the partial exponent sums e_1 + ... + e_i.
int ratio_order(const Monomial& m, int d);

// Expands prod_{m<l}(z_m - z_l) * Qhat_d / prod(z_m + z_r - z_l) in
// |z_1| << ... << |z_d| through ratio order `order`.
PositivityReport positivity_expansion(int d, int order, const QhatRegistry& registry = QhatRegistry());

}  // namespace thomcalc
