#pragma once

#include <vector>

#include "thomcalc/partitions.hpp"
#include "thomcalc/polynomial.hpp"

namespace thomcalc {

// Polynomial in hatted coordinates u^l_{m,r} with its common z-weight.
struct RelationPolynomial {
  Polynomial poly;
  LinearForm weight;
  bool toric = false;
  // The quadruple (i, j, m; l) the relation came from; zeros for stored ones.
  int i = 0, j = 0, m = 0, l = 0;
};

// Weight of u^l_{m,r} is z_m + z_r - z_l; of u^l_tau is z_tau - z_l.
LinearForm variable_weight(Variable v);
// Common weight of every monomial; InhomogeneousInput names two offenders.
LinearForm relation_weight(const Polynomial& poly);

std::vector<RelationPolynomial> basic_relations(int d);
// The extra quartic relation in degree 6 (stored, not derived).
RelationPolynomial d6_quartic_relation();

// Reference point: u^l_{m,r} = 1 iff m + r = l, else 0.
Rational eval_at_hat_reference(const Polynomial& poly);
// Reference point: u^l_tau = 1 iff sum(tau) = l, else 0.
Rational eval_at_reference(const Polynomial& poly);

// u^pi = prod_l u^l_{pi_l}
Polynomial u_monomial(const AdmissibleSequence& pi);
// Signed sum over (sigma, m) with rho.sigma U_m tau admissible.
Polynomial relz(const AdmissibleSequence& rho, const Partition& tau);
// Derivation actions of the raising operators on u-space polynomials.
Polynomial apply_nR(const Polynomial& p, int m);
Polynomial apply_nL(const Polynomial& p, int m);
// u^m_{rho U tau} - sum_{t + r = m, t >= sum rho, r >= sum tau} u^t_rho u^r_tau
Polynomial z_quadratic(const Partition& rho, const Partition& tau, int m);

}  // namespace thomcalc
