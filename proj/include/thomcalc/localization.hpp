#pragma once

#include <random>
#include <vector>

#include "thomcalc/factored_rational.hpp"
#include "thomcalc/partitions.hpp"
#include "thomcalc/residue.hpp"

namespace thomcalc {

// Finite sum of factored rational terms, evaluatable at points.
struct LocalizationSum {
  std::vector<FactoredRational> terms;

  // Throws ZeroDenominator when the point hits a pole.
  Rational evaluate(const Assignment& point) const { return evaluate_sum(terms, point); }
  // Exact simplification; NotDivisible if the sum is not a polynomial.
  Polynomial simplify() const { return sum_to_polynomial(terms); }
};

// sum_i prod_j (theta_j - lambda_i) / prod_{s != i} (lambda_s - lambda_i)
LocalizationSum porteous_localization_sum(int n, int k);
// Same sum with every theta_j - lambda_i replaced by the form W[i][j];
// lambda_s - lambda_i is recovered as W[i][0] - W[s][0]. Rows must differ
// by a constant form across columns.
LocalizationSum porteous_sum_from_weights(const std::vector<std::vector<LinearForm>>& W);

// One term of the smooth d = 2, 3 fixed point formula: the theta-arguments
// are z_{pi_m}, the extra denominator is listed explicitly.
struct FixedPointTerm {
  AdmissibleSequence pi;
  std::vector<LinearForm> denominators;
};

// The fixed points of the orbit closure for d in {2, 3}, distinguished first.
std::vector<FixedPointTerm> fixed_point_terms(int d);

// Sum over injections s: {1..d} -> {1..n} and the terms above with
// z_l = lambda_{s(l)}, over prod_m prod_{i not in s(1..m)} (lambda_i - lambda_{s(m)}).
LocalizationSum fixed_point_sum(int d, int n, int k);

// Residue form of one term: Vandermonde * prod_m prod_j (theta_j - z_{pi_m})
// over the term's denominators and prod_l prod_i (lambda_i - z_l).
ResidueProblem residue_form_term(const FixedPointTerm& term, int n, int k);
// The numerator of residue_form_term as a list of factors.
std::vector<Polynomial> residue_form_numerator_factors(const FixedPointTerm& term, int k);
std::vector<LinearForm> residue_form_denominator(const FixedPointTerm& term, int n);

struct VanishingReport {
  int terms_checked = 0;
  int zero_terms = 0;
  int criterion_hits = 0;
  bool all_zero() const { return zero_terms == terms_checked; }
  bool criterion_everywhere() const { return criterion_hits == terms_checked; }
};

VanishingReport nondistinguished_vanishing_report(int d, int n, int k);
bool nondistinguished_vanishing(int d, int n, int k);

// Generic-degree criterion for a numerator given as a product of factors.
bool vanishing_criterion(const std::vector<Polynomial>& numerator_factors,
                         const std::vector<LinearForm>& factors, int l, int d);

// Compares the injection sum with the iterated residue at random distinct
// rational lambda; true iff they agree at every sample.
bool flag_residue_identity(const Polynomial& Q, int n, int d, std::mt19937_64& rng, int samples = 5);

struct Qhat5Derivation {
  Polynomial toric_part;  // quotient by z1 + z4 - z2 - z3
  LinearForm weight;      // weight of the defect-1 relation
  Polynomial result;
};
Qhat5Derivation qhat5_derivation_steps();
Polynomial qhat5_derivation();

// Random point with pairwise distinct lambda values.
Assignment random_lambda_theta_point(int n, int k, std::mt19937_64& rng);

}  // namespace thomcalc
