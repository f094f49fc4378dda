#pragma once

#include <climits>
#include <map>
#include <set>
#include <vector>

#include "thomcalc/factored_rational.hpp"
#include "thomcalc/polynomial_io.hpp"

namespace thomcalc {

// Integrand numerator * prod(cofactors) * prod_l series[z_l] / prod(denominator)
// in the variables z_1..z_d (listed innermost first).
struct ResidueProblem {
  Polynomial numerator = Polynomial(1);
  // Extra numerator factors. They are multiplied in lazily, once the
  // expansion reaches their top variable, which keeps intermediate results
  // small when the numerator is a long product.
  std::vector<Polynomial> cofactors;
  std::vector<DenominatorFactor> denominator;
  std::map<Variable, Polynomial> series;
  std::vector<Variable> variables;

  static std::vector<Variable> z_range(int d);
  void validate() const;
};

struct TruncationPolicy {
  int base_order = 1;
  int validation_increment = 2;
};

// (-1)^d times the coefficient of z_1^{-1}...z_d^{-1} of the integrand
// expanded in |z_1| << ... << |z_d|, each 1/L truncated at the given order.
Polynomial iterated_residue_at_order(const ResidueProblem& problem, int order);

// Runs at base_order and base_order + increment; throws TruncationUnstable if
// they disagree.
Polynomial iterated_residue(const ResidueProblem& problem, const TruncationPolicy& policy);

// Heuristic base order: z-degree of the numerator and cofactors, plus the
// exponent spread of each series, plus the number of denominator copies,
// plus d. Always paired with the stability rerun.
int suggested_order(const ResidueProblem& problem);

// Residue at infinity of f dz for one variable, as minus the sum of the finite
// residues. f's denominator factors must be of degree <= 1 in z with
// distinct roots; poles at 0 come from negative powers of z in the numerator
// or from factors proportional to z.
FactoredRational residue_single_variable_exact(const FactoredRational& f, Variable z);

constexpr int kNegativeInfinity = INT_MIN;

// Degree after substituting t for the z-variables of S and 1 elsewhere,
// taken generically: the largest S-degree of a monomial of p.
// kNegativeInfinity for p == 0.
int deg_in_subset(const Polynomial& p, const std::set<int>& S);
// Generic S-degree of a product of linear forms: the number of factors that
// involve some z-variable of S.
int deg_in_subset(const std::vector<LinearForm>& factors, const std::set<int>& S);
// Number of factors whose top z-variable is z_m.
int lead_count(const std::vector<LinearForm>& factors, int m);
// Sufficient condition for the iterated residue of p / prod(factors) over
// z_1..z_d to vanish, tested at level l.
bool vanishing_criterion(const Polynomial& p, const std::vector<LinearForm>& factors, int l, int d);

json to_json(const ResidueProblem& problem);
ResidueProblem residue_problem_from_json(const json& j);

}  // namespace thomcalc
