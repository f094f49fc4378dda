#pragma once

#include <utility>
#include <vector>

#include "thomcalc/linear_form.hpp"
#include "thomcalc/polynomial.hpp"

namespace thomcalc {

struct DenominatorFactor {
  LinearForm form;
  int multiplicity = 1;
};

// numerator / prod(form^multiplicity)
struct FactoredRational {
  Polynomial numerator;
  std::vector<DenominatorFactor> denominator;

  // Throws ZeroDenominator if a factor vanishes at the point.
  Rational evaluate(const Assignment& values) const;
  // Exact value when the quotient is a polynomial; NotDivisible otherwise.
  Polynomial to_polynomial() const;
  // Normalizes every factor (first coefficient 1), folds constant factors
  // and scales into the numerator and merges repeated forms.
  FactoredRational normalized() const;
};

// Sum over a common denominator with all cancellable factors removed.
FactoredRational sum_factored(const std::vector<FactoredRational>& terms);
// Sum that must simplify to a polynomial; NotDivisible otherwise.
Polynomial sum_to_polynomial(const std::vector<FactoredRational>& terms);
Rational evaluate_sum(const std::vector<FactoredRational>& terms, const Assignment& values);

}  // namespace thomcalc
