#pragma once

#include <vector>

#include "thomcalc/linear_form.hpp"
#include "thomcalc/polynomial.hpp"

namespace thomcalc {

// Exact quotient p / q under lex order on `order` (earlier = more
// significant). Variables missing from `order` rank after it in key order.
// Throws NotDivisible if the remainder is nonzero, PreconditionError on
// negative exponents or q == 0.
Polynomial divide_exact(const Polynomial& p, const Polynomial& q,
                        const std::vector<Variable>& order = {});

// Truncated expansion of 1/L in the regime |z_1| << ... << |z_d|:
//   sum_{j=0}^{J} (-1)^j (L - a z_q)^j / (a z_q)^{j+1}
// where z_q is the top z-variable of L and a its coefficient.
// Throws ConstantForm if L has no z-variable.
Polynomial expand_inverse_factor(const LinearForm& L, int order);

}  // namespace thomcalc
