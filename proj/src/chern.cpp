#include "thomcalc/errors.hpp"
#include "thomcalc/thom.hpp"

namespace thomcalc {

ChernAssignment chern_classes(int n, int k, int truncation) {
  if (n < 0 || k < 0 || truncation < 0) throw PreconditionError("negative Chern parameters");
  // Coefficients of prod(1 + theta_j q) / prod(1 + lambda_i q), truncated.
  std::vector<Polynomial> series(truncation + 1);
  series[0] = Polynomial(1);
  for (int j = 1; j <= k; ++j) {
    Polynomial t(Variable::theta(j));
    for (int i = truncation; i >= 1; --i) series[i] += series[i - 1] * t;
  }
  for (int i = 1; i <= n; ++i) {
    // multiply by sum_m (-lambda_i q)^m
    Polynomial ml = -Polynomial(Variable::lambda(i));
    for (int e = 1; e <= truncation; ++e) series[e] += series[e - 1] * ml;
  }
  ChernAssignment out;
  out.n = n;
  out.k = k;
  out.truncation = truncation;
  out.values = std::move(series);
  return out;
}

Polynomial substitute_chern(const ThomPolynomial& tp, int n, int k) {
  if (k - n != tp.j) {
    throw CodimensionMismatch("k - n = " + std::to_string(k - n) + " but the Thom polynomial has codimension index " +
                              std::to_string(tp.j));
  }
  int top = 0;
  for (Variable v : tp.body.variables()) {
    if (v.family() != Family::c) throw PreconditionError("Thom polynomial body has non-Chern variable");
    top = std::max(top, v.index());
  }
  ChernAssignment c = chern_classes(n, k, top);
  std::map<Variable, Polynomial> subs;
  for (int i = 0; i <= top; ++i) subs.emplace(Variable::c(i), c.values[i]);
  return tp.body.substitute(subs);
}

}  // namespace thomcalc
