#include "thomcalc/factored_rational.hpp"

#include <map>

#include "thomcalc/division.hpp"
#include "thomcalc/errors.hpp"

namespace thomcalc {

Rational FactoredRational::evaluate(const Assignment& values) const {
  Rational den = 1;
  for (const auto& f : denominator) {
    Rational v = f.form.evaluate(values);
    if (is_zero(v)) throw ZeroDenominator("denominator factor vanishes at the evaluation point");
    den *= pow(v, f.multiplicity);
  }
  return numerator.evaluate(values) / den;
}

FactoredRational FactoredRational::normalized() const {
  FactoredRational out;
  Rational scale = 1;
  std::map<LinearForm, int> merged;
  for (const auto& f : denominator) {
    if (f.multiplicity < 1) throw PreconditionError("denominator multiplicity must be positive");
    if (f.form.is_zero()) throw ZeroDenominator("zero denominator form");
    auto [s, norm] = f.form.normalized();
    scale *= pow(s, f.multiplicity);
    if (!norm.is_constant()) merged[norm] += f.multiplicity;
  }
  out.numerator = numerator * (1 / scale);
  for (auto& [form, m] : merged) out.denominator.push_back({form, m});
  return out;
}

Polynomial FactoredRational::to_polynomial() const { return sum_to_polynomial({*this}); }

FactoredRational sum_factored(const std::vector<FactoredRational>& terms) {
  std::vector<FactoredRational> norm;
  norm.reserve(terms.size());
  std::map<LinearForm, int> lcm;
  for (const auto& t : terms) {
    norm.push_back(t.normalized());
    for (const auto& f : norm.back().denominator) {
      int& m = lcm[f.form];
      m = std::max(m, f.multiplicity);
    }
  }
  std::map<LinearForm, Polynomial> form_poly;
  for (const auto& [form, m] : lcm) form_poly.emplace(form, form.to_polynomial());

  PolynomialBuilder sum;
  for (const auto& t : norm) {
    std::map<LinearForm, int> have;
    for (const auto& f : t.denominator) have[f.form] = f.multiplicity;
    Polynomial num = t.numerator;
    for (const auto& [form, m] : lcm) {
      int missing = m - (have.count(form) ? have[form] : 0);
      if (missing > 0) num *= form_poly.at(form).pow(static_cast<unsigned>(missing));
    }
    sum.add(num);
  }
  FactoredRational out;
  out.numerator = sum.build();
  if (out.numerator.is_zero()) return out;
  for (const auto& [form, m] : lcm) {
    int left = m;
    while (left > 0) {
      try {
        out.numerator = divide_exact(out.numerator, form_poly.at(form));
      } catch (const NotDivisible&) {
        break;
      }
      --left;
    }
    if (left > 0) out.denominator.push_back({form, left});
  }
  return out;
}

Polynomial sum_to_polynomial(const std::vector<FactoredRational>& terms) {
  FactoredRational r = sum_factored(terms);
  if (!r.denominator.empty()) throw NotDivisible("sum does not simplify to a polynomial");
  return r.numerator;
}

Rational evaluate_sum(const std::vector<FactoredRational>& terms, const Assignment& values) {
  Rational s = 0;
  for (const auto& t : terms) s += t.evaluate(values);
  return s;
}

}  // namespace thomcalc
