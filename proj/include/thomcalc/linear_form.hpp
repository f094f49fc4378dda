#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "thomcalc/polynomial.hpp"

namespace thomcalc {

// Affine form: constant + sum of coeff * variable, coefficients nonzero and
// sorted by variable.
class LinearForm {
 public:
  using Entry = std::pair<Variable, Rational>;

  LinearForm() = default;
  explicit LinearForm(const Rational& constant) : constant_(constant) {}
  LinearForm(const Rational& constant, std::vector<Entry> coeffs);
  // Throws PreconditionError if p is not of degree <= 1.
  static LinearForm from_polynomial(const Polynomial& p);
  static LinearForm variable(Variable v, const Rational& c = 1);

  const Rational& constant() const { return constant_; }
  const std::vector<Entry>& coeffs() const { return coeffs_; }
  Rational coefficient(Variable v) const;
  bool is_constant() const { return coeffs_.empty(); }
  bool is_zero() const { return coeffs_.empty() && thomcalc::is_zero(constant_); }
  bool involves(Variable v) const { return !thomcalc::is_zero(coefficient(v)); }

  // Largest z-index carrying a nonzero coefficient, if any.
  std::optional<int> top_z() const;
  // The form without its v-part.
  LinearForm without(Variable v) const;

  LinearForm operator+(const LinearForm& o) const;
  LinearForm operator-(const LinearForm& o) const;
  LinearForm operator-() const;
  LinearForm operator*(const Rational& c) const;

  Polynomial to_polynomial() const;
  Rational evaluate(const Assignment& values) const;
  LinearForm evaluate_partial(const Assignment& values) const;
  LinearForm substitute(Variable v, const LinearForm& f) const;

  // Scales so the first nonzero variable coefficient is 1; returns the
  // scale s with *this == s * normalized. Constant forms normalize to 1.
  std::pair<Rational, LinearForm> normalized() const;

  friend bool operator==(const LinearForm& x, const LinearForm& y) {
    return x.constant_ == y.constant_ && x.coeffs_ == y.coeffs_;
  }
  friend bool operator!=(const LinearForm& x, const LinearForm& y) { return !(x == y); }
  friend bool operator<(const LinearForm& x, const LinearForm& y);

 private:
  Rational constant_ = 0;
  std::vector<Entry> coeffs_;
};

// Shorthand for sums of z-variables: zform({{1, 2}, {2, 1}, {4, -1}}) = 2z1+z2-z4.
LinearForm zform(std::initializer_list<std::pair<int, int>> coeffs);

}  // namespace thomcalc
