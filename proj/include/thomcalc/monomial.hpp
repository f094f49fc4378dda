#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "thomcalc/variable.hpp"

namespace thomcalc {

// Laurent monomial: sorted (variable, exponent) pairs with nonzero exponents.
class Monomial {
 public:
  using Factor = std::pair<Variable, int>;

  Monomial() = default;
  explicit Monomial(Variable v, int e = 1);
  // Accepts unsorted input with repeats; zero exponents are dropped.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int exponent(Variable v) const;
  int degree() const;
  bool is_polynomial() const;  // all exponents nonnegative

  Monomial operator*(const Monomial& o) const;
  Monomial& operator*=(const Monomial& o) { return *this = *this * o; }
  Monomial pow(int e) const;
  Monomial inverse() const { return pow(-1); }
  // Monomial with variable v removed.
  Monomial without(Variable v) const;
  // True if every exponent of *this is <= the one in o (monomials with
  // nonnegative exponents only).
  bool divides(const Monomial& o) const;

  std::size_t hash() const;

  friend bool operator==(const Monomial& x, const Monomial& y) { return x.factors_ == y.factors_; }
  friend bool operator!=(const Monomial& x, const Monomial& y) { return !(x == y); }

 private:
  std::vector<Factor> factors_;
};

// Canonical ordering: total degree first, then reverse lexicographic with
// variables in ascending key order. Returns true if x comes strictly first.
bool canonical_before(const Monomial& x, const Monomial& y);

// Pure lexicographic comparison under an explicit variable priority list
// (earlier means more significant). Returns <0, 0, >0.
int lex_compare(const Monomial& x, const Monomial& y, const std::vector<Variable>& order);

}  // namespace thomcalc

template <>
struct std::hash<thomcalc::Monomial> {
  std::size_t operator()(const thomcalc::Monomial& m) const noexcept { return m.hash(); }
};
