#pragma once

#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "thomcalc/monomial.hpp"
#include "thomcalc/rational.hpp"

namespace thomcalc {

struct Term {
  Monomial mono;
  Rational coeff;

  friend bool operator==(const Term& x, const Term& y) {
    return x.mono == y.mono && x.coeff == y.coeff;
  }
};

using Assignment = std::unordered_map<Variable, Rational>;

// Sparse Laurent polynomial with exact rational coefficients. Terms are kept
// in canonical order (see canonical_before) with no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: implicit constant promotion is intended
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
  Polynomial(int c) : Polynomial(Rational(c)) {}   // NOLINT
  explicit Polynomial(Variable v, int e = 1);
  Polynomial(const Monomial& m, const Rational& c);
  // Sums duplicate monomials and sorts.
  static Polynomial from_terms(std::vector<Term> terms);
  // Caller guarantees canonical order, unique monomials, nonzero coefficients.
  static Polynomial from_sorted_unique(std::vector<Term> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_polynomial() const;  // no negative exponents
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  // Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  int degree_in(Variable v) const;
  int min_degree_in(Variable v) const;
  std::vector<Variable> variables() const;
  bool involves(Variable v) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
  friend Polynomial operator-(Polynomial x, const Polynomial& y) { return x -= y; }
  friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator*(Polynomial x, const Rational& c) { return x *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial x) { return x *= c; }
  Polynomial mul_monomial(const Monomial& m, const Rational& c = 1) const;
  Polynomial pow(unsigned e) const;

  // Full evaluation; throws UnassignedVariable if a variable is missing.
  Rational evaluate(const Assignment& values) const;
  // Partial evaluation of the assigned variables.
  Polynomial evaluate_partial(const Assignment& values) const;
  // Replace v by p. Negative powers of v are rejected unless p is a monomial.
  Polynomial substitute(Variable v, const Polynomial& p) const;
  Polynomial substitute(const std::map<Variable, Polynomial>& subs) const;
  // Rename variables one-to-one (or many-to-one) through f.
  Polynomial map_variables(const std::function<Variable(Variable)>& f) const;
  // Coefficient of v^e as a polynomial free of v.
  Polynomial coefficient_of(Variable v, int e) const;
  // Split by exponent of v.
  std::map<int, Polynomial> split_by(Variable v) const;

  friend bool operator==(const Polynomial& x, const Polynomial& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const Polynomial& x, const Polynomial& y) { return !(x == y); }

 private:
  std::vector<Term> terms_;
};

// Hash-based accumulator for building polynomials term by term.
class PolynomialBuilder {
 public:
  void add(const Monomial& m, const Rational& c);
  void add(Monomial&& m, const Rational& c);
  void add(const Polynomial& p);
  void add_product(const Polynomial& x, const Polynomial& y);
  bool empty() const { return acc_.empty(); }
  Polynomial build();

 private:
  std::unordered_map<Monomial, Rational> acc_;
};

Polynomial product(const std::vector<Polynomial>& factors);

}  // namespace thomcalc
