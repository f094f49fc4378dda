#include "thomcalc/division.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "thomcalc/errors.hpp"

namespace thomcalc {

namespace {

struct LexLess {
  const std::vector<Variable>* order;
  bool operator()(const Monomial& x, const Monomial& y) const {
    return lex_compare(x, y, *order) < 0;
  }
};

std::vector<Variable> complete_order(const std::vector<Variable>& given, const Polynomial& p,
                                     const Polynomial& q) {
  std::vector<Variable> order = given;
  std::set<Variable> seen(given.begin(), given.end());
  std::set<Variable> rest;
  for (Variable v : p.variables()) {
    if (!seen.count(v)) rest.insert(v);
  }
  for (Variable v : q.variables()) {
    if (!seen.count(v)) rest.insert(v);
  }
  order.insert(order.end(), rest.begin(), rest.end());
  return order;
}

}  // namespace

Polynomial divide_exact(const Polynomial& p, const Polynomial& q,
                        const std::vector<Variable>& given_order) {
  if (q.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (!p.is_polynomial() || !q.is_polynomial()) {
    throw PreconditionError("exact division needs nonnegative exponents");
  }
  if (p.is_zero()) return {};
  if (q.is_constant()) return p * (1 / q.constant_term());

  std::vector<Variable> order = complete_order(given_order, p, q);
  LexLess less{&order};

  const Term* lead_q = &q.terms().front();
  for (const auto& t : q.terms()) {
    if (less(lead_q->mono, t.mono)) lead_q = &t;
  }
  Monomial lq_inv = lead_q->mono.inverse();
  Rational lc_inv = 1 / lead_q->coeff;

  std::map<Monomial, Rational, LexLess> rem(less);
  for (const auto& t : p.terms()) rem.emplace(t.mono, t.coeff);

  PolynomialBuilder quotient;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    if (!lead_q->mono.divides(top->first)) {
      throw NotDivisible("remainder term not divisible by the leading term of the divisor");
    }
    Monomial m = top->first * lq_inv;
    Rational c = top->second * lc_inv;
    for (const auto& t : q.terms()) {
      Monomial tm = t.mono * m;
      Rational delta = t.coeff * c;
      auto [it, inserted] = rem.try_emplace(tm, 0);
      it->second -= delta;
      if (is_zero(it->second)) rem.erase(it);
    }
    quotient.add(std::move(m), c);
  }
  return quotient.build();
}

Polynomial expand_inverse_factor(const LinearForm& L, int order) {
  auto top = L.top_z();
  if (!top) throw ConstantForm("linear form has no z-variable");
  if (order < 0) throw PreconditionError("negative expansion order");
  Variable zq = Variable::z(*top);
  Rational a = L.coefficient(zq);
  Polynomial rest = L.without(zq).to_polynomial();
  // term_j = (-rest/(a z_q))^j / (a z_q)
  Polynomial ratio = rest.mul_monomial(Monomial(zq, -1), -1 / a);
  Polynomial term(Monomial(zq, -1), 1 / a);
  PolynomialBuilder out;
  for (int j = 0; j <= order; ++j) {
    out.add(term);
    if (j < order) term = term * ratio;
  }
  return out.build();
}

}  // namespace thomcalc
