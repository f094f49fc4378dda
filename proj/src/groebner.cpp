#include <algorithm>
#include <deque>

#include "thomcalc/errors.hpp"
#include "thomcalc/multidegree.hpp"

namespace thomcalc {

namespace {

const Term& leading_term(const Polynomial& f, const std::vector<Variable>& order) {
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms()) {
    if (lex_compare(t.mono, best->mono, order) > 0) best = &t;
  }
  return *best;
}

Monomial lcm(const Monomial& x, const Monomial& y) {
  std::vector<Monomial::Factor> fs;
  for (const auto& [v, e] : x.factors()) fs.emplace_back(v, std::max(e, y.exponent(v)));
  for (const auto& [v, e] : y.factors()) {
    if (x.exponent(v) == 0) fs.emplace_back(v, e);
  }
  return Monomial::from_factors(std::move(fs));
}

bool coprime(const Monomial& x, const Monomial& y) {
  for (const auto& [v, e] : x.factors()) {
    if (y.exponent(v) != 0) return false;
  }
  return true;
}

Polynomial monic(const Polynomial& f, const std::vector<Variable>& order) {
  return f * (Rational(1) / leading_term(f, order).coeff);
}

void check_order(const Polynomial& f, const std::vector<Variable>& order) {
  for (Variable v : f.variables()) {
    if (std::find(order.begin(), order.end(), v) == order.end()) {
      throw PreconditionError("variable " + v.name() + " missing from the monomial order");
    }
  }
  if (!f.is_polynomial()) throw PreconditionError("ideal generators must be polynomials");
}

}  // namespace

Monomial leading_monomial(const Polynomial& f, const std::vector<Variable>& order) {
  if (f.is_zero()) throw PreconditionError("zero polynomial has no leading monomial");
  return leading_term(f, order).mono;
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& g, const std::vector<Variable>& order) {
  std::vector<Term> lead;
  lead.reserve(g.size());
  for (const auto& q : g) lead.push_back(leading_term(q, order));
  PolynomialBuilder rem;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term lt = leading_term(p, order);
    bool divided = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (lead[i].mono.divides(lt.mono)) {
        p -= g[i].mul_monomial(lt.mono * lead[i].mono.inverse(), lt.coeff / lead[i].coeff);
        divided = true;
        break;
      }
    }
    if (!divided) {
      rem.add(lt.mono, lt.coeff);
      p -= Polynomial(lt.mono, lt.coeff);
    }
  }
  return rem.build();
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const std::vector<Variable>& order) {
  const Term& a = leading_term(f, order);
  const Term& b = leading_term(g, order);
  const Monomial l = lcm(a.mono, b.mono);
  return f.mul_monomial(l * a.mono.inverse(), Rational(1) / a.coeff) -
         g.mul_monomial(l * b.mono.inverse(), Rational(1) / b.coeff);
}

std::vector<Polynomial> buchberger_lex(const PolynomialIdeal& ideal, std::size_t pair_budget) {
  const auto& order = ideal.order;
  std::vector<Polynomial> G;
  for (const auto& f : ideal.generators) {
    check_order(f, order);
    if (f.is_zero()) continue;
    if (f.is_constant()) return {Polynomial(1)};
    G.push_back(monic(f, order));
  }
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < G.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::size_t used = 0;
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (coprime(leading_monomial(G[i], order), leading_monomial(G[j], order))) continue;
    if (++used > pair_budget) throw ResourceLimit("Buchberger S-pair budget exhausted");
    Polynomial h = reduce(s_polynomial(G[i], G[j], order), G, order);
    if (h.is_zero()) continue;
    if (h.is_constant()) return {Polynomial(1)};
    G.push_back(monic(h, order));
    for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.emplace_back(k, G.size() - 1);
  }

  // Minimal basis, then interreduce.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    const Monomial li = leading_monomial(G[i], order);
    bool redundant = false;
    for (std::size_t k = 0; k < G.size() && !redundant; ++k) {
      if (k == i) continue;
      const Monomial lk = leading_monomial(G[k], order);
      // Ties between equal leading monomials keep the first occurrence.
      if (lk.divides(li) && (lk != li || k < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      if (k != i) others.push_back(minimal[k]);
    }
    const Term lt = leading_term(minimal[i], order);
    Polynomial tail = minimal[i] - Polynomial(lt.mono, lt.coeff);
    out.push_back(Polynomial(lt.mono, 1) + reduce(tail, others, order) * (Rational(1) / lt.coeff));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& x, const Polynomial& y) {
    return lex_compare(leading_monomial(x, order), leading_monomial(y, order), order) > 0;
  });
  return out;
}

}  // namespace thomcalc
