#include "thomcalc/relations.hpp"

#include <algorithm>
#include <numeric>

#include "thomcalc/errors.hpp"
#include "thomcalc/polynomial_io.hpp"

namespace thomcalc {

namespace {

Polynomial uh(int m, int r, int l) { return Polynomial(Variable::uhat(m, r, l)); }

// sum_{s=lo}^{hi} u^s_{a,b} u^l_{c,s}
Polynomial chain_sum(int a, int b, int c, int l) {
  Polynomial s;
  for (int t = a + b; t <= l - c; ++t) s += uh(a, b, t) * uh(c, t, l);
  return s;
}

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 ? -1 : 1;
}

Variable u_of(int l, const Partition& tau) { return Variable::u(l, tau.parts()); }

// Leibniz extension of a map on u-variables.
template <class F>
Polynomial derive(const Polynomial& p, F&& on_var) {
  PolynomialBuilder out;
  for (const auto& t : p.terms()) {
    for (const auto& [v, e] : t.mono.factors()) {
      if (v.family() != Family::u) continue;
      Polynomial image = on_var(v);
      if (image.is_zero()) continue;
      Monomial rest = t.mono * Monomial(v, -1);
      for (const auto& it : image.terms()) out.add(it.mono * rest, it.coeff * t.coeff * e);
    }
  }
  return out.build();
}

}  // namespace

LinearForm variable_weight(Variable v) {
  switch (v.family()) {
    case Family::uhat:
      return zform({{v.uhat_m(), 1}, {v.uhat_r(), 1}, {v.uhat_l(), -1}});
    case Family::u:
      return Partition(v.u_partition()).z_weight() - LinearForm::variable(Variable::z(v.u_level()));
    default:
      throw PreconditionError("no z-weight for variable " + v.name());
  }
}

LinearForm relation_weight(const Polynomial& poly) {
  if (poly.is_zero()) throw PreconditionError("zero polynomial has no weight");
  std::optional<LinearForm> w;
  const Monomial* first = nullptr;
  for (const auto& t : poly.terms()) {
    LinearForm tw;
    for (const auto& [v, e] : t.mono.factors()) tw = tw + variable_weight(v) * Rational(e);
    if (!w) {
      w = tw;
      first = &t.mono;
    } else if (tw != *w) {
      throw InhomogeneousInput("monomials " + to_text(*first) + " and " + to_text(t.mono) +
                               " have different weights");
    }
  }
  return *w;
}

std::vector<RelationPolynomial> basic_relations(int d) {
  if (d < 1) throw PreconditionError("d must be positive");
  std::vector<RelationPolynomial> out;
  for (int l = 3; l <= d; ++l) {
    for (int i = 1; 3 * i <= l; ++i) {
      for (int j = i; i + 2 * j <= l; ++j) {
        for (int m = j; i + j + m <= l; ++m) {
          Polynomial s1 = chain_sum(j, m, i, l);
          Polynomial s2 = chain_sum(i, m, j, l);
          Polynomial s3 = chain_sum(i, j, m, l);
          std::vector<Polynomial> others;
          for (const Polynomial* s : {&s1, &s2}) {
            if (*s != s3 && std::find(others.begin(), others.end(), *s) == others.end()) {
              others.push_back(*s);
            }
          }
          for (const auto& s : others) {
            RelationPolynomial r;
            r.poly = s3 - s;
            r.weight = relation_weight(r.poly);
            r.toric = (i + j + m == l);
            r.i = i;
            r.j = j;
            r.m = m;
            r.l = l;
            out.push_back(std::move(r));
          }
        }
      }
    }
  }
  return out;
}

RelationPolynomial d6_quartic_relation() {
  auto q = [](int a, int b, int c, int e, int f, int g, int h, int i, int j, int k, int m, int n) {
    return uh(a, b, c) * uh(e, f, g) * uh(h, i, j) * uh(k, m, n);
  };
  Polynomial p = q(1, 2, 4, 1, 2, 4, 2, 3, 5, 3, 3, 6) + q(2, 2, 4, 1, 3, 4, 1, 2, 5, 3, 3, 6) +
                 q(1, 3, 4, 1, 3, 4, 2, 2, 5, 2, 3, 6) + q(2, 2, 4, 1, 3, 4, 2, 3, 5, 1, 3, 6) -
                 q(2, 2, 4, 1, 1, 4, 2, 3, 5, 3, 3, 6) - q(1, 3, 4, 1, 2, 4, 2, 2, 5, 3, 3, 6) -
                 q(2, 2, 4, 1, 3, 4, 1, 3, 5, 2, 3, 6) - q(1, 3, 4, 1, 3, 4, 2, 3, 5, 2, 2, 6);
  RelationPolynomial r;
  r.poly = p;
  r.weight = relation_weight(p);
  return r;
}

Rational eval_at_hat_reference(const Polynomial& poly) {
  Assignment a;
  for (Variable v : poly.variables()) {
    if (v.family() != Family::uhat) throw PreconditionError("expected hatted coordinates only");
    a[v] = (v.uhat_m() + v.uhat_r() == v.uhat_l()) ? 1 : 0;
  }
  return poly.evaluate(a);
}

Rational eval_at_reference(const Polynomial& poly) {
  Assignment a;
  for (Variable v : poly.variables()) {
    if (v.family() != Family::u) throw PreconditionError("expected u coordinates only");
    a[v] = (Partition(v.u_partition()).sum() == v.u_level()) ? 1 : 0;
  }
  return poly.evaluate(a);
}

Polynomial u_monomial(const AdmissibleSequence& pi) {
  std::vector<Monomial::Factor> fs;
  for (std::size_t l = 0; l < pi.size(); ++l) fs.emplace_back(u_of(static_cast<int>(l + 1), pi[l]), 1);
  return Polynomial(Monomial::from_factors(std::move(fs)), 1);
}

Polynomial relz(const AdmissibleSequence& rho, const Partition& tau) {
  if (!is_admissible(rho)) throw PreconditionError("relz needs an admissible sequence");
  if (tau.empty()) throw PreconditionError("relz needs a nonempty partition");
  const int d = static_cast<int>(rho.size());
  std::vector<int> sigma(d);
  std::iota(sigma.begin(), sigma.end(), 0);
  Polynomial out;
  do {
    int sign = permutation_sign(sigma);
    for (int m = 0; m < d; ++m) {
      AdmissibleSequence pi(d);
      for (int l = 0; l < d; ++l) pi[l] = rho[sigma[l]];
      pi[m] = pi[m] | tau;
      if (!is_admissible(pi)) continue;
      out += u_monomial(pi) * Rational(sign);
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

Polynomial apply_nR(const Polynomial& p, int m) {
  if (m < 1) throw PreconditionError("apply_nR needs m >= 1");
  return derive(p, [m](Variable v) -> Polynomial {
    Partition tau(v.u_partition());
    int l = v.u_level();
    if (tau.sum() == l || l != m + 1) return Polynomial();
    return Polynomial(u_of(l - 1, tau));
  });
}

Polynomial apply_nL(const Polynomial& p, int m) {
  if (m < 1) throw PreconditionError("apply_nL needs m >= 1");
  return derive(p, [m](Variable v) -> Polynomial {
    Partition tau(v.u_partition());
    int l = v.u_level();
    int mult = tau.multiplicity(m);
    if (tau.sum() == l || mult == 0) return Polynomial();
    return Polynomial(Monomial(u_of(l, tau.remove_one(m).add_one(m + 1))), Rational(mult));
  });
}

Polynomial z_quadratic(const Partition& rho, const Partition& tau, int m) {
  int a = rho.sum(), b = tau.sum();
  if (m < a + b) throw PreconditionError("z_quadratic needs m >= sum(rho) + sum(tau)");
  Polynomial z(u_of(m, rho | tau));
  for (int t = a; t <= m - b; ++t) z -= Polynomial(u_of(t, rho)) * Polynomial(u_of(m - t, tau));
  return z;
}

}  // namespace thomcalc
