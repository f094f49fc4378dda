#include "thomcalc/thom.hpp"

#include "thomcalc/errors.hpp"
#include "thomcalc/partitions.hpp"

namespace thomcalc {

int default_thom_order(int d, int j) {
  return d * (j + 1) + d * (d - 1) / 2 + deg_Qhat(d) + d;
}

ResidueProblem thom_problem(int d, int j, const Polynomial& qhat_d) {
  if (d < 1 || j < 0) throw PreconditionError("thom_problem needs d >= 1, j >= 0");
  ResidueProblem p;
  p.variables = ResidueProblem::z_range(d);
  p.numerator = Polynomial(d % 2 ? -1 : 1);
  for (int l = 2; l <= d; ++l) {
    for (int m = 1; m < l; ++m) p.cofactors.push_back(zform({{m, 1}, {l, -1}}).to_polynomial());
  }
  if (!qhat_d.is_constant()) {
    p.cofactors.push_back(qhat_d);
  } else {
    p.numerator *= qhat_d.constant_term();
  }
  for (int l = 1; l <= d; ++l) {
    for (int m = 1; m < l; ++m) {
      for (int r = 1; r <= std::min(m, l - m); ++r) {
        p.denominator.push_back({zform({{m, 1}, {r, 1}, {l, -1}}), 1});
      }
    }
  }
  const int top = d * (j + 1);
  for (int l = 1; l <= d; ++l) {
    Variable z = Variable::z(l);
    PolynomialBuilder s;
    for (int i = 0; i <= top; ++i) s.add(Monomial(Variable::c(i)) * Monomial(z, j - i), 1);
    p.series.emplace(z, s.build());
  }
  return p;
}

ThomPolynomial thom_polynomial(int d, int j, const QhatRegistry& registry) {
  return thom_polynomial(d, j, registry, TruncationPolicy{default_thom_order(d, j), 2});
}

ThomPolynomial thom_polynomial(int d, int j, const QhatRegistry& registry,
                               const TruncationPolicy& policy) {
  const Polynomial& q = registry.get(d);
  ThomPolynomial tp;
  tp.d = d;
  tp.j = j;
  tp.body = iterated_residue(thom_problem(d, j, q), policy);
  return tp;
}

ThomPolynomial ronga_reference(int j) {
  if (j < 0) throw PreconditionError("ronga_reference needs j >= 0");
  const int a = j + 1;
  Polynomial body = Polynomial(Variable::c(a), 2);
  Rational w = 1;
  for (int i = 1; i <= a; ++i) {
    body += Polynomial(Monomial(Variable::c(a - i)) * Monomial(Variable::c(a + i)), w);
    w *= 2;
  }
  return {2, j, body};
}

Polynomial thom_series_view(const ThomPolynomial& tp) {
  return tp.body.map_variables([&](Variable v) {
    if (v.family() != Family::c) throw PreconditionError("non-Chern variable " + v.name());
    return Variable::a(v.index() - (tp.j + 1));
  });
}

ThomPolynomial from_thom_series(const Polynomial& ts, int d, int j) {
  ThomPolynomial tp{d, j, {}};
  tp.body = ts.map_variables([&](Variable v) {
    if (v.family() != Family::a) throw PreconditionError("non-series variable " + v.name());
    return Variable::c(v.index() + j + 1);
  });
  return tp;
}

Polynomial shift_down(const Polynomial& body) {
  PolynomialBuilder out;
  for (const auto& t : body.terms()) {
    std::vector<Monomial::Factor> fs;
    bool drop = false;
    for (const auto& [v, e] : t.mono.factors()) {
      if (v.family() != Family::c) throw PreconditionError("non-Chern variable " + v.name());
      if (v.index() == 0) {
        drop = true;
        break;
      }
      fs.emplace_back(Variable::c(v.index() - 1), e);
    }
    if (!drop) out.add(Monomial::from_factors(std::move(fs)), t.coeff);
  }
  return out.build();
}

bool shift_check(int d, int j, const QhatRegistry& registry) {
  if (j < 1) throw PreconditionError("shift_check needs j >= 1");
  return thom_polynomial(d, j - 1, registry).body == shift_down(thom_polynomial(d, j, registry).body);
}

bool tp_positivity(const ThomPolynomial& tp) {
  for (const auto& t : tp.body.terms()) {
    if (sgn(t.coeff) < 0) return false;
  }
  return true;
}

ChernStructure chern_structure(const Polynomial& body) {
  ChernStructure s;
  bool first = true;
  for (const auto& t : body.terms()) {
    int f = 0, w = 0;
    for (const auto& [v, e] : t.mono.factors()) {
      if (v.family() != Family::c || e < 0) return {};
      f += e;
      w += e * v.index();
    }
    if (first) {
      s.factors = f;
      s.weighted_degree = w;
      first = false;
    } else if (f != s.factors || w != s.weighted_degree) {
      return {};
    }
  }
  s.ok = true;
  return s;
}

}  // namespace thomcalc
