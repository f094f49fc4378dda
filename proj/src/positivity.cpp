#include "thomcalc/positivity.hpp"

#include "thomcalc/errors.hpp"
#include "thomcalc/partitions.hpp"

namespace thomcalc {

namespace {

Polynomial truncate(const Polynomial& p, int d, int max_order) {
  std::vector<Term> keep;
  for (const auto& t : p.terms()) {
    if (ratio_order(t.mono, d) <= max_order) keep.push_back(t);
  }
  return Polynomial::from_sorted_unique(std::move(keep));
}

Polynomial mul_truncated(const Polynomial& x, const Polynomial& y, int d, int max_order) {
  PolynomialBuilder b;
  for (const auto& s : x.terms()) {
    const int os = ratio_order(s.mono, d);
    for (const auto& t : y.terms()) {
      if (os + ratio_order(t.mono, d) > max_order) continue;
      b.add(s.mono * t.mono, s.coeff * t.coeff);
    }
  }
  return b.build();
}

Polynomial zpoly(int i) { return Polynomial(Variable::z(i)); }

}  // namespace

int ratio_order(const Monomial& m, int d) {
  int partial = 0, total = 0;
  for (int i = 1; i < d; ++i) {
    partial += m.exponent(Variable::z(i));
    total += partial;
  }
  return total;
}

PositivityReport positivity_expansion(int d, int order, const QhatRegistry& registry) {
  if (d < 1 || order < 0) throw PreconditionError("positivity_expansion needs d >= 1, order >= 0");
  const Polynomial& q = registry.get(d);
  if (!q.is_homogeneous() || !q.is_polynomial()) throw PreconditionError("Qhat must be a homogeneous polynomial");

  // Everything is rewritten with degree-0 factors. Numerator pieces and the
  // geometric series have ratio order >= 0; the monomial prefactors
  // -z_d/z_l coming from the denominators carry order -(d - l) and are
  // multiplied in last, so truncating the rest at order + shift is exact.
  const Monomial zd_inv(Variable::z(d), -1);
  int shift = 0;
  Monomial prefactor;
  int sign = 1;
  std::vector<Polynomial> series;
  for (int l = 1; l <= d; ++l) {
    for (int m = 1; m < l; ++m) {
      for (int r = 1; r <= std::min(m, l - m); ++r) {
        shift += d - l;
        prefactor *= Monomial(Variable::z(d)) * Monomial(Variable::z(l), -1);
        sign = -sign;
        series.push_back((zpoly(m) + zpoly(r)).mul_monomial(Monomial(Variable::z(l), -1)));
      }
    }
  }
  const int cap = order + shift;

  Polynomial acc = q.is_zero() ? Polynomial() : q.mul_monomial(zd_inv.pow(q.degree()));
  acc = truncate(acc, d, cap);
  for (int l = 2; l <= d; ++l) {
    for (int m = 1; m < l; ++m) {
      acc = mul_truncated(acc, (zpoly(m) - zpoly(l)).mul_monomial(zd_inv), d, cap);
    }
  }
  for (const auto& u : series) {
    // 1 + u + u^2 + ... ; u has ratio order >= 1.
    Polynomial geo(1), power(1);
    for (int k = 1; k <= cap; ++k) {
      power = mul_truncated(power, u, d, cap);
      if (power.is_zero()) break;
      geo += power;
    }
    acc = mul_truncated(acc, geo, d, cap);
  }
  acc = acc.mul_monomial(prefactor, Rational(sign));

  PositivityReport rep;
  rep.d = d;
  rep.order = order;
  rep.expansion = truncate(acc, d, order);
  rep.terms = rep.expansion.size();
  bool first = true;
  for (const auto& t : rep.expansion.terms()) {
    if (first || t.coeff < rep.min_coeff) {
      rep.min_coeff = t.coeff;
      rep.witness = t.mono;
      first = false;
    }
  }
  return rep;
}

}  // namespace thomcalc
