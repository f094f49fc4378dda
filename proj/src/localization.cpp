#include "thomcalc/localization.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "thomcalc/errors.hpp"
#include "thomcalc/random.hpp"
#include "thomcalc/relations.hpp"

namespace thomcalc {

namespace {

void for_each_injection(int d, int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> sigma;
  std::vector<bool> used(n + 1, false);
  std::function<void()> rec = [&]() {
    if (static_cast<int>(sigma.size()) == d) {
      f(sigma);
      return;
    }
    for (int i = 1; i <= n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      sigma.push_back(i);
      rec();
      sigma.pop_back();
      used[i] = false;
    }
  };
  rec();
}

// z_l -> lambda_{sigma[l-1]}
LinearForm z_to_lambda(const LinearForm& f, const std::vector<int>& sigma) {
  std::vector<LinearForm::Entry> e;
  for (const auto& [v, c] : f.coeffs()) {
    if (v.family() == Family::z) {
      e.emplace_back(Variable::lambda(sigma.at(v.index() - 1)), c);
    } else {
      e.emplace_back(v, c);
    }
  }
  return LinearForm(f.constant(), std::move(e));
}

LinearForm lam(int i) { return LinearForm::variable(Variable::lambda(i)); }
LinearForm th(int j) { return LinearForm::variable(Variable::theta(j)); }
LinearForm zv(int i) { return LinearForm::variable(Variable::z(i)); }

Polynomial theta_product(const LinearForm& w, int k) {
  Polynomial p(1);
  for (int j = 1; j <= k; ++j) p *= (th(j) - w).to_polynomial();
  return p;
}

Polynomial vandermonde(int d) {
  Polynomial p(1);
  for (int l = 2; l <= d; ++l) {
    for (int m = 1; m < l; ++m) p *= (zv(m) - zv(l)).to_polynomial();
  }
  return p;
}

}  // namespace

LocalizationSum porteous_localization_sum(int n, int k) {
  if (n < 1 || k < 0) throw PreconditionError("porteous sum needs n >= 1, k >= 0");
  std::vector<std::vector<LinearForm>> W(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= k; ++j) W[i - 1].push_back(th(j) - lam(i));
  }
  if (k == 0) {
    // No columns to recover lambda differences from; build directly.
    LocalizationSum s;
    for (int i = 1; i <= n; ++i) {
      FactoredRational t{Polynomial(1), {}};
      for (int r = 1; r <= n; ++r) {
        if (r != i) t.denominator.push_back({lam(r) - lam(i), 1});
      }
      s.terms.push_back(std::move(t));
    }
    return s;
  }
  return porteous_sum_from_weights(W);
}

LocalizationSum porteous_sum_from_weights(const std::vector<std::vector<LinearForm>>& W) {
  if (W.empty() || W[0].empty()) throw PreconditionError("weight matrix must be nonempty");
  const std::size_t cols = W[0].size();
  for (const auto& row : W) {
    if (row.size() != cols) throw PreconditionError("ragged weight matrix");
  }
  for (std::size_t i = 1; i < W.size(); ++i) {
    LinearForm diff = W[i][0] - W[0][0];
    for (std::size_t j = 1; j < cols; ++j) {
      if (W[i][j] - W[0][j] != diff) {
        throw PreconditionError("weight matrix rows do not differ by a common form");
      }
    }
  }
  LocalizationSum s;
  for (std::size_t i = 0; i < W.size(); ++i) {
    FactoredRational t;
    t.numerator = Polynomial(1);
    for (const auto& w : W[i]) t.numerator *= w.to_polynomial();
    for (std::size_t r = 0; r < W.size(); ++r) {
      if (r != i) t.denominator.push_back({W[i][0] - W[r][0], 1});
    }
    s.terms.push_back(std::move(t));
  }
  return s;
}

std::vector<FixedPointTerm> fixed_point_terms(int d) {
  const Partition p1{1}, p2{2}, p3{3}, p11{1, 1}, p12{1, 2}, p111{1, 1, 1};
  if (d == 2) {
    return {
        {{p1, p2}, {zform({{1, 2}, {2, -1}})}},
        {{p1, p11}, {zform({{2, 1}, {1, -2}})}},
    };
  }
  if (d == 3) {
    const LinearForm a = zform({{1, 2}, {2, -1}});  // 2z1 - z2
    const LinearForm b = zform({{2, 1}, {1, -2}});  // z2 - 2z1
    return {
        {{p1, p2, p3}, {a, zform({{1, 2}, {3, -1}}), zform({{1, 1}, {2, 1}, {3, -1}})}},
        {{p1, p2, p12}, {a, zform({{3, 1}, {1, -1}, {2, -1}}), zform({{1, 1}, {2, -1}})}},
        {{p1, p2, p11}, {a, zform({{3, 1}, {1, -2}}), zform({{2, 1}, {1, -1}})}},
        {{p1, p11, p3}, {b, zform({{2, 1}, {3, -1}}), zform({{1, 3}, {3, -1}})}},
        {{p1, p11, p111}, {b, zform({{3, 1}, {1, -3}}), zform({{2, 1}, {1, -3}})}},
        {{p1, p11, p2}, {b, zform({{3, 1}, {2, -1}}), zform({{1, 3}, {2, -1}})}},
    };
  }
  throw PreconditionError("explicit fixed point terms exist only for d = 2, 3");
}

LocalizationSum fixed_point_sum(int d, int n, int k) {
  if (d > n) throw PreconditionError("fixed_point_sum needs d <= n");
  const auto terms = fixed_point_terms(d);
  LocalizationSum s;
  for_each_injection(d, n, [&](const std::vector<int>& sigma) {
    std::vector<DenominatorFactor> flag;
    std::set<int> used;
    for (int m = 0; m < d; ++m) {
      used.insert(sigma[m]);
      for (int i = 1; i <= n; ++i) {
        if (!used.count(i)) flag.push_back({lam(i) - lam(sigma[m]), 1});
      }
    }
    for (const auto& t : terms) {
      FactoredRational fr;
      fr.numerator = Polynomial(1);
      for (const auto& part : t.pi) fr.numerator *= theta_product(z_to_lambda(part.z_weight(), sigma), k);
      fr.denominator = flag;
      for (const auto& f : t.denominators) fr.denominator.push_back({z_to_lambda(f, sigma), 1});
      s.terms.push_back(std::move(fr));
    }
  });
  return s;
}

std::vector<Polynomial> residue_form_numerator_factors(const FixedPointTerm& term, int k) {
  const int d = static_cast<int>(term.pi.size());
  std::vector<Polynomial> out;
  for (int l = 2; l <= d; ++l) {
    for (int m = 1; m < l; ++m) out.push_back((zv(m) - zv(l)).to_polynomial());
  }
  for (const auto& part : term.pi) {
    for (int j = 1; j <= k; ++j) out.push_back((th(j) - part.z_weight()).to_polynomial());
  }
  return out;
}

std::vector<LinearForm> residue_form_denominator(const FixedPointTerm& term, int n) {
  const int d = static_cast<int>(term.pi.size());
  std::vector<LinearForm> out = term.denominators;
  for (int l = 1; l <= d; ++l) {
    for (int i = 1; i <= n; ++i) out.push_back(lam(i) - zv(l));
  }
  return out;
}

ResidueProblem residue_form_term(const FixedPointTerm& term, int n, int k) {
  ResidueProblem p;
  p.variables = ResidueProblem::z_range(static_cast<int>(term.pi.size()));
  p.cofactors = residue_form_numerator_factors(term, k);
  for (const auto& f : residue_form_denominator(term, n)) p.denominator.push_back({f, 1});
  return p;
}

bool vanishing_criterion(const std::vector<Polynomial>& numerator_factors,
                         const std::vector<LinearForm>& factors, int l, int d) {
  if (l < 1 || l > d) throw PreconditionError("level out of range");
  // The generic degree of a product is the sum of the factors' degrees.
  auto deg = [&](const std::set<int>& S) {
    int s = 0;
    for (const auto& f : numerator_factors) {
      int k = deg_in_subset(f, S);
      if (k == kNegativeInfinity) return kNegativeInfinity;
      s += k;
    }
    return s;
  };
  std::set<int> tail;
  for (int i = l; i <= d; ++i) tail.insert(i);
  int pt = deg(tail);
  if (pt == kNegativeInfinity) return true;
  if (pt + d - l + 1 < deg_in_subset(factors, tail)) return true;
  int ql = deg_in_subset(factors, std::set<int>{l});
  return deg(std::set<int>{l}) + 1 < ql && ql == lead_count(factors, l);
}

VanishingReport nondistinguished_vanishing_report(int d, int n, int k) {
  const auto terms = fixed_point_terms(d);
  VanishingReport r;
  for (std::size_t t = 1; t < terms.size(); ++t) {
    ++r.terms_checked;
    ResidueProblem p = residue_form_term(terms[t], n, k);
    Polynomial res = iterated_residue(p, TruncationPolicy{suggested_order(p), 2});
    if (res.is_zero()) ++r.zero_terms;
    auto num = residue_form_numerator_factors(terms[t], k);
    auto den = residue_form_denominator(terms[t], n);
    for (int l = 1; l <= d; ++l) {
      if (vanishing_criterion(num, den, l, d)) {
        ++r.criterion_hits;
        break;
      }
    }
  }
  return r;
}

bool nondistinguished_vanishing(int d, int n, int k) {
  return nondistinguished_vanishing_report(d, n, k).all_zero();
}

Assignment random_lambda_theta_point(int n, int k, std::mt19937_64& rng) {
  Assignment a;
  std::set<Rational> seen;
  for (int i = 1; i <= n; ++i) {
    Rational v;
    do {
      v = random_rational(rng);
    } while (seen.count(v));
    seen.insert(v);
    a[Variable::lambda(i)] = v;
  }
  for (int j = 1; j <= k; ++j) a[Variable::theta(j)] = random_rational(rng);
  return a;
}

bool flag_residue_identity(const Polynomial& Q, int n, int d, std::mt19937_64& rng, int samples) {
  if (d < 1 || d > n) throw PreconditionError("flag_residue_identity needs 1 <= d <= n");
  for (Variable v : Q.variables()) {
    if (v.family() != Family::z || v.index() > d) throw PreconditionError("Q must be a polynomial in z_1..z_d");
  }
  if (!Q.is_polynomial()) throw PreconditionError("Q must be a polynomial");
  for (int s = 0; s < samples; ++s) {
    Assignment pt = random_lambda_theta_point(n, 0, rng);
    std::vector<Rational> lambda(n + 1);
    for (int i = 1; i <= n; ++i) lambda[i] = pt[Variable::lambda(i)];

    Rational lhs = 0;
    for_each_injection(d, n, [&](const std::vector<int>& sigma) {
      Assignment z;
      for (int l = 1; l <= d; ++l) z[Variable::z(l)] = lambda[sigma[l - 1]];
      Rational den = 1;
      std::set<int> used;
      for (int m = 0; m < d; ++m) {
        used.insert(sigma[m]);
        for (int i = 1; i <= n; ++i) {
          if (!used.count(i)) den *= lambda[i] - lambda[sigma[m]];
        }
      }
      lhs += Q.evaluate(z) / den;
    });

    ResidueProblem p;
    p.variables = ResidueProblem::z_range(d);
    p.numerator = Q;
    p.cofactors.push_back(vandermonde(d));
    for (int l = 1; l <= d; ++l) {
      for (int i = 1; i <= n; ++i) p.denominator.push_back({LinearForm(lambda[i]) - zv(l), 1});
    }
    Polynomial rhs = iterated_residue(p, TruncationPolicy{suggested_order(p), 2});
    if (!rhs.is_constant() || rhs.constant_term() != lhs) return false;
  }
  return true;
}

Qhat5Derivation qhat5_derivation_steps() {
  // Weight matrix of the 2x3 toric minors: rows are the two sides of the
  // three toric equations in degree 5.
  std::vector<std::vector<LinearForm>> W = {
      {zform({{1, 1}, {3, 1}, {4, -1}}), zform({{2, 2}, {4, -1}}), zform({{2, 1}, {3, 1}, {5, -1}})},
      {zform({{1, 2}, {2, -1}}), zform({{1, 1}, {2, 1}, {3, -1}}), zform({{1, 1}, {4, 1}, {5, -1}})},
  };
  Qhat5Derivation out;
  out.toric_part = porteous_sum_from_weights(W).simplify();
  for (const auto& r : basic_relations(5)) {
    if (!r.toric) out.weight = r.weight;
  }
  out.result = out.toric_part * out.weight.to_polynomial();
  return out;
}

Polynomial qhat5_derivation() { return qhat5_derivation_steps().result; }

}  // namespace thomcalc
