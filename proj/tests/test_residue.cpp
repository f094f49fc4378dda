#include <doctest.h>

#include <random>

#include "thomcalc/errors.hpp"
#include "thomcalc/localization.hpp"
#include "thomcalc/polynomial_io.hpp"
#include "thomcalc/random.hpp"
#include "thomcalc/residue.hpp"
#include "thomcalc/verify.hpp"

using namespace thomcalc;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }
LinearForm zf(std::initializer_list<std::pair<int, int>> c) { return zform(c); }
LinearForm lam(int i) { return LinearForm::variable(Variable::lambda(i)); }
LinearForm zv(int i) { return LinearForm::variable(Variable::z(i)); }

ResidueProblem problem(int d, Polynomial num, std::vector<LinearForm> den) {
  ResidueProblem p;
  p.variables = ResidueProblem::z_range(d);
  p.numerator = std::move(num);
  for (auto& f : den) p.denominator.push_back({std::move(f), 1});
  return p;
}

Polynomial res(const ResidueProblem& p) { return iterated_residue(p, TruncationPolicy{suggested_order(p), 2}); }

// Oracle for one variable: the coefficient of z^-1 of num * prod 1/(b_i - z)
// expanded at infinity, computed with the closed form
// 1/(b - z) = -sum_k b^k z^{-k-1}, independently of the engine.
Polynomial porteous_oracle(const Polynomial& num, int n, int cap) {
  const Variable z = Variable::z(1);
  Polynomial series(1);
  for (int i = 1; i <= n; ++i) {
    Polynomial s;
    for (int k = 0; k <= cap; ++k) {
      s -= Polynomial(Variable::lambda(i), k).mul_monomial(Monomial(z, -k - 1));
    }
    series *= s;
  }
  return -(num * series).coefficient_of(z, -1);
}

}  // namespace

TEST_CASE("engine sign convention and trivial inputs") {
  for (int d = 1; d <= 4; ++d) {
    std::vector<LinearForm> den;
    for (int i = 1; i <= d; ++i) den.push_back(zv(i));
    CHECK(res(problem(d, Polynomial(1), den)) == Polynomial(d % 2 ? -1 : 1));
  }
  CHECK(res(problem(1, P("z_1^3"), {})).is_zero());

  ResidueProblem s = problem(1, Polynomial(1), {});
  PolynomialBuilder b;
  for (int i = 0; i <= 3; ++i) b.add(Monomial(Variable::c(i)) * Monomial(Variable::z(1), -i), 1);
  s.series.emplace(Variable::z(1), b.build());
  CHECK(res(s) == P("-c1"));
}

TEST_CASE("single-variable exact backend") {
  const Variable z = Variable::z(1);
  FactoredRational f{P("z_1"), {{lam(1) - zv(1), 1}}};
  CHECK(residue_single_variable_exact(f, z).to_polynomial() == P("l_1"));
  FactoredRational g{Polynomial(1), {{lam(1) - zv(1), 1}, {lam(2) - zv(1), 1}}};
  CHECK(residue_single_variable_exact(g, z).to_polynomial().is_zero());
  FactoredRational h{P("z_1^-1"), {}};
  CHECK(residue_single_variable_exact(h, z).to_polynomial() == Polynomial(-1));
  FactoredRational rep{Polynomial(1), {{lam(1) - zv(1), 1}, {lam(1) - zv(1), 1}}};
  CHECK_THROWS_AS(residue_single_variable_exact(rep, z), CoincidentPoles);
  FactoredRational scaled{Polynomial(1), {{lam(1) - zv(1), 1}, {(lam(1) - zv(1)) * Rational(2), 1}}};
  CHECK_THROWS_AS(residue_single_variable_exact(scaled, z), CoincidentPoles);

  // The same inputs through the expansion engine.
  CHECK(res(problem(1, P("z_1"), {lam(1) - zv(1)})) == P("l_1"));
  CHECK(res(problem(1, Polynomial(1), {lam(1) - zv(1), lam(2) - zv(1)})).is_zero());
}

TEST_CASE("backend agreement on single-variable problems") {
  for (const auto& [label, p] : single_variable_problems()) {
    CAPTURE(label);
    CHECK(res(p) == exact_backend(p));
  }
}

TEST_CASE("Porteous integrands against a closed-form oracle") {
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k <= n + 2; ++k) {
      Polynomial num(1);
      for (int j = 1; j <= k; ++j) num *= P("-z_1") + Polynomial(Variable::theta(j));
      std::vector<LinearForm> den;
      for (int i = 1; i <= n; ++i) den.push_back(lam(i) - zv(1));
      CAPTURE(n);
      CAPTURE(k);
      CHECK(res(problem(1, num, den)) == porteous_oracle(num, n, k + 2));
    }
  }
}

TEST_CASE("truncation stability and instability detection") {
  for (const auto& [label, p] : engine_suite_problems()) {
    CAPTURE(label);
    const int J = suggested_order(p);
    CHECK(iterated_residue_at_order(p, J) == iterated_residue_at_order(p, J + 2));
  }
  // z2^6 z1^-4 / ((z1 - z2)^2 z1 z2) only settles to 5 from order 4 on.
  ResidueProblem p = problem(2, P("z_2^6*z_1^-4"), {zf({{1, 1}, {2, -1}}), zf({{1, 1}, {2, -1}}), zv(1), zv(2)});
  CHECK_THROWS_AS(iterated_residue(p, TruncationPolicy{1, 2}), TruncationUnstable);
  CHECK(iterated_residue(p, TruncationPolicy{suggested_order(p), 2}) == Polynomial(5));
}

TEST_CASE("product integrands factor") {
  // f1(z1) f2(z2): the iterated residue is the product of the one-variable ones.
  const Polynomial n1 = P("z_1^2 + t_1*z_1"), n2 = P("z_2^3 - l_1*z_2");
  const auto r1 = res(problem(1, n1, {lam(1) - zv(1), lam(2) - zv(1)}));
  ResidueProblem two = problem(2, n1 * n2, {lam(1) - zv(1), lam(2) - zv(1), lam(3) - zv(2), lam(2) - zv(2)});
  ResidueProblem p2 = problem(1, n2.map_variables([](Variable v) {
    return v == Variable::z(2) ? Variable::z(1) : v;
  }), {lam(3) - zv(1), lam(2) - zv(1)});
  CHECK(res(two) == r1 * res(p2));
}

TEST_CASE("linearity in the numerator") {
  std::mt19937_64 rng(5);
  const std::vector<LinearForm> den = {zf({{1, 2}, {2, -1}}), lam(1) - zv(1), lam(2) - zv(2), lam(1) - zv(2)};
  const Polynomial p1 = P("z_1^2*z_2"), p2 = P("z_2^3 + t_1*z_1");
  for (int s = 0; s < 5; ++s) {
    const Rational a = random_rational(rng), b = random_rational(rng);
    CHECK(res(problem(2, p1 * a + p2 * b, den)) == res(problem(2, p1, den)) * a + res(problem(2, p2, den)) * b);
  }
}

TEST_CASE("cofactors are equivalent to multiplying the numerator") {
  ResidueProblem a = problem(2, Polynomial(1), {zf({{1, 2}, {2, -1}}), lam(1) - zv(1), lam(2) - zv(2), lam(2) - zv(1)});
  a.cofactors = {P("z_1 - z_2"), P("t_1 - z_2"), P("t_1 - 2*z_1")};
  ResidueProblem b = a;
  b.cofactors.clear();
  b.numerator = P("z_1 - z_2") * P("t_1 - z_2") * P("t_1 - 2*z_1");
  CHECK(res(a) == res(b));
}

TEST_CASE("generic degrees and lead counts") {
  CHECK(deg_in_subset(P("z_1^2*z_2 + z_3"), {1, 2}) == 3);
  CHECK(deg_in_subset(Polynomial(5), {1}) == 0);
  CHECK(deg_in_subset(P("z_1") - P("z_1"), {1}) == kNegativeInfinity);
  const std::vector<LinearForm> fs = {zf({{1, 2}, {2, -1}}), zf({{1, 1}, {2, 1}, {3, -1}}), zf({{1, 2}, {3, -1}})};
  CHECK(lead_count(fs, 3) == 2);
  CHECK(lead_count(fs, 1) == 0);
  CHECK(lead_count({}, 2) == 0);
}

TEST_CASE("vanishing criterion examples") {
  // d = 2 non-distinguished term at n = k = 5.
  const auto terms = fixed_point_terms(2);
  const auto num = residue_form_numerator_factors(terms[1], 5);
  const auto den = residue_form_denominator(terms[1], 5);
  CHECK(vanishing_criterion(num, den, 2, 2));
  CHECK(res(residue_form_term(terms[1], 5, 5)).is_zero());
  Polynomial prod(1);
  for (const auto& f : num) prod *= f;
  CHECK(vanishing_criterion(prod, den, 2, 2));

  // Porteous with k >= n: numerator degree is not smaller.
  Polynomial pn(1);
  std::vector<LinearForm> pd;
  for (int j = 1; j <= 4; ++j) pn *= Polynomial(Variable::theta(j)) - P("z_1");
  for (int i = 1; i <= 3; ++i) pd.push_back(lam(i) - zv(1));
  CHECK_FALSE(vanishing_criterion(pn, pd, 1, 1));

  CHECK_FALSE(vanishing_criterion(Polynomial(1), {zv(1), zf({{1, 1}, {2, -1}})}, 1, 2));
}

TEST_CASE("vanishing criterion is sound on every fixed-point term") {
  for (int d = 2; d <= 3; ++d) {
    for (int n = d; n <= 5; ++n) {
      for (const auto& t : fixed_point_terms(d)) {
        const auto num = residue_form_numerator_factors(t, n);
        const auto den = residue_form_denominator(t, n);
        for (int l = 1; l <= d; ++l) {
          if (vanishing_criterion(num, den, l, d)) {
            CAPTURE(d);
            CAPTURE(n);
            CHECK(res(residue_form_term(t, n, n)).is_zero());
          }
        }
      }
    }
  }
}

TEST_CASE("problem JSON round trip and validation") {
  ResidueProblem p = problem(2, P("z_1*z_2"), {zf({{1, 2}, {2, -1}}), lam(1) - zv(2)});
  p.series.emplace(Variable::z(1), P("c0 + c1*z_1^-1"));
  const ResidueProblem q = residue_problem_from_json(to_json(p));
  CHECK(res(q) == res(p));
  ResidueProblem bad = problem(1, Polynomial(1), {lam(1)});
  CHECK_THROWS_AS(bad.validate(), PreconditionError);
  CHECK_THROWS_AS(iterated_residue(p, TruncationPolicy{0, 2}), PreconditionError);
}
