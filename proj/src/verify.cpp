#include "thomcalc/verify.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "thomcalc/errors.hpp"
#include "thomcalc/localization.hpp"
#include "thomcalc/multidegree.hpp"
#include "thomcalc/partitions.hpp"
#include "thomcalc/positivity.hpp"
#include "thomcalc/random.hpp"
#include "thomcalc/relations.hpp"

namespace thomcalc {

namespace {

// Number of pole-free random points (up to `samples`) at which the sum and
// the polynomial agree; -1 on the first disagreement. Points that hit a pole
// of the sum are redrawn, at most 10 * samples draws in total.
int agrees_at_random_points(const LocalizationSum& sum, const Polynomial& want, int n, int k,
                            std::mt19937_64& rng, int samples) {
  int good = 0;
  for (int draw = 0; good < samples && draw < 10 * samples; ++draw) {
    const Assignment pt = random_lambda_theta_point(n, k, rng);
    try {
      if (sum.evaluate(pt) != want.evaluate(pt)) return -1;
      ++good;
    } catch (const ZeroDenominator&) {
    }
  }
  return good;
}

class Recorder {
 public:
  explicit Recorder(VerifyReport& r) : r_(r) {}

  // Runs f; an exception counts as a failure with its message as detail.
  void check(const std::string& id, const std::function<bool(std::string&)>& f) {
    Check c{id, false, ""};
    try {
      c.passed = f(c.detail);
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = std::string("exception: ") + e.what();
    }
    r_.checks.push_back(std::move(c));
  }

  void equal(const std::string& id, const std::function<Polynomial()>& got, const Polynomial& want) {
    check(id, [&](std::string& detail) {
      Polynomial g = got();
      if (g == want) return true;
      detail = "got " + to_text(g) + ", expected " + to_text(want);
      return false;
    });
  }

 private:
  VerifyReport& r_;
};

Polynomial c(int i) { return Polynomial(Variable::c(i)); }
Polynomial eta(int i) { return Polynomial(Variable::eta(i)); }
Polynomial y(int i) { return Polynomial(Variable::y(i)); }

Polynomial random_z_polynomial(int d, int max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5), deg(0, max_degree), var(1, d);
  PolynomialBuilder b;
  const int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    const int e = deg(rng);
    for (int i = 0; i < e; ++i) m *= Monomial(Variable::z(var(rng)));
    b.add(m, coeff(rng));
  }
  Polynomial p = b.build();
  return p.is_zero() ? Polynomial(1) : p;
}

void classical_suite(Recorder& rec, const VerifyOptions& opt) {
  const QhatRegistry& reg = opt.registry;
  for (int j = 0; j <= 4; ++j) {
    rec.equal("porteous.j" + std::to_string(j), [&] { return thom_polynomial(1, j, reg).body; }, c(j + 1));
  }
  for (int j = 0; j <= 3; ++j) {
    rec.equal("ronga.j" + std::to_string(j), [&] { return thom_polynomial(2, j, reg).body; },
              ronga_reference(j).body);
  }
  rec.equal("td4", [&] { return thom_polynomial(4, 0, reg).body; },
            parse_polynomial("c1^4 + 6*c0*c1^2*c2 + 2*c0^2*c2^2 + 9*c0^2*c1*c3 + 6*c0^3*c4"));
  for (int d = 1; d <= 4; ++d) {
    for (int j = 1; j <= 2; ++j) {
      rec.check("shift.d" + std::to_string(d) + ".j" + std::to_string(j),
                [&](std::string&) { return shift_check(d, j, reg); });
    }
  }
  for (int d = 1; d <= 5; ++d) {
    for (int j = 0; j <= 2; ++j) {
      rec.check("structure.d" + std::to_string(d) + ".j" + std::to_string(j), [&](std::string& detail) {
        ChernStructure s = chern_structure(thom_polynomial(d, j, reg).body);
        detail = "factors " + std::to_string(s.factors) + ", weighted degree " + std::to_string(s.weighted_degree);
        return s.ok && s.factors == d && s.weighted_degree == d * (j + 1);
      });
    }
  }
  rec.check("dimension-table", [&](std::string& detail) {
    const int nhat[] = {0, 1, 3, 7, 13, 22}, q[] = {0, 0, 0, 1, 3, 7};
    for (int d = 1; d <= 6; ++d) {
      if (dim_Nhat(d) != nhat[d - 1] || deg_Qhat(d) != q[d - 1]) {
        detail = "mismatch at d = " + std::to_string(d);
        return false;
      }
    }
    return true;
  });

  const WeightedRing r3 = WeightedRing::standard(3);
  rec.equal("mdeg.example1", [&] { return multidegree_monomial(MonomialIdeal(3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 1}}), r3); },
            eta(1) * eta(2) * eta(3) * Rational(6));
  rec.equal("mdeg.example2", [&] { return multidegree_monomial(MonomialIdeal(3, {{2, 3, 1}}), r3); },
            eta(1) * Rational(2) + eta(2) * Rational(3) + eta(3));
  rec.equal("mdeg.example3",
            [&] { return multidegree_monomial(MonomialIdeal(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}), r3); },
            eta(1) * eta(2) + eta(2) * eta(3) + eta(1) * eta(3));
  rec.equal("mdeg.toric-groebner",
            [&] { return multidegree(PolynomialIdeal{{y(1) * y(3) - y(2) * y(4)}, {}}, parallelogram_ring()); },
            eta(1) + eta(3));
  rec.equal("mdeg.toric-localization", [] { return toric_localization_example(); }, eta(1) + eta(3));
  rec.equal("mdeg.toric-porteous", [] { return toric_porteous_example(); }, eta(1) + eta(3));

  for (const auto& [label, p] : engine_suite_problems()) {
    rec.check("engine.stability." + label, [&](std::string& detail) {
      const int order = suggested_order(p);
      Polynomial a = iterated_residue_at_order(p, order);
      Polynomial b = iterated_residue_at_order(p, order + 2);
      detail = "order " + std::to_string(order);
      return a == b;
    });
  }
  for (const auto& [label, p] : single_variable_problems()) {
    rec.check("engine.backend." + label, [&](std::string& detail) {
      Polynomial a = iterated_residue(p, TruncationPolicy{suggested_order(p), 2});
      Polynomial b = exact_backend(p);
      if (a == b) return true;
      detail = "expansion " + to_text(a) + ", pole sum " + to_text(b);
      return false;
    });
  }
}

void localization_suite(Recorder& rec, const VerifyOptions& opt) {
  const QhatRegistry& reg = opt.registry;
  std::mt19937_64 rng(opt.seed == 0 ? kDefaultSeed : opt.seed);

  rec.check("chern.n1k1", [&](std::string&) {
    const auto a = chern_classes(1, 1, 3);
    const Polynomial t = Polynomial(Variable::theta(1)), l = Polynomial(Variable::lambda(1));
    return a.values[1] == t - l && a.values[2] == -l * (t - l) && a.values[3] == l * l * (t - l);
  });
  for (int n = 1; n <= 3; ++n) {
    for (int k = n; k <= n + 1; ++k) {
      rec.check("porteous-sum.n" + std::to_string(n) + "k" + std::to_string(k), [&](std::string&) {
        const auto sum = porteous_localization_sum(n, k);
        const Polynomial want = substitute_chern(thom_polynomial(1, k - n, reg), n, k);
        return agrees_at_random_points(sum, want, n, k, rng, 5) == 5;
      });
    }
  }
  const int cases[4][3] = {{2, 2, 2}, {2, 2, 3}, {3, 3, 3}, {3, 3, 4}};
  for (const auto& cs : cases) {
    const int d = cs[0], n = cs[1], k = cs[2];
    rec.check("fixed-point.d" + std::to_string(d) + "n" + std::to_string(n) + "k" + std::to_string(k),
              [&](std::string& detail) {
                const auto sum = fixed_point_sum(d, n, k);
                const Polynomial want = substitute_chern(thom_polynomial(d, k - n, reg), n, k);
                const int good = agrees_at_random_points(sum, want, n, k, rng, 5);
                if (good < 5) {
                  detail = good < 0 ? "disagreement at a random point" : "ran out of pole-free points";
                  return false;
                }
                detail = "5 samples";
                return true;
              });
  }
  for (int d = 2; d <= 3; ++d) {
    rec.check("vanishing.d" + std::to_string(d) + "n5k5", [&](std::string& detail) {
      VanishingReport r = nondistinguished_vanishing_report(d, 5, 5);
      detail = std::to_string(r.zero_terms) + "/" + std::to_string(r.terms_checked) + " terms zero, criterion on " +
               std::to_string(r.criterion_hits);
      return r.terms_checked == (d == 2 ? 1 : 5) && r.all_zero() && r.criterion_everywhere();
    });
  }
  for (int i = 0; i < 10; ++i) {
    const int d = 1 + i % 3;
    const int n = d + static_cast<int>(rng() % 3);
    const Polynomial q = random_z_polynomial(d, 3, rng);
    rec.check("flag-residue." + std::to_string(i), [&](std::string& detail) {
      detail = "d=" + std::to_string(d) + " n=" + std::to_string(n) + " Q=" + to_text(q);
      return flag_residue_identity(q, n, d, rng, 3);
    });
  }
  rec.check("qhat5.division", [&](std::string& detail) {
    const Polynomial want =
        parse_polynomial("2*z_1^2 + 3*z_1*z_2 - 2*z_1*z_5 + 2*z_2*z_3 - z_2*z_4 - z_2*z_5 - z_3*z_4 + z_4*z_5");
    Qhat5Derivation s = qhat5_derivation_steps();
    detail = to_text(s.toric_part);
    return s.toric_part == want && s.weight == zform({{1, 2}, {2, 1}, {5, -1}});
  });
  rec.equal("qhat5.product", [] { return qhat5_derivation(); }, reg.get(5));
}

void relations_suite(Recorder& rec, const VerifyOptions&) {
  rec.check("admissible.d3", [&](std::string& detail) {
    const Partition p1{1}, p2{2}, p3{3}, p11{1, 1}, p12{1, 2}, p111{1, 1, 1};
    const std::vector<AdmissibleSequence> want = {{p1, p2, p3},  {p1, p2, p12},  {p1, p2, p11},  {p1, p2, p111},
                                                  {p1, p11, p2}, {p1, p11, p3}, {p1, p11, p12}, {p1, p11, p111}};
    auto got = enumerate_admissible(3);
    detail = std::to_string(got.size()) + " sequences";
    if (got.size() != want.size()) return false;
    for (const auto& w : want) {
      if (std::find(got.begin(), got.end(), w) == got.end()) return false;
    }
    return true;
  });
  rec.check("complete.d3", [&](std::string& detail) {
    int complete = 0;
    for (const auto& pi : enumerate_admissible(3)) {
      const bool excluded = pi == AdmissibleSequence{{1}, {2}, {1, 1, 1}} || pi == AdmissibleSequence{{1}, {1, 1}, {1, 2}};
      if (is_complete(pi) == excluded) {
        detail = "wrong verdict for " + to_string(pi);
        return false;
      }
      complete += is_complete(pi);
    }
    return complete == 6;
  });
  rec.check("relz.annihilation", [&](std::string& detail) {
    int pairs = 0;
    for (int d = 1; d <= 4; ++d) {
      for (const auto& rho : enumerate_admissible(d)) {
        for (const auto& tau : partitions_up_to(4)) {
          const Polynomial z = relz(rho, tau);
          for (int m = 1; m < d; ++m) {
            if (!apply_nR(z, m).is_zero()) {
              detail = "rho " + to_string(rho) + ", tau " + tau.to_string() + ", m " + std::to_string(m);
              return false;
            }
          }
          ++pairs;
        }
      }
    }
    detail = std::to_string(pairs) + " pairs";
    return true;
  });
  rec.check("z-quadratic.reference", [&](std::string& detail) {
    for (const auto& rho : partitions_up_to(4)) {
      for (const auto& tau : partitions_up_to(4)) {
        const int m = rho.sum() + tau.sum();
        if (m > 5) continue;
        if (!is_zero(eval_at_reference(z_quadratic(rho, tau, m)))) {
          detail = rho.to_string() + " " + tau.to_string();
          return false;
        }
      }
    }
    return true;
  });
  for (int d = 1; d <= 5; ++d) {
    rec.check("basic-relations.d" + std::to_string(d), [&](std::string& detail) {
      int toric = 0, other = 0;
      for (const auto& r : basic_relations(d)) {
        if (!is_zero(eval_at_hat_reference(r.poly))) return false;
        if (relation_weight(r.poly) != r.weight) return false;
        (r.toric ? toric : other)++;
      }
      detail = std::to_string(toric) + " toric, " + std::to_string(other) + " other";
      const int want_toric[] = {0, 0, 0, 1, 3}, want_other[] = {0, 0, 0, 0, 1};
      return toric == want_toric[d - 1] && other == want_other[d - 1];
    });
  }
  rec.check("basic-relations.d4-exact", [&](std::string&) {
    const auto rs = basic_relations(4);
    const Polynomial want = parse_polynomial("u_{1,1}^{2}*u_{2,2}^{4} - u_{1,2}^{3}*u_{1,3}^{4}");
    return rs.size() == 1 && (rs[0].poly == want || rs[0].poly == -want) &&
           rs[0].weight == zform({{1, 2}, {2, 1}, {4, -1}});
  });
  rec.check("d6-quartic.weight", [&](std::string&) {
    return relation_weight(d6_quartic_relation().poly) ==
           zform({{1, 2}, {2, 3}, {3, 3}, {4, -2}, {5, -1}, {6, -1}});
  });
}

void positivity_suite(Recorder& rec, const VerifyOptions& opt) {
  for (int d = 1; d <= 5; ++d) {
    for (int j = 0; j <= 2; ++j) {
      rec.check("tp-positivity.d" + std::to_string(d) + ".j" + std::to_string(j), [&](std::string& detail) {
        const bool pos = tp_positivity(thom_polynomial(d, j, opt.registry));
        detail = pos ? "nonnegative" : "negative coefficient";
        // d = 5 is an observation, not a theorem: report without failing.
        if (d == 5) {
          detail = "reported: " + detail;
          return true;
        }
        return pos;
      });
    }
  }
  for (int d = 2; d <= 5; ++d) {
    if (!opt.registry.has(d)) continue;
    rec.check("expansion.d" + std::to_string(d) + ".order12", [&](std::string& detail) {
      PositivityReport r = positivity_expansion(d, 12, opt.registry);
      detail = std::to_string(r.terms) + " terms, min " + r.min_coeff.get_str() + " at " + to_text(r.witness);
      if (d == 5) {
        detail = "reported: " + detail;
        return true;
      }
      return r.nonnegative();
    });
  }
}

}  // namespace

bool VerifyReport::ok() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> s = {"classical", "localization", "relations", "positivity", "all"};
  return s;
}

VerifyReport run_verify(const std::string& suite, const VerifyOptions& options) {
  VerifyReport report;
  report.suite = suite;
  Recorder rec(report);
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "classical") known = true, classical_suite(rec, options);
  if (all || suite == "localization") known = true, localization_suite(rec, options);
  if (all || suite == "relations") known = true, relations_suite(rec, options);
  if (all || suite == "positivity") known = true, positivity_suite(rec, options);
  if (!known) throw PreconditionError("unknown suite '" + suite + "'");
  return report;
}

std::string to_text(const VerifyReport& report) {
  std::ostringstream out;
  int passed = 0;
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.id;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
    passed += c.passed;
  }
  out << report.suite << ": " << passed << "/" << report.checks.size() << " checks passed\n";
  return out.str();
}

json to_json(const VerifyReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"id", c.id}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
  }
  return {{"suite", report.suite}, {"checks", checks}, {"ok", report.ok()}};
}

std::vector<std::pair<std::string, ResidueProblem>> engine_suite_problems() {
  std::vector<std::pair<std::string, ResidueProblem>> out;
  for (int d = 1; d <= 4; ++d) {
    for (int j = 0; j <= 2; ++j) {
      out.emplace_back("tp.d" + std::to_string(d) + ".j" + std::to_string(j), thom_problem(d, j, qhat(d)));
    }
  }
  for (int d = 2; d <= 3; ++d) {
    const auto terms = fixed_point_terms(d);
    for (std::size_t t = 0; t < terms.size(); ++t) {
      out.emplace_back("fixed-point.d" + std::to_string(d) + ".t" + std::to_string(t),
                       residue_form_term(terms[t], 3, 3));
    }
  }
  for (auto& p : single_variable_problems()) out.push_back(std::move(p));
  return out;
}

std::vector<std::pair<std::string, ResidueProblem>> single_variable_problems() {
  std::vector<std::pair<std::string, ResidueProblem>> out;
  const Variable z = Variable::z(1);
  for (int n = 1; n <= 3; ++n) {
    for (int k = n; k <= n + 2; ++k) {
      ResidueProblem p;
      p.variables = {z};
      for (int j = 1; j <= k; ++j) {
        p.cofactors.push_back(Polynomial(Variable::theta(j)) - Polynomial(z));
      }
      for (int i = 1; i <= n; ++i) {
        p.denominator.push_back({LinearForm::variable(Variable::lambda(i)) - LinearForm::variable(z), 1});
      }
      out.emplace_back("porteous.n" + std::to_string(n) + "k" + std::to_string(k), std::move(p));
    }
  }
  for (int j = 0; j <= 3; ++j) {
    out.emplace_back("tp.d1.j" + std::to_string(j) + ".exact", thom_problem(1, j, Polynomial(1)));
  }
  ResidueProblem q;
  q.variables = {z};
  q.numerator = Polynomial(z, 3) + Polynomial(Variable::lambda(1)) * Polynomial(z);
  q.denominator = {{LinearForm::variable(Variable::lambda(1)) - LinearForm::variable(z), 1},
                   {LinearForm::variable(z, 2) - LinearForm::variable(Variable::lambda(2)), 1},
                   {LinearForm::variable(z), 1}};
  out.emplace_back("mixed-origin", std::move(q));
  return out;
}

Polynomial exact_backend(const ResidueProblem& p) {
  if (p.variables.size() != 1) throw PreconditionError("exact backend needs a one-variable problem");
  const Variable z = p.variables.front();
  FactoredRational f;
  f.numerator = p.numerator;
  for (const auto& c : p.cofactors) f.numerator *= c;
  auto it = p.series.find(z);
  if (it != p.series.end()) f.numerator *= it->second;
  f.denominator = p.denominator;
  return residue_single_variable_exact(f, z).to_polynomial();
}

}  // namespace thomcalc
