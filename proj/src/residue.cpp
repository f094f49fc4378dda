#include "thomcalc/residue.hpp"

#include <algorithm>

#include "thomcalc/errors.hpp"

namespace thomcalc {

namespace {

// Position of the last listed variable with a nonzero coefficient in f, or -1.
int top_position(const LinearForm& f, const std::vector<Variable>& vars) {
  for (int i = static_cast<int>(vars.size()) - 1; i >= 0; --i) {
    if (f.involves(vars[i])) return i;
  }
  return -1;
}

int top_position(const Polynomial& p, const std::vector<Variable>& vars) {
  for (int i = static_cast<int>(vars.size()) - 1; i >= 0; --i) {
    if (p.involves(vars[i])) return i;
  }
  return -1;
}

// One copy of 1/(a z_q + rest): the j-th expansion term is
// (-1)^j rest^j / a^{j+1} * z_q^{-(j+1)}.
struct Expansion {
  Rational inv_a;
  Polynomial rest;
  std::vector<Polynomial> coeffs;  // coeffs[j] = (-1)^j rest^j / a^{j+1}

  const Polynomial& coeff(int j) {
    while (static_cast<int>(coeffs.size()) <= j) {
      if (coeffs.empty()) {
        coeffs.emplace_back(inv_a);
      } else {
        coeffs.push_back(coeffs.back() * rest * Rational(-inv_a));
      }
    }
    return coeffs[j];
  }
};

using Layers = std::map<int, Polynomial>;

}  // namespace

std::vector<Variable> ResidueProblem::z_range(int d) {
  std::vector<Variable> v;
  for (int i = 1; i <= d; ++i) v.push_back(Variable::z(i));
  return v;
}

void ResidueProblem::validate() const {
  std::set<Variable> listed(variables.begin(), variables.end());
  if (listed.size() != variables.size()) throw PreconditionError("repeated residue variable");
  for (const auto& f : denominator) {
    if (f.multiplicity < 1) throw PreconditionError("denominator multiplicity must be positive");
    if (top_position(f.form, variables) < 0) {
      throw PreconditionError("denominator factor " + to_text(f.form) +
                              " involves no residue variable");
    }
  }
  for (const auto& [v, s] : series) {
    if (!listed.count(v)) throw PreconditionError("series attached to unlisted variable " + v.name());
    for (Variable w : variables) {
      if (w != v && s.involves(w)) {
        throw PreconditionError("series for " + v.name() + " involves " + w.name());
      }
    }
  }
}

Polynomial iterated_residue_at_order(const ResidueProblem& problem, int order) {
  problem.validate();
  if (order < 0) throw PreconditionError("negative truncation order");
  const auto& vars = problem.variables;
  const int d = static_cast<int>(vars.size());

  std::vector<std::vector<Expansion>> expansions(d);
  for (const auto& f : problem.denominator) {
    int pos = top_position(f.form, vars);
    Variable zq = vars[pos];
    Expansion e;
    e.inv_a = 1 / f.form.coefficient(zq);
    e.rest = f.form.without(zq).to_polynomial();
    for (int k = 0; k < f.multiplicity; ++k) expansions[pos].push_back(e);
  }
  std::vector<std::vector<const Polynomial*>> cofactors(d + 1);
  for (const auto& c : problem.cofactors) {
    int pos = top_position(c, vars);
    cofactors[pos < 0 ? d : pos].push_back(&c);
  }

  Polynomial F = problem.numerator;
  for (int q = d - 1; q >= 0 && !F.is_zero(); --q) {
    Variable zq = vars[q];
    for (const Polynomial* c : cofactors[q]) F *= *c;

    // Exponents the factor product must land on so that the series supplies
    // the rest of z_q^{-1}.
    Layers series;
    auto sit = problem.series.find(zq);
    if (sit != problem.series.end()) {
      series = sit->second.split_by(zq);
    } else {
      series.emplace(0, Polynomial(1));
    }
    if (series.empty()) {
      F = Polynomial();
      break;
    }
    const int lo = -1 - series.rbegin()->first;
    const int hi = -1 - series.begin()->first;

    auto& exps = expansions[q];
    int remaining = static_cast<int>(exps.size());
    Layers G;
    for (auto& [e, p] : F.split_by(zq)) {
      if (e - remaining >= lo) G.emplace(e, std::move(p));
    }
    for (auto& ex : exps) {
      --remaining;
      std::map<int, PolynomialBuilder> next;
      for (const auto& [e, p] : G) {
        for (int j = 0; j <= order; ++j) {
          int ne = e - (j + 1);
          if (ne - remaining < lo) break;
          next[ne].add_product(p, ex.coeff(j));
        }
      }
      G.clear();
      for (auto& [e, b] : next) {
        Polynomial p = b.build();
        if (!p.is_zero()) G.emplace(e, std::move(p));
      }
      if (G.empty()) break;
    }

    PolynomialBuilder out;
    for (const auto& [e, p] : G) {
      if (e < lo || e > hi) continue;
      auto s = series.find(-1 - e);
      if (s != series.end()) out.add_product(p, s->second);
    }
    F = out.build();
  }
  for (const Polynomial* c : cofactors[d]) F *= *c;
  if (d % 2 == 1) F = -F;
  return F;
}

Polynomial iterated_residue(const ResidueProblem& problem, const TruncationPolicy& policy) {
  if (policy.base_order < 1 || policy.validation_increment < 1) {
    throw PreconditionError("truncation policy orders must be positive");
  }
  Polynomial a = iterated_residue_at_order(problem, policy.base_order);
  Polynomial b = iterated_residue_at_order(problem, policy.base_order + policy.validation_increment);
  if (a != b) {
    throw TruncationUnstable("residue differs between orders " + std::to_string(policy.base_order) +
                             " and " +
                             std::to_string(policy.base_order + policy.validation_increment));
  }
  return a;
}

int suggested_order(const ResidueProblem& p) {
  std::set<Variable> vars(p.variables.begin(), p.variables.end());
  auto zdeg = [&](const Polynomial& q) {
    int best = 0;
    for (const auto& t : q.terms()) {
      int s = 0;
      for (const auto& [v, e] : t.mono.factors()) {
        if (vars.count(v)) s += e;
      }
      best = std::max(best, s);
    }
    return best;
  };
  int order = zdeg(p.numerator);
  for (const auto& c : p.cofactors) order += zdeg(c);
  for (const auto& [v, s] : p.series) {
    if (!s.is_zero()) order += s.degree_in(v) - s.min_degree_in(v);
  }
  for (const auto& f : p.denominator) order += f.multiplicity;
  return order + static_cast<int>(p.variables.size());
}

int deg_in_subset(const Polynomial& p, const std::set<int>& S) {
  if (p.is_zero()) return kNegativeInfinity;
  int best = kNegativeInfinity;
  for (const auto& t : p.terms()) {
    int deg = 0;
    for (const auto& [v, e] : t.mono.factors()) {
      if (v.family() == Family::z && S.count(v.index())) deg += e;
    }
    best = std::max(best, deg);
  }
  return best;
}

int deg_in_subset(const std::vector<LinearForm>& factors, const std::set<int>& S) {
  int n = 0;
  for (const auto& f : factors) {
    bool hit = false;
    for (const auto& [v, c] : f.coeffs()) {
      if (v.family() == Family::z && S.count(v.index())) hit = true;
    }
    if (hit) ++n;
  }
  return n;
}

int lead_count(const std::vector<LinearForm>& factors, int m) {
  return static_cast<int>(std::count_if(factors.begin(), factors.end(), [m](const LinearForm& f) {
    auto top = f.top_z();
    return top && *top == m;
  }));
}

bool vanishing_criterion(const Polynomial& p, const std::vector<LinearForm>& factors, int l, int d) {
  if (l < 1 || l > d) throw PreconditionError("level out of range");
  if (p.is_zero()) return true;
  std::set<int> tail;
  for (int i = l; i <= d; ++i) tail.insert(i);
  if (deg_in_subset(p, tail) + d - l + 1 < deg_in_subset(factors, tail)) return true;
  int ql = deg_in_subset(factors, std::set<int>{l});
  return deg_in_subset(p, std::set<int>{l}) + 1 < ql && ql == lead_count(factors, l);
}

json to_json(const ResidueProblem& problem) {
  json j;
  j["variables"] = json::array();
  for (Variable v : problem.variables) j["variables"].push_back(v.name());
  Polynomial num = problem.numerator;
  for (const auto& c : problem.cofactors) num *= c;
  j["numerator"] = to_json(num);
  j["denominator"] = json::array();
  for (const auto& f : problem.denominator) {
    json fj = to_json(f.form);
    fj["mult"] = f.multiplicity;
    j["denominator"].push_back(fj);
  }
  j["series"] = json::object();
  for (const auto& [v, s] : problem.series) j["series"][v.name()] = to_json(s);
  return j;
}

ResidueProblem residue_problem_from_json(const json& j) {
  ResidueProblem p;
  try {
    if (j.contains("variables")) {
      for (const auto& v : j.at("variables")) p.variables.push_back(parse_variable(v.get<std::string>()));
    } else {
      p.variables = ResidueProblem::z_range(j.at("d").get<int>());
    }
    if (j.contains("numerator")) p.numerator = polynomial_from_json(j["numerator"]);
    if (j.contains("denominator")) {
      for (const auto& f : j["denominator"]) {
        int mult = f.value("mult", 1);
        p.denominator.push_back({linear_form_from_json(f), mult});
      }
    }
    if (j.contains("series")) {
      for (const auto& [name, s] : j["series"].items()) {
        p.series[parse_variable(name)] = polynomial_from_json(s);
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad residue problem JSON: ") + e.what());
  }
  p.validate();
  return p;
}

}  // namespace thomcalc
