#include "thomcalc/multidegree.hpp"

#include <algorithm>
#include <functional>

#include "thomcalc/errors.hpp"
#include "thomcalc/polynomial_io.hpp"

namespace thomcalc {

namespace {

bool dominated(const ExponentVector& g, const ExponentVector& a) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] > a[i]) return false;
  }
  return true;
}

std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ExponentVector> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < gens.size() && !redundant; ++k) {
      if (k != i && dominated(gens[k], gens[i])) redundant = true;
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

// Calls f on every size-s subset of {0..n-1}, in lexicographic order.
void for_each_subset(std::size_t n, std::size_t s, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == s) {
      f(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

bool hits_all(const std::vector<ExponentVector>& gens, const std::vector<std::size_t>& set) {
  for (const auto& g : gens) {
    bool hit = false;
    for (std::size_t i : set) hit = hit || g[i] > 0;
    if (!hit) return false;
  }
  return true;
}

LinearForm eta(int i) { return LinearForm::variable(Variable::eta(i)); }

LinearForm eta4_substituted() { return eta(1) + eta(3) - eta(2); }

}  // namespace

WeightedRing WeightedRing::standard(int n) {
  WeightedRing r;
  for (int i = 1; i <= n; ++i) {
    r.coords.push_back(Variable::y(i));
    r.weights.push_back(eta(i));
  }
  return r;
}

std::size_t WeightedRing::position(Variable v) const {
  auto it = std::find(coords.begin(), coords.end(), v);
  if (it == coords.end()) throw PreconditionError("variable " + v.name() + " is not a ring coordinate");
  return static_cast<std::size_t>(it - coords.begin());
}

LinearForm WeightedRing::weight(const Monomial& m) const {
  LinearForm w;
  for (const auto& [v, e] : m.factors()) w = w + weights.at(position(v)) * Rational(e);
  return w;
}

MonomialIdeal::MonomialIdeal(std::size_t num_vars, std::vector<ExponentVector> generators) : n_(num_vars) {
  for (const auto& g : generators) {
    if (g.size() != n_) throw PreconditionError("exponent vector length does not match the ring");
    for (int e : g) {
      if (e < 0) throw PreconditionError("negative exponent in a monomial ideal");
    }
  }
  gens_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::from_monomials(const WeightedRing& ring, const std::vector<Monomial>& gens) {
  std::vector<ExponentVector> vs;
  for (const auto& m : gens) {
    ExponentVector a(ring.size(), 0);
    for (const auto& [v, e] : m.factors()) a[ring.position(v)] = e;
    vs.push_back(std::move(a));
  }
  return MonomialIdeal(ring.size(), std::move(vs));
}

bool MonomialIdeal::contains(const ExponentVector& a) const {
  for (const auto& g : gens_) {
    if (dominated(g, a)) return true;
  }
  return false;
}

bool MonomialIdeal::is_unit() const { return contains(ExponentVector(n_, 0)); }

int MonomialIdeal::codim() const {
  if (is_unit()) return -1;
  for (std::size_t s = 0; s <= n_; ++s) {
    bool found = false;
    for_each_subset(n_, s, [&](const std::vector<std::size_t>& set) {
      if (!found && hits_all(gens_, set)) found = true;
    });
    if (found) return static_cast<int>(s);
  }
  return -1;  // unreachable: the full coordinate set hits every non-unit generator
}

std::vector<std::vector<std::size_t>> MonomialIdeal::top_components() const {
  std::vector<std::vector<std::size_t>> out;
  const int s = codim();
  if (s < 0) return out;
  for_each_subset(n_, static_cast<std::size_t>(s), [&](const std::vector<std::size_t>& set) {
    if (hits_all(gens_, set)) out.push_back(set);
  });
  return out;
}

Polynomial euler_class(const WeightedRing& ring) {
  Polynomial p(1);
  for (const auto& w : ring.weights) p *= w.to_polynomial();
  return p;
}

long subspace_multiplicity(const MonomialIdeal& m, const std::vector<std::size_t>& coords) {
  for (std::size_t i : coords) {
    if (i >= m.num_vars()) throw PreconditionError("coordinate index out of range");
  }
  // Localizing at the generic point inverts the other coordinates.
  std::vector<ExponentVector> local;
  for (const auto& g : m.generators()) {
    ExponentVector a;
    for (std::size_t i : coords) a.push_back(g[i]);
    local.push_back(std::move(a));
  }
  MonomialIdeal loc(coords.size(), std::move(local));
  if (loc.is_unit()) return 0;
  ExponentVector bound(coords.size(), -1);
  for (const auto& g : loc.generators()) {
    std::size_t nz = 0, where = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] > 0) {
        ++nz;
        where = i;
      }
    }
    if (nz == 1) bound[where] = g[where];
  }
  for (std::size_t i = 0; i < bound.size(); ++i) {
    if (bound[i] < 0) throw InfiniteMultiplicity("unbounded staircase in coordinate " + std::to_string(coords[i] + 1));
  }
  long count = 0;
  ExponentVector a(coords.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == a.size()) {
      if (!loc.contains(a)) ++count;
      return;
    }
    for (int e = 0; e < bound[i]; ++e) {
      a[i] = e;
      rec(i + 1);
    }
    a[i] = 0;
  };
  rec(0);
  return count;
}

Polynomial multidegree_monomial(const MonomialIdeal& m, const WeightedRing& ring) {
  if (m.num_vars() != ring.size()) throw PreconditionError("ideal and ring sizes differ");
  PolynomialBuilder out;
  for (const auto& comp : m.top_components()) {
    Polynomial term(Rational(subspace_multiplicity(m, comp)));
    for (std::size_t i : comp) term *= ring.weights[i].to_polynomial();
    out.add(term);
  }
  return out.build();
}

void validate_homogeneous(const PolynomialIdeal& ideal, const WeightedRing& ring) {
  for (std::size_t g = 0; g < ideal.generators.size(); ++g) {
    const auto& terms = ideal.generators[g].terms();
    if (terms.empty()) continue;
    const LinearForm w0 = ring.weight(terms.front().mono);
    for (const auto& t : terms) {
      if (ring.weight(t.mono) != w0) {
        throw InhomogeneousInput("generator " + std::to_string(g + 1) + " (" + to_text(ideal.generators[g]) +
                                 ") is not weight-homogeneous: " + to_text(terms.front().mono) + " vs " +
                                 to_text(t.mono));
      }
    }
  }
}

Polynomial multidegree_of_initial_ideal(const PolynomialIdeal& ideal, const WeightedRing& ring) {
  PolynomialIdeal I = ideal;
  if (I.order.empty()) I.order = ring.coords;
  std::vector<Monomial> lead;
  for (const auto& g : buchberger_lex(I)) lead.push_back(leading_monomial(g, I.order));
  return multidegree_monomial(MonomialIdeal::from_monomials(ring, lead), ring);
}

Polynomial multidegree(const PolynomialIdeal& ideal, const WeightedRing& ring) {
  validate_homogeneous(ideal, ring);
  return multidegree_of_initial_ideal(ideal, ring);
}

LinearReduction reduce_by_linear_generator(const PolynomialIdeal& ideal, const WeightedRing& ring, Variable yj,
                                           const Polynomial& f) {
  if (f.involves(yj)) throw PreconditionError("f must not involve " + yj.name());
  const std::size_t pos = ring.position(yj);
  const Polynomial gen = Polynomial(yj) - f;
  auto it = std::find_if(ideal.generators.begin(), ideal.generators.end(),
                         [&](const Polynomial& g) { return g == gen || g == -gen; });
  if (it == ideal.generators.end()) throw PreconditionError("ideal has no generator " + to_text(gen));

  LinearReduction out;
  out.factor = ring.weights[pos];
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (i == pos) continue;
    out.ring.coords.push_back(ring.coords[i]);
    out.ring.weights.push_back(ring.weights[i]);
  }
  for (Variable v : ideal.order) {
    if (v != yj) out.ideal.order.push_back(v);
  }
  for (auto g = ideal.generators.begin(); g != ideal.generators.end(); ++g) {
    if (g == it) continue;
    Polynomial h = g->substitute(yj, f);
    if (!h.is_zero()) out.ideal.generators.push_back(std::move(h));
  }
  return out;
}

WeightedRing parallelogram_ring() {
  WeightedRing r = WeightedRing::standard(4);
  r.weights[3] = eta4_substituted();
  return r;
}

LocalizationSum toric_fixed_point_sum() {
  // Vertex i contributes prod_{s != i} eta_s over its two edge weights.
  const int edges[4][2] = {{2, 4}, {1, 3}, {2, 4}, {1, 3}};
  LocalizationSum s;
  for (int i = 1; i <= 4; ++i) {
    FactoredRational t;
    t.numerator = Polynomial(1);
    for (int k = 1; k <= 4; ++k) {
      if (k != i) t.numerator *= eta(k).to_polynomial();
    }
    for (int e : edges[i - 1]) t.denominator.push_back({eta(e) - eta(i), 1});
    s.terms.push_back(std::move(t));
  }
  return s;
}

Assignment parallelogram_point(const Rational& e1, const Rational& e2, const Rational& e3) {
  return {{Variable::eta(1), e1}, {Variable::eta(2), e2}, {Variable::eta(3), e3}, {Variable::eta(4), e1 + e3 - e2}};
}

Polynomial toric_localization_example() {
  LocalizationSum s = toric_fixed_point_sum();
  const Variable e4 = Variable::eta(4);
  for (auto& t : s.terms) {
    t.numerator = t.numerator.substitute(e4, eta4_substituted().to_polynomial());
    for (auto& f : t.denominator) f.form = f.form.substitute(e4, eta4_substituted());
  }
  return s.simplify();
}

Polynomial toric_porteous_example() {
  return porteous_sum_from_weights({{eta(1), eta(2)}, {eta4_substituted(), eta(3)}}).simplify();
}

}  // namespace thomcalc
