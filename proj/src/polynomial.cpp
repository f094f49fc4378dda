#include "thomcalc/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "thomcalc/errors.hpp"

namespace thomcalc {

Rational make_rational(long num, long den) {
  if (den == 0) throw ZeroDenominator("zero denominator in rational literal");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw ParseError("empty rational");
  s = s.substr(b, e - b + 1);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  auto valid = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = (allow_sign && part[0] == '-') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num, true) || !valid(den, false)) throw ParseError("malformed rational '" + s + "'");
  Rational q;
  q.get_num() = mpz_class(num);
  q.get_den() = mpz_class(den);
  if (sgn(q.get_den()) == 0) throw ZeroDenominator("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational pow(const Rational& q, int e) {
  if (e < 0) {
    if (is_zero(q)) throw ZeroDenominator("zero to a negative power");
    Rational inv = 1 / q;
    return pow(inv, -e);
  }
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

namespace {

bool term_before(const Term& x, const Term& y) { return canonical_before(x.mono, y.mono); }

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (!thomcalc::is_zero(c)) terms_.push_back({Monomial(), c});
}

Polynomial::Polynomial(Variable v, int e) { terms_.push_back({Monomial(v, e), 1}); }

Polynomial::Polynomial(const Monomial& m, const Rational& c) {
  if (!thomcalc::is_zero(c)) terms_.push_back({m, c});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  PolynomialBuilder b;
  for (auto& t : terms) b.add(std::move(t.mono), t.coeff);
  return b.build();
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.mono.is_polynomial(); });
}

Rational Polynomial::constant_term() const { return coefficient(Monomial()); }

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return 0;
}

int Polynomial::degree() const {
  int d = -1;
  bool first = true;
  for (const auto& t : terms_) {
    int td = t.mono.degree();
    if (first || td > d) d = td;
    first = false;
  }
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.mono.degree() == d; });
}

int Polynomial::degree_in(Variable v) const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    int e = t.mono.exponent(v);
    if (first || e > d) d = e;
    first = false;
  }
  return d;
}

int Polynomial::min_degree_in(Variable v) const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    int e = t.mono.exponent(v);
    if (first || e < d) d = e;
    first = false;
  }
  return d;
}

std::vector<Variable> Polynomial::variables() const {
  std::set<Variable> vs;
  for (const auto& t : terms_) {
    for (const auto& f : t.mono.factors()) vs.insert(f.first);
  }
  return {vs.begin(), vs.end()};
}

bool Polynomial::involves(Variable v) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [v](const Term& t) { return t.mono.exponent(v) != 0; });
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae && b != be) {
    if (term_before(*a, *b)) {
      out.push_back(std::move(*a++));
    } else if (term_before(*b, *a)) {
      out.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (!thomcalc::is_zero(c)) out.push_back({std::move(a->mono), c});
      ++a;
      ++b;
    }
  }
  for (; a != ae; ++a) out.push_back(std::move(*a));
  for (; b != be; ++b) out.push_back(*b);
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
  if (x.is_zero() || y.is_zero()) return {};
  if (y.terms_.size() == 1) return x.mul_monomial(y.terms_[0].mono, y.terms_[0].coeff);
  if (x.terms_.size() == 1) return y.mul_monomial(x.terms_[0].mono, x.terms_[0].coeff);
  PolynomialBuilder b;
  b.add_product(x, y);
  return b.build();
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (thomcalc::is_zero(c)) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial Polynomial::mul_monomial(const Monomial& m, const Rational& c) const {
  Polynomial r;
  if (thomcalc::is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves degree differences but not the
  // reverse-lex tie-break in general, so re-sort.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  std::sort(r.terms_.begin(), r.terms_.end(), term_before);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Rational Polynomial::evaluate(const Assignment& values) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (const auto& [var, e] : t.mono.factors()) {
      auto it = values.find(var);
      if (it == values.end()) throw UnassignedVariable("no value for " + var.name());
      v *= thomcalc::pow(it->second, e);
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::evaluate_partial(const Assignment& values) const {
  PolynomialBuilder b;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    std::vector<Monomial::Factor> rest;
    for (const auto& [var, e] : t.mono.factors()) {
      auto it = values.find(var);
      if (it == values.end()) {
        rest.emplace_back(var, e);
      } else {
        c *= thomcalc::pow(it->second, e);
      }
    }
    b.add(Monomial::from_factors(std::move(rest)), c);
  }
  return b.build();
}

Polynomial Polynomial::substitute(Variable v, const Polynomial& p) const {
  return substitute(std::map<Variable, Polynomial>{{v, p}});
}

Polynomial Polynomial::substitute(const std::map<Variable, Polynomial>& subs) const {
  // Cache powers per variable.
  std::map<std::pair<Variable, int>, Polynomial> powers;
  auto power_of = [&](Variable v, const Polynomial& p, int e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    Polynomial r;
    if (e >= 0) {
      r = p.pow(static_cast<unsigned>(e));
    } else {
      if (p.size() != 1) {
        throw PreconditionError("cannot substitute a non-monomial for a negative power of " +
                                v.name());
      }
      Monomial inv = p.terms()[0].mono.pow(e);
      r = Polynomial(inv, thomcalc::pow(p.terms()[0].coeff, e));
    }
    return powers.emplace(key, std::move(r)).first->second;
  };
  PolynomialBuilder b;
  for (const auto& t : terms_) {
    std::vector<Monomial::Factor> kept;
    Polynomial acc(t.coeff);
    for (const auto& [var, e] : t.mono.factors()) {
      auto it = subs.find(var);
      if (it == subs.end()) {
        kept.emplace_back(var, e);
      } else {
        acc = acc * power_of(var, it->second, e);
      }
    }
    Monomial km = Monomial::from_factors(std::move(kept));
    for (const auto& at : acc.terms()) b.add(at.mono * km, at.coeff);
  }
  return b.build();
}

Polynomial Polynomial::map_variables(const std::function<Variable(Variable)>& f) const {
  PolynomialBuilder b;
  for (const auto& t : terms_) {
    std::vector<Monomial::Factor> fs;
    fs.reserve(t.mono.factors().size());
    for (const auto& [v, e] : t.mono.factors()) fs.emplace_back(f(v), e);
    b.add(Monomial::from_factors(std::move(fs)), t.coeff);
  }
  return b.build();
}

Polynomial Polynomial::coefficient_of(Variable v, int e) const {
  Polynomial r;
  for (const auto& t : terms_) {
    if (t.mono.exponent(v) == e) r.terms_.push_back({t.mono.without(v), t.coeff});
  }
  std::sort(r.terms_.begin(), r.terms_.end(), term_before);
  return r;
}

std::map<int, Polynomial> Polynomial::split_by(Variable v) const {
  std::map<int, Polynomial> out;
  for (const auto& t : terms_) {
    out[t.mono.exponent(v)].terms_.push_back({t.mono.without(v), t.coeff});
  }
  for (auto& [e, p] : out) std::sort(p.terms_.begin(), p.terms_.end(), term_before);
  return out;
}

void PolynomialBuilder::add(const Monomial& m, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = acc_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) acc_.erase(it);
  }
}

void PolynomialBuilder::add(Monomial&& m, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = acc_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) acc_.erase(it);
  }
}

void PolynomialBuilder::add(const Polynomial& p) {
  for (const auto& t : p.terms()) add(t.mono, t.coeff);
}

void PolynomialBuilder::add_product(const Polynomial& x, const Polynomial& y) {
  Rational c;
  for (const auto& a : x.terms()) {
    for (const auto& b : y.terms()) {
      c = a.coeff * b.coeff;
      add(a.mono * b.mono, c);
    }
  }
}

Polynomial PolynomialBuilder::build() {
  std::vector<Term> terms;
  terms.reserve(acc_.size());
  for (auto& [m, c] : acc_) {
    if (!is_zero(c)) terms.push_back({m, c});
  }
  acc_.clear();
  std::sort(terms.begin(), terms.end(), term_before);
  Polynomial p;
  // Terms are already unique and sorted.
  p = Polynomial::from_sorted_unique(std::move(terms));
  return p;
}

Polynomial product(const std::vector<Polynomial>& factors) {
  Polynomial r(1);
  for (const auto& f : factors) r *= f;
  return r;
}

}  // namespace thomcalc
