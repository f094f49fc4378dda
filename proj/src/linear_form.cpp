#include "thomcalc/linear_form.hpp"

#include <algorithm>
#include <map>

#include "thomcalc/errors.hpp"

namespace thomcalc {

LinearForm::LinearForm(const Rational& constant, std::vector<Entry> coeffs) : constant_(constant) {
  std::map<Variable, Rational> acc;
  for (auto& [v, c] : coeffs) acc[v] += c;
  for (auto& [v, c] : acc) {
    if (!thomcalc::is_zero(c)) coeffs_.emplace_back(v, c);
  }
}

LinearForm LinearForm::from_polynomial(const Polynomial& p) {
  LinearForm f;
  std::vector<Entry> entries;
  for (const auto& t : p.terms()) {
    const auto& fs = t.mono.factors();
    if (fs.empty()) {
      f.constant_ = t.coeff;
    } else if (fs.size() == 1 && fs[0].second == 1) {
      entries.emplace_back(fs[0].first, t.coeff);
    } else {
      throw PreconditionError("polynomial is not linear");
    }
  }
  return LinearForm(f.constant_, std::move(entries));
}

LinearForm LinearForm::variable(Variable v, const Rational& c) { return LinearForm(0, {{v, c}}); }

Rational LinearForm::coefficient(Variable v) const {
  auto it = std::lower_bound(coeffs_.begin(), coeffs_.end(), v,
                             [](const Entry& e, Variable x) { return e.first < x; });
  return (it != coeffs_.end() && it->first == v) ? it->second : Rational(0);
}

std::optional<int> LinearForm::top_z() const {
  std::optional<int> top;
  for (const auto& [v, c] : coeffs_) {
    if (v.family() == Family::z) top = v.index();  // entries sorted, so the last z wins
  }
  return top;
}

LinearForm LinearForm::without(Variable v) const {
  LinearForm r = *this;
  std::erase_if(r.coeffs_, [v](const Entry& e) { return e.first == v; });
  return r;
}

LinearForm LinearForm::operator+(const LinearForm& o) const {
  std::vector<Entry> all = coeffs_;
  all.insert(all.end(), o.coeffs_.begin(), o.coeffs_.end());
  return LinearForm(constant_ + o.constant_, std::move(all));
}

LinearForm LinearForm::operator-() const { return *this * Rational(-1); }

LinearForm LinearForm::operator-(const LinearForm& o) const { return *this + (-o); }

LinearForm LinearForm::operator*(const Rational& c) const {
  if (thomcalc::is_zero(c)) return LinearForm();
  LinearForm r = *this;
  r.constant_ *= c;
  for (auto& e : r.coeffs_) e.second *= c;
  return r;
}

Polynomial LinearForm::to_polynomial() const {
  std::vector<Term> terms;
  terms.push_back({Monomial(), constant_});
  for (const auto& [v, c] : coeffs_) terms.push_back({Monomial(v), c});
  return Polynomial::from_terms(std::move(terms));
}

Rational LinearForm::evaluate(const Assignment& values) const {
  Rational s = constant_;
  for (const auto& [v, c] : coeffs_) {
    auto it = values.find(v);
    if (it == values.end()) throw UnassignedVariable("no value for " + v.name());
    s += c * it->second;
  }
  return s;
}

LinearForm LinearForm::evaluate_partial(const Assignment& values) const {
  Rational s = constant_;
  std::vector<Entry> rest;
  for (const auto& [v, c] : coeffs_) {
    auto it = values.find(v);
    if (it == values.end()) {
      rest.emplace_back(v, c);
    } else {
      s += c * it->second;
    }
  }
  return LinearForm(s, std::move(rest));
}

LinearForm LinearForm::substitute(Variable v, const LinearForm& f) const {
  Rational c = coefficient(v);
  if (thomcalc::is_zero(c)) return *this;
  return without(v) + f * c;
}

std::pair<Rational, LinearForm> LinearForm::normalized() const {
  if (coeffs_.empty()) return {constant_, LinearForm(1)};
  Rational s = coeffs_.front().second;
  Rational inv = 1 / s;
  return {s, *this * inv};
}

bool operator<(const LinearForm& x, const LinearForm& y) {
  if (x.coeffs_.size() != y.coeffs_.size()) return x.coeffs_.size() < y.coeffs_.size();
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i].first != y.coeffs_[i].first) return x.coeffs_[i].first < y.coeffs_[i].first;
    if (x.coeffs_[i].second != y.coeffs_[i].second) return x.coeffs_[i].second < y.coeffs_[i].second;
  }
  return x.constant_ < y.constant_;
}

LinearForm zform(std::initializer_list<std::pair<int, int>> coeffs) {
  std::vector<LinearForm::Entry> e;
  for (auto [i, c] : coeffs) e.emplace_back(Variable::z(i), Rational(c));
  return LinearForm(0, std::move(e));
}

}  // namespace thomcalc
