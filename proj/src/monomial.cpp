#include "thomcalc/monomial.hpp"

#include <algorithm>

#include "thomcalc/errors.hpp"

namespace thomcalc {

Monomial::Monomial(Variable v, int e) {
  if (e != 0) factors_.emplace_back(v, e);
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& x, const Factor& y) { return x.first < y.first; });
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (!m.factors_.empty() && m.factors_.back().first == v) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(v, e);
    }
  }
  std::erase_if(m.factors_, [](const Factor& f) { return f.second == 0; });
  return m;
}

int Monomial::exponent(Variable v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, Variable x) { return f.first < x; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

bool Monomial::is_polynomial() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.second > 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin(), ae = factors_.end();
  auto b = o.factors_.begin(), be = o.factors_.end();
  while (a != ae && b != be) {
    if (a->first < b->first) {
      r.factors_.push_back(*a++);
    } else if (b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      int e = a->second + b->second;
      if (e != 0) r.factors_.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  r.factors_.insert(r.factors_.end(), a, ae);
  r.factors_.insert(r.factors_.end(), b, be);
  return r;
}

Monomial Monomial::pow(int e) const {
  Monomial r;
  if (e == 0) return r;
  r.factors_ = factors_;
  for (auto& f : r.factors_) f.second *= e;
  return r;
}

Monomial Monomial::without(Variable v) const {
  Monomial r;
  r.factors_.reserve(factors_.size());
  for (const auto& f : factors_) {
    if (f.first != v) r.factors_.push_back(f);
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (const auto& [v, e] : factors_) {
    if (o.exponent(v) < e) return false;
  }
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& [v, e] : factors_) {
    h ^= v.key() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(e) * 0x100000001b3ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool canonical_before(const Monomial& x, const Monomial& y) {
  int dx = x.degree(), dy = y.degree();
  if (dx != dy) return dx > dy;
  // Reverse lexicographic: find the largest variable where the exponents
  // differ; the monomial with the smaller exponent there comes first.
  const auto& fx = x.factors();
  const auto& fy = y.factors();
  auto ix = fx.rbegin(), iy = fy.rbegin();
  while (ix != fx.rend() || iy != fy.rend()) {
    int ex = 0, ey = 0;
    if (iy == fy.rend() || (ix != fx.rend() && ix->first > iy->first)) {
      ex = ix->second;
      ++ix;
    } else if (ix == fx.rend() || iy->first > ix->first) {
      ey = iy->second;
      ++iy;
    } else {
      ex = ix->second;
      ey = iy->second;
      ++ix;
      ++iy;
    }
    if (ex != ey) return ex < ey;
  }
  return false;
}

int lex_compare(const Monomial& x, const Monomial& y, const std::vector<Variable>& order) {
  for (Variable v : order) {
    int ex = x.exponent(v), ey = y.exponent(v);
    if (ex != ey) return ex > ey ? 1 : -1;
  }
  return 0;
}

}  // namespace thomcalc
