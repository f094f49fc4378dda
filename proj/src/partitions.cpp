#include "thomcalc/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "thomcalc/errors.hpp"

namespace thomcalc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw PreconditionError("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end());
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Partition Partition::remove_one(int part) const {
  Partition r = *this;
  auto it = std::find(r.parts_.begin(), r.parts_.end(), part);
  if (it == r.parts_.end()) throw PreconditionError("part not present");
  r.parts_.erase(it);
  return r;
}

Partition Partition::add_one(int part) const {
  std::vector<int> p = parts_;
  p.push_back(part);
  return Partition(std::move(p));
}

Partition Partition::operator|(const Partition& o) const {
  std::vector<int> p = parts_;
  p.insert(p.end(), o.parts_.begin(), o.parts_.end());
  return Partition(std::move(p));
}

std::vector<Partition> Partition::subpartitions() const {
  // Enumerate by multiplicity vectors.
  std::vector<std::pair<int, int>> mult;
  for (int p : parts_) {
    if (mult.empty() || mult.back().first != p) mult.emplace_back(p, 0);
    ++mult.back().second;
  }
  std::vector<Partition> out;
  std::vector<int> pick(mult.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == mult.size()) {
      std::vector<int> parts;
      for (std::size_t k = 0; k < mult.size(); ++k) parts.insert(parts.end(), pick[k], mult[k].first);
      if (!parts.empty()) out.emplace_back(std::move(parts));
      return;
    }
    for (int c = 0; c <= mult[i].second; ++c) {
      pick[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

LinearForm Partition::z_weight() const {
  std::vector<LinearForm::Entry> e;
  for (int p : parts_) e.emplace_back(Variable::z(p), Rational(1));
  return LinearForm(0, std::move(e));
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

std::strong_ordering operator<=>(const Partition& x, const Partition& y) {
  if (auto c = x.sum() <=> y.sum(); c != 0) return c;
  if (auto c = x.size() <=> y.size(); c != 0) return c;
  return x.parts_ <=> y.parts_;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int min_part) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = min_part; p <= left; ++p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  if (n >= 1) rec(n, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_up_to(int l) {
  if (l < 1) throw PreconditionError("partitions_up_to needs l >= 1");
  std::vector<Partition> out;
  for (int n = 1; n <= l; ++n) {
    auto p = partitions_of(n);
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

long perm_count(const Partition& tau) {
  // |tau|! / prod mult!
  long num = 1;
  int n = 0;
  long den = 1;
  int run = 0;
  int prev = 0;
  for (int p : tau.parts()) {
    ++n;
    num *= n;
    run = (p == prev) ? run + 1 : 1;
    den *= run;
    prev = p;
  }
  return num / den;
}

bool is_admissible(const AdmissibleSequence& pi) {
  std::set<std::vector<int>> seen;
  for (std::size_t l = 0; l < pi.size(); ++l) {
    if (pi[l].empty() || pi[l].sum() > static_cast<int>(l + 1)) return false;
    if (!seen.insert(pi[l].parts()).second) return false;
  }
  return true;
}

std::vector<AdmissibleSequence> enumerate_admissible(int d) {
  if (d < 1) throw PreconditionError("enumerate_admissible needs d >= 1");
  auto all = partitions_up_to(d);
  std::vector<AdmissibleSequence> out;
  AdmissibleSequence cur;
  std::function<void(int)> rec = [&](int l) {
    if (l > d) {
      out.push_back(cur);
      return;
    }
    for (const auto& p : all) {
      if (p.sum() > l) break;  // sorted by sum
      if (std::find(cur.begin(), cur.end(), p) != cur.end()) continue;
      cur.push_back(p);
      rec(l + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

int defect(const AdmissibleSequence& pi) {
  int s = 0;
  for (std::size_t l = 0; l < pi.size(); ++l) s += static_cast<int>(l + 1) - pi[l].sum();
  return s;
}

bool is_complete(const AdmissibleSequence& pi) {
  for (const auto& p : pi) {
    for (const auto& sub : p.subpartitions()) {
      if (std::find(pi.begin(), pi.end(), sub) == pi.end()) return false;
    }
  }
  return true;
}

AdmissibleSequence distinguished_sequence(int d) {
  AdmissibleSequence pi;
  for (int l = 1; l <= d; ++l) pi.push_back(Partition{l});
  return pi;
}

std::string to_string(const AdmissibleSequence& pi) {
  std::string s = "(";
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (i) s += ",";
    s += pi[i].to_string();
  }
  return s + ")";
}

int dim_Nhat(int d) {
  if (d < 1) throw PreconditionError("d must be positive");
  int n = 0;
  for (int l = 1; l <= d; ++l) {
    for (int m = 1; 2 * m <= l; ++m) n += l - 2 * m + 1;  // r from m to l - m
  }
  return n;
}

int dim_orbit(int d) {
  if (d < 1) throw PreconditionError("d must be positive");
  return d * (d - 1) / 2;
}

int deg_Qhat(int d) { return dim_Nhat(d) - dim_orbit(d); }

}  // namespace thomcalc
