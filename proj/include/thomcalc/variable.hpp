#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace thomcalc {

// Variable families. The numeric order is the canonical order of families in
// a monomial.
enum class Family : std::uint8_t {
  z = 0,
  lambda,
  theta,
  eta,
  c,
  a,
  y,
  uhat,  // hatted space coordinate u^l_{m,r}
  u,     // partition-indexed coordinate u^l_tau
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);

// A symbol packed into a 64-bit key: family in the top byte, payload below.
// Keys compare in canonical variable order.
class Variable {
 public:
  Variable() = default;

  static Variable z(int i);
  static Variable lambda(int i);
  static Variable theta(int i);
  static Variable eta(int i);
  static Variable c(int i);
  static Variable a(int i);
  static Variable y(int i);
  // u^l_{m,r}; the pair is stored with m <= r.
  static Variable uhat(int m, int r, int l);
  // u^l_tau for a partition tau given as a list of positive parts.
  static Variable u(int l, const std::vector<int>& tau);
  static Variable indexed(Family f, int i);

  Family family() const { return static_cast<Family>(key_ >> 56); }
  // Index for the single-index families.
  int index() const;
  // (m, r, l) for uhat.
  int uhat_m() const;
  int uhat_r() const;
  int uhat_l() const;
  // Level and sorted parts for u.
  int u_level() const;
  std::vector<int> u_partition() const;

  std::uint64_t key() const { return key_; }
  std::string name() const;

  friend bool operator==(Variable x, Variable y) { return x.key_ == y.key_; }
  friend bool operator!=(Variable x, Variable y) { return x.key_ != y.key_; }
  friend bool operator<(Variable x, Variable y) { return x.key_ < y.key_; }
  friend bool operator>(Variable x, Variable y) { return x.key_ > y.key_; }
  friend bool operator<=(Variable x, Variable y) { return x.key_ <= y.key_; }

 private:
  explicit Variable(std::uint64_t key) : key_(key) {}
  std::uint64_t key_ = 0;
};

}  // namespace thomcalc

template <>
struct std::hash<thomcalc::Variable> {
  std::size_t operator()(thomcalc::Variable v) const noexcept {
    return std::hash<std::uint64_t>{}(v.key());
  }
};
