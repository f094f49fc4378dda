#pragma once

#include <compare>
#include <string>
#include <vector>

#include "thomcalc/linear_form.hpp"

namespace thomcalc {

// Nondecreasing multiset of positive integers.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int size() const { return static_cast<int>(parts_.size()); }
  int sum() const;
  int max() const { return parts_.empty() ? 0 : parts_.back(); }
  int multiplicity(int part) const;
  // tau with one copy of `part` replaced (or removed / added).
  Partition remove_one(int part) const;
  Partition add_one(int part) const;
  Partition operator|(const Partition& o) const;  // multiset union
  // All nonempty sub-multisets, including the partition itself.
  std::vector<Partition> subpartitions() const;
  // z_{tau_1} + ... + z_{tau_s}
  LinearForm z_weight() const;
  std::string to_string() const;

  // Deterministic order: (sum, length, lex).
  friend std::strong_ordering operator<=>(const Partition& x, const Partition& y);
  friend bool operator==(const Partition& x, const Partition& y) { return x.parts_ == y.parts_; }

 private:
  std::vector<int> parts_;
};

using AdmissibleSequence = std::vector<Partition>;

std::vector<Partition> partitions_up_to(int l);
// All partitions with exactly the given sum.
std::vector<Partition> partitions_of(int n);
long perm_count(const Partition& tau);

bool is_admissible(const AdmissibleSequence& pi);
std::vector<AdmissibleSequence> enumerate_admissible(int d);
int defect(const AdmissibleSequence& pi);
bool is_complete(const AdmissibleSequence& pi);
// ([1],[2],...,[d])
AdmissibleSequence distinguished_sequence(int d);
std::string to_string(const AdmissibleSequence& pi);

int dim_Nhat(int d);
int dim_orbit(int d);
int deg_Qhat(int d);

}  // namespace thomcalc
