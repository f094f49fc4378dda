#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thomcalc/polynomial.hpp"
#include "thomcalc/residue.hpp"

namespace thomcalc {

// Known Qhat_d polynomials: built in for d <= 5, extendable by plugin files.
class QhatRegistry {
 public:
  QhatRegistry();

  bool has(int d) const;
  // Throws MissingQhat.
  const Polynomial& get(int d) const;
  // Validates z-homogeneity, degree deg_Qhat(d) and variables z_1..z_d.
  void register_plugin(int d, Polynomial q);
  // Plugin file: polynomial JSON with an optional top-level "d". Without it,
  // d is the largest z-index present. Returns the registered d.
  int load_file(const std::filesystem::path& path);
  // Loads every *.json in the directory, in name order.
  std::vector<int> load_directory(const std::filesystem::path& dir);
  // Built-ins plus the plugin directory named by THOMCALC_QHAT_DIR, if set.
  static QhatRegistry from_environment();

  std::vector<int> available() const;
  bool is_plugin(int d) const { return plugins_.count(d) > 0; }

 private:
  std::map<int, Polynomial> builtin_;
  std::map<int, Polynomial> plugins_;
};

// Built-in value only; throws MissingQhat for d outside 1..5.
Polynomial qhat(int d);

struct ThomPolynomial {
  int d = 0;
  int j = 0;
  Polynomial body;  // in c_0, c_1, ...
};

int default_thom_order(int d, int j);
ResidueProblem thom_problem(int d, int j, const Polynomial& qhat_d);
ThomPolynomial thom_polynomial(int d, int j, const QhatRegistry& registry = QhatRegistry());
ThomPolynomial thom_polynomial(int d, int j, const QhatRegistry& registry,
                               const TruncationPolicy& policy);

ThomPolynomial ronga_reference(int j);

// c_i -> a_{i-(j+1)} and back.
Polynomial thom_series_view(const ThomPolynomial& tp);
ThomPolynomial from_thom_series(const Polynomial& ts, int d, int j);

// tp(d, j-1) against tp(d, j) with c_0-monomials dropped and c_i -> c_{i-1}.
bool shift_check(int d, int j, const QhatRegistry& registry = QhatRegistry());
Polynomial shift_down(const Polynomial& body);

bool tp_positivity(const ThomPolynomial& tp);

// Number of c-factors (c_0 included) in each monomial and the weighted
// degree sum i * exp(c_i); ok is false if the monomials disagree.
struct ChernStructure {
  bool ok = false;
  int factors = 0;
  int weighted_degree = 0;
};
ChernStructure chern_structure(const Polynomial& body);

struct ChernAssignment {
  int n = 0;
  int k = 0;
  int truncation = 0;
  std::vector<Polynomial> values;  // values[i] = c_i(lambda, theta)
};

ChernAssignment chern_classes(int n, int k, int truncation);
Polynomial substitute_chern(const ThomPolynomial& tp, int n, int k);

}  // namespace thomcalc
