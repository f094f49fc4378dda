#pragma once

#include <cstddef>
#include <vector>

#include "thomcalc/linear_form.hpp"
#include "thomcalc/localization.hpp"
#include "thomcalc/polynomial.hpp"

namespace thomcalc {

// Coordinates y_i of a torus representation with their weights.
struct WeightedRing {
  std::vector<Variable> coords;
  std::vector<LinearForm> weights;

  // y_1..y_N with weights eta_1..eta_N.
  static WeightedRing standard(int n);
  std::size_t size() const { return coords.size(); }
  // Position of v in coords; PreconditionError if absent.
  std::size_t position(Variable v) const;
  LinearForm weight(const Monomial& m) const;
};

using ExponentVector = std::vector<int>;

// Minimal monomial generators over a fixed number of coordinates.
class MonomialIdeal {
 public:
  MonomialIdeal(std::size_t num_vars, std::vector<ExponentVector> generators);
  // Leading monomials of polynomials in the ring's coordinates.
  static MonomialIdeal from_monomials(const WeightedRing& ring, const std::vector<Monomial>& gens);

  std::size_t num_vars() const { return n_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  bool contains(const ExponentVector& a) const;
  bool is_unit() const;
  // Codimension of the zero set; -1 for the unit ideal.
  int codim() const;
  // Coordinate sets of size codim() whose subspace {y_i = 0, i in set} lies
  // in the zero set, i.e. minimum hitting sets of the generator supports.
  std::vector<std::vector<std::size_t>> top_components() const;

 private:
  std::size_t n_;
  std::vector<ExponentVector> gens_;
};

struct PolynomialIdeal {
  std::vector<Polynomial> generators;
  // Lex priority, first is largest.
  std::vector<Variable> order;
};

Polynomial euler_class(const WeightedRing& ring);

// Length of the local ring at the generic point of {y_i = 0, i in coords}.
// Throws InfiniteMultiplicity if the staircase is unbounded.
long subspace_multiplicity(const MonomialIdeal& m, const std::vector<std::size_t>& coords);
Polynomial multidegree_monomial(const MonomialIdeal& m, const WeightedRing& ring);

// Reduced lex Groebner basis. Throws ResourceLimit after `pair_budget`
// S-pairs have been reduced.
std::vector<Polynomial> buchberger_lex(const PolynomialIdeal& ideal, std::size_t pair_budget = 10000);
// Remainder of f on division by g (full reduction).
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& g, const std::vector<Variable>& order);
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const std::vector<Variable>& order);
Monomial leading_monomial(const Polynomial& f, const std::vector<Variable>& order);

// Throws InhomogeneousInput naming the first generator whose monomials
// carry different weights.
void validate_homogeneous(const PolynomialIdeal& ideal, const WeightedRing& ring);
// multidegree of the initial ideal; weight-homogeneity is validated.
Polynomial multidegree(const PolynomialIdeal& ideal, const WeightedRing& ring);
// Same without the homogeneity check.
Polynomial multidegree_of_initial_ideal(const PolynomialIdeal& ideal, const WeightedRing& ring);

struct LinearReduction {
  PolynomialIdeal ideal;
  WeightedRing ring;
  LinearForm factor;
};
// Eliminates y_j using the generator y_j - f (f free of y_j): the result
// lives on the remaining coordinates and mdeg(I) = factor * mdeg(result).
LinearReduction reduce_by_linear_generator(const PolynomialIdeal& ideal, const WeightedRing& ring,
                                           Variable yj, const Polynomial& f);

// y_1..y_4 with weights eta_1, eta_2, eta_3 and eta_1 + eta_3 - eta_2.
WeightedRing parallelogram_ring();

// Four fixed-point terms for the cone over x1 x3 = x2 x4, in eta_1..eta_4.
LocalizationSum toric_fixed_point_sum();
// eta_4 = eta_1 + eta_3 - eta_2
Assignment parallelogram_point(const Rational& e1, const Rational& e2, const Rational& e3);
// The four-term sum with eta_4 substituted, simplified: eta_1 + eta_3.
Polynomial toric_localization_example();
// Two-term Porteous sum at n = k = 2 with weights (eta_1, eta_2 | eta_4, eta_3),
// eta_4 substituted.
Polynomial toric_porteous_example();

}  // namespace thomcalc
