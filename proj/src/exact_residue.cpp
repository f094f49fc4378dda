#include "thomcalc/errors.hpp"
#include "thomcalc/residue.hpp"

namespace thomcalc {

namespace {

struct Pole {
  Rational a;    // coefficient of z
  LinearForm b;  // z-free part
};

}  // namespace

FactoredRational residue_single_variable_exact(const FactoredRational& f, Variable z) {
  // Sort factors into genuine poles a z + b (b != 0), poles at the origin
  // (b == 0) and z-free constants.
  std::vector<Pole> poles;
  std::vector<DenominatorFactor> constants;
  Polynomial numerator = f.numerator;
  for (const auto& df : f.denominator) {
    if (df.form.is_zero()) throw ZeroDenominator("zero denominator form");
    Rational a = df.form.coefficient(z);
    LinearForm b = df.form.without(z);
    if (is_zero(a)) {
      constants.push_back(df);
      continue;
    }
    if (b.is_zero()) {
      numerator = numerator.mul_monomial(Monomial(z, -df.multiplicity), pow(1 / a, df.multiplicity));
      continue;
    }
    if (df.multiplicity != 1) throw CoincidentPoles("repeated pole " + to_text(df.form));
    poles.push_back({a, b});
  }
  for (std::size_t i = 0; i < poles.size(); ++i) {
    for (std::size_t k = i + 1; k < poles.size(); ++k) {
      // Same root iff a_k b_i - a_i b_k == 0.
      if ((poles[i].b * poles[k].a - poles[k].b * poles[i].a).is_zero()) {
        throw CoincidentPoles("coincident poles in " + to_text(poles[i].b) + " and " +
                              to_text(poles[k].b));
      }
    }
  }

  const auto layers = numerator.split_by(z);
  std::vector<FactoredRational> residues;

  // Finite nonzero poles z0 = -b/a.
  for (std::size_t i = 0; i < poles.size(); ++i) {
    const Pole& P = poles[i];
    std::vector<DenominatorFactor> den = constants;
    // (a_k z0 + b_k) = b_k - a_k b / a
    for (std::size_t k = 0; k < poles.size(); ++k) {
      if (k == i) continue;
      den.push_back({poles[k].b - P.b * (poles[k].a / P.a), 1});
    }
    Polynomial bpoly = P.b.to_polynomial();
    Rational minus_inv_a = -1 / P.a;
    for (const auto& [e, Ne] : layers) {
      FactoredRational r;
      r.denominator = den;
      if (e >= 0) {
        r.numerator = Ne * bpoly.pow(static_cast<unsigned>(e)) * pow(minus_inv_a, e) * (1 / P.a);
      } else {
        // z0^e = (-a/b)^{|e|}
        r.numerator = Ne * pow(Rational(-P.a), -e) * (1 / P.a);
        r.denominator.push_back({P.b, -e});
      }
      residues.push_back(std::move(r));
    }
  }

  // Origin: N_e z^e with e < 0 picks [z^{-e-1}] of prod 1/(a_k z + b_k).
  for (const auto& [e, Ne] : layers) {
    if (e >= 0) break;
    int n = -e - 1;
    // Coefficient of z^n in prod_k sum_{n_k} (-a_k)^{n_k} b_k^{n - n_k} z^{n_k}
    // over the common denominator prod_k b_k^{n+1}.
    Polynomial acc(1);
    for (const auto& P : poles) {
      Polynomial bp = P.b.to_polynomial();
      Polynomial series;
      for (int nk = 0; nk <= n; ++nk) {
        series += bp.pow(static_cast<unsigned>(n - nk)).mul_monomial(Monomial(z, nk),
                                                                      pow(Rational(-P.a), nk));
      }
      acc *= series;
    }
    FactoredRational r;
    r.numerator = Ne * acc.coefficient_of(z, n);
    r.denominator = constants;
    for (const auto& P : poles) r.denominator.push_back({P.b, n + 1});
    residues.push_back(std::move(r));
  }

  FactoredRational total = sum_factored(residues);
  total.numerator = -total.numerator;
  return total;
}

}  // namespace thomcalc
