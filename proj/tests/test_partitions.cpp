#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "thomcalc/errors.hpp"
#include "thomcalc/partitions.hpp"
#include "thomcalc/polynomial_io.hpp"
#include "thomcalc/relations.hpp"

using namespace thomcalc;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }
Polynomial u(int l, std::vector<int> tau) { return Polynomial(Variable::u(l, tau)); }

// Independent brute force for relz: sign by counting inversions, admissibility
// checked by hand.
Polynomial relz_oracle(const AdmissibleSequence& rho, const Partition& tau) {
  const int d = static_cast<int>(rho.size());
  std::vector<int> s(d);
  std::iota(s.begin(), s.end(), 0);
  Polynomial out;
  do {
    int inv = 0;
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) inv += s[a] > s[b];
    for (int m = 0; m < d; ++m) {
      std::vector<std::vector<int>> seq;
      for (int l = 0; l < d; ++l) seq.push_back(rho[s[l]].parts());
      seq[m].insert(seq[m].end(), tau.parts().begin(), tau.parts().end());
      std::sort(seq[m].begin(), seq[m].end());
      bool ok = true;
      for (int l = 0; l < d && ok; ++l) ok = std::accumulate(seq[l].begin(), seq[l].end(), 0) <= l + 1;
      for (int a = 0; a < d && ok; ++a)
        for (int b = a + 1; b < d && ok; ++b) ok = seq[a] != seq[b];
      if (!ok) continue;
      Polynomial mono(1);
      for (int l = 0; l < d; ++l) mono *= u(l + 1, seq[l]);
      out += mono * Rational(inv % 2 ? -1 : 1);
    }
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

}  // namespace

TEST_CASE("partition enumeration") {
  CHECK(partitions_up_to(1) == std::vector<Partition>{{1}});
  CHECK(partitions_up_to(2) == std::vector<Partition>{{1}, {2}, {1, 1}});
  const auto p3 = partitions_up_to(3);
  CHECK(p3 == std::vector<Partition>{{1}, {2}, {1, 1}, {3}, {1, 2}, {1, 1, 1}});
  // Count against the partition numbers 1, 2, 3, 5, 7, 11.
  const int pn[] = {1, 2, 3, 5, 7, 11};
  int total = 0;
  for (int l = 1; l <= 6; ++l) {
    total += pn[l - 1];
    CHECK(static_cast<int>(partitions_up_to(l).size()) == total);
    CHECK(static_cast<int>(partitions_of(l).size()) == pn[l - 1]);
  }
  CHECK(Partition{3, 1, 2}.parts() == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(Partition({0, 1}), PreconditionError);
}

TEST_CASE("perm counts") {
  CHECK(perm_count(Partition{1, 1, 1, 3}) == 4);
  CHECK(perm_count(Partition{1}) == 1);
  CHECK(perm_count(Partition{1, 2}) == 2);
  CHECK(perm_count(Partition{1, 1, 2, 2, 3}) == 30);
}

TEST_CASE("admissible sequences") {
  CHECK(enumerate_admissible(1) == std::vector<AdmissibleSequence>{{{1}}});
  const auto a2 = enumerate_admissible(2);
  CHECK(a2.size() == 2);
  CHECK(std::find(a2.begin(), a2.end(), AdmissibleSequence{{1}, {2}}) != a2.end());
  CHECK(std::find(a2.begin(), a2.end(), AdmissibleSequence{{1}, {1, 1}}) != a2.end());

  const Partition p1{1}, p2{2}, p3{3}, p11{1, 1}, p12{1, 2}, p111{1, 1, 1};
  const std::vector<AdmissibleSequence> listed = {{p1, p2, p3},  {p1, p2, p12},  {p1, p2, p11},  {p1, p2, p111},
                                                 {p1, p11, p2}, {p1, p11, p3}, {p1, p11, p12}, {p1, p11, p111}};
  auto a3 = enumerate_admissible(3);
  CHECK(a3.size() == 8);
  for (const auto& s : listed) CHECK(std::find(a3.begin(), a3.end(), s) != a3.end());
  for (const auto& s : a3) CHECK(is_admissible(s));
  CHECK(enumerate_admissible(3) == a3);  // deterministic
  CHECK_FALSE(is_admissible({p1, p1}));
  CHECK_FALSE(is_admissible({p2}));
}

TEST_CASE("defect and completeness") {
  CHECK(defect({{1}, {2}, {3}}) == 0);
  CHECK(defect({{1}, {1, 1}, {2}}) == 1);
  CHECK(defect({{1}, {2}, {1, 1}}) == 1);
  CHECK_FALSE(is_complete({{1}, {2}, {1, 1, 1}}));
  CHECK_FALSE(is_complete({{1}, {1, 1}, {1, 2}}));
  CHECK(is_complete({{1}, {2}, {3}, {1, 2}}));
  int complete = 0;
  for (const auto& s : enumerate_admissible(3)) complete += is_complete(s);
  CHECK(complete == 6);
  CHECK(distinguished_sequence(4) == AdmissibleSequence{{1}, {2}, {3}, {4}});
}

TEST_CASE("dimension table") {
  const int nhat[] = {0, 1, 3, 7, 13, 22}, q[] = {0, 0, 0, 1, 3, 7};
  for (int d = 1; d <= 6; ++d) {
    CAPTURE(d);
    CHECK(dim_Nhat(d) == nhat[d - 1]);
    CHECK(dim_orbit(d) == d * (d - 1) / 2);
    CHECK(deg_Qhat(d) == q[d - 1]);
    // Oracle: count triples directly.
    int count = 0;
    for (int l = 1; l <= d; ++l)
      for (int m = 1; m <= l; ++m)
        for (int r = m; m + r <= l; ++r) ++count;
    CHECK(dim_Nhat(d) == count);
  }
}

TEST_CASE("basic relations") {
  CHECK(basic_relations(3).empty());
  const auto r4 = basic_relations(4);
  REQUIRE(r4.size() == 1);
  const Polynomial d4 = P("u_{1,1}^{2}*u_{2,2}^{4} - u_{1,2}^{3}*u_{1,3}^{4}");
  CHECK((r4[0].poly == d4 || r4[0].poly == -d4));
  CHECK(r4[0].toric);
  CHECK(r4[0].weight == zform({{1, 2}, {2, 1}, {4, -1}}));

  const auto r5 = basic_relations(5);
  int toric = 0;
  for (const auto& r : r5) {
    if (r.toric) {
      ++toric;
    } else {
      CHECK(r.weight == zform({{1, 2}, {2, 1}, {5, -1}}));
    }
  }
  CHECK(toric == 3);
  CHECK(r5.size() == 4);

  for (int d = 1; d <= 6; ++d) {
    for (const auto& r : basic_relations(d)) {
      CHECK(is_zero(eval_at_hat_reference(r.poly)));
      CHECK(relation_weight(r.poly) == r.weight);
      CHECK(r.toric == (r.i + r.j + r.m == r.l));
    }
  }
  CHECK(relation_weight(d6_quartic_relation().poly) == zform({{1, 2}, {2, 3}, {3, 3}, {4, -2}, {5, -1}, {6, -1}}));
  CHECK_THROWS_AS(relation_weight(P("u_{1,1}^{2} - u_{1,2}^{3}")), InhomogeneousInput);
}

TEST_CASE("raising operators") {
  CHECK(apply_nR(u(3, {1, 2}), 2).is_zero());
  CHECK(apply_nR(u(3, {1, 1}), 2) == u(2, {1, 1}));
  CHECK(apply_nL(u(3, {1, 1}), 1) == u(3, {1, 2}) * Rational(2));
  CHECK(apply_nR(u(2, {1, 1}), 1).is_zero());
  // Leibniz rule on a product.
  CHECK(apply_nR(u(3, {1, 1}) * u(3, {1}), 2) == u(2, {1, 1}) * u(3, {1}) + u(3, {1, 1}) * u(2, {1}));
}

TEST_CASE("relz against an independent brute force") {
  const AdmissibleSequence rho{{1}, {2}, {3}};
  const Polynomial z = relz(rho, Partition{1, 2});
  CHECK(z == relz_oracle(rho, Partition{1, 2}));
  CHECK(relz(AdmissibleSequence{{1}, {2}}, Partition{1}) == relz_oracle({{1}, {2}}, Partition{1}));
  CHECK(relz(AdmissibleSequence{{1}, {2}}, Partition{3}).is_zero());
  for (int d = 1; d <= 4; ++d) {
    for (const auto& r : enumerate_admissible(d)) {
      for (const auto& tau : partitions_up_to(4)) {
        const Polynomial got = relz(r, tau);
        CHECK(got == relz_oracle(r, tau));
        for (int m = 1; m < d; ++m) CHECK(apply_nR(got, m).is_zero());
      }
    }
  }
}

TEST_CASE("quadratic relations vanish at the reference point") {
  for (const auto& rho : partitions_up_to(5)) {
    for (const auto& tau : partitions_up_to(5)) {
      const int m = rho.sum() + tau.sum();
      if (m > 5) continue;
      CHECK(is_zero(eval_at_reference(z_quadratic(rho, tau, m))));
    }
  }
  CHECK(eval_at_reference(u(3, {1, 2})) == 1);
  CHECK(eval_at_reference(u(3, {1, 1})) == 0);
  CHECK(eval_at_hat_reference(P("u_{1,2}^{3}")) == 1);
  CHECK(eval_at_hat_reference(P("u_{1,1}^{3}")) == 0);
}
