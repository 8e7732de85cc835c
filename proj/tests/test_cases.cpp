#include "support.hpp"

#include <gtest/gtest.h>

using namespace hopf;
using fixtures::q;

namespace {

struct Expected {
  std::string combo;
  bool feasible;
  std::array<DegreeKind, 3> kinds;  // used only if feasible
  std::vector<std::string> conditions;
};

using K = DegreeKind;

const std::vector<Expected>& expected_rows() {
  static const std::vector<Expected> rows{
      {"(0,1,-1,-n)", true, {K::Free, K::Zero, K::Zero}, {"m2 = m1*n", "m1 > 1 or n > 1 or degP1 > 1"}},
      {"(0,1,0,1)", false, {}, {"degQ1 != degP1"}},
      {"(0,1,1,0)", true, {K::Zero, K::Free, K::Zero}, {"m2 = m1*n", "m1 > 1 or n > 1 or degQ1 > 1"}},
      {"(1,0,-1,-n)", true, {K::Zero, K::Zero, K::Free}, {"m2 = m1", "m1*degP2 != n"}},
      {"(1,0,0,1)", true, {K::Zero, K::Free, K::Zero}, {"m2*n = m1", "m2 > 1 or n > 1 or degQ1 > 1"}},
      {"(1,0,1,0)", false, {}, {"degP2 != n*degQ1"}},
  };
  return rows;
}

UniPoly generic_poly(int deg, int salt) {
  std::vector<GaussRat> r;
  for (int j = 0; j < deg; ++j) r.push_back(GaussRat(mpq_class(2 * j + 3 * salt + 1, 3), mpq_class(j * j + salt + 1, 5)));
  return UniPoly::from_roots(r);
}

}  // namespace

TEST(CaseTable, RowsMatchTable) {
  auto rep = reproduce_case_table();
  const auto& ex = expected_rows();
  ASSERT_EQ(rep.rows.size(), ex.size());
  int impossible = 0;
  for (std::size_t i = 0; i < ex.size(); ++i) {
    const auto& r = rep.rows[i];
    EXPECT_EQ(r.combo.to_string(), ex[i].combo);
    EXPECT_EQ(r.feasible, ex[i].feasible) << ex[i].combo;
    EXPECT_EQ(r.conditions, ex[i].conditions) << ex[i].combo;
    if (!r.feasible) {
      ++impossible;
      continue;
    }
    for (std::size_t p = 0; p < 3; ++p) EXPECT_EQ(r.pattern.degrees[p].kind, ex[i].kinds[p]) << ex[i].combo;
  }
  EXPECT_EQ(impossible, 2);
}

// the impossible rows force both degrees to (m1 + m2)/(m1 m2 n) style fractions, where D vanishes
TEST(CaseTable, ImpossibleRowsVanishOnD) {
  auto rep = reproduce_case_table();
  for (const auto& r : rep.rows) {
    if (r.feasible) continue;
    EXPECT_TRUE(r.pattern.fails_only_on_D) << r.combo.to_string();
    // at every small instance, the forced degrees never give D != 0 with integral degrees
    for (int n = 1; n <= 3; ++n)
      for (int m1 = 1; m1 <= 4; ++m1)
        for (int m2 = 1; m2 <= 4; ++m2) EXPECT_TRUE(row_instances(r, n, m1, m2, 6).empty());
  }
}

TEST(CaseTable, ChartSwapAgrees) {
  auto rep = reproduce_case_table();
  EXPECT_EQ(rep.swapped.size(), 3u);
  for (const auto& s : rep.swapped) EXPECT_TRUE(s.feasibility_agrees) << s.combo.to_string();
  // (0,0) first pair and (0,0) tilde pair are excluded up front: 4 + 3
  EXPECT_EQ(rep.excluded.size(), 7u);
}

// independent oracle: build every map with k1 >= 0 and small degrees, run is_admissible
TEST(CaseTable, InstancesMatchBruteForce) {
  auto rep = reproduce_case_table();
  const int bound = 3;
  for (int n = 1; n <= 3; ++n)
    for (int m1 = 1; m1 <= 3; ++m1)
      for (int m2 = 1; m2 <= 3; ++m2) {
        if (std::gcd(m1, m2) != 1) continue;
        for (const auto& row : rep.rows) {
          auto k1 = row.combo.first.k.at(n), l1 = row.combo.first.l.at(n);
          auto kt = row.combo.tilde.k.at(n), lt = row.combo.tilde.l.at(n);
          std::set<std::array<int, 3>> oracle;
          for (int a = 0; a <= bound; ++a)
            for (int b = 0; b <= bound; ++b)
              for (int c = 0; c <= bound; ++c) {
                if (a + b + c == 0) continue;
                DevMap d;
                d.n = n, d.k1 = k1, d.l1 = l1;
                d.k2 = kt + m2 * (a - b);
                d.l2 = lt + m2 * (c - n * b);
                d.hyper = IVec{m1, m2};
                d.P1 = generic_poly(a, 0), d.Q1 = generic_poly(b, 1), d.P2 = generic_poly(c, 2);
                if (is_admissible(d)) oracle.insert({a, b, c});
              }
          auto inst = row_instances(row, n, m1, m2, bound);
          std::set<std::array<int, 3>> got(inst.begin(), inst.end());
          EXPECT_EQ(got, oracle) << row.combo.to_string() << " n=" << n << " m=" << m1 << "," << m2;
        }
      }
}

// with B = m1 k2 + k1 m2 and D = k1 l2 - l1 k2: in row (0,1,...) k1 = 0, l1 = 1 gives B = -m1 D
TEST(CaseTable, BEqualsMinusM1D) {
  for (int m1 = 1; m1 <= 4; ++m1)
    for (int k2 = -4; k2 <= 4; ++k2)
      for (int l2 = -4; l2 <= 4; ++l2) {
        DevMap d;
        d.k1 = 0, d.l1 = 1, d.k2 = k2, d.l2 = l2;
        d.hyper = IVec{m1, 2};
        auto c = abcd_raw(d);
        EXPECT_EQ(c.B, -long(m1) * c.D);
      }
}

// the hyperresonant rows used by the enumerator satisfy the table
TEST(CaseTable, EnumeratorRowsAreInstances) {
  auto rep = reproduce_case_table();
  std::vector<GaussRat> one{q(2)}, two{q(2), q(3, 1, 1)};
  for (int n = 1; n <= 3; ++n)
    for (int m1 = 1; m1 <= 3; ++m1)
      for (int m2 = 1; m2 <= 6; ++m2) {
        if (std::gcd(m1, m2) != 1) continue;
        Hyperresonance h{m1, m2};
        for (const auto& a : {one, two})
          for (int row : hyper_rows(h, n, int(a.size()))) {
            auto d = hyper_row_map(row, h, n, a);
            EXPECT_TRUE(is_admissible(d)) << row << ": " << is_admissible(d).reason;
          }
      }
}
