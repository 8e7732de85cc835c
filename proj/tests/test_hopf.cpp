#include "support.hpp"

#include <gtest/gtest.h>

using namespace hopf;
using fixtures::q;

TEST(HopfSurface, ClassifyExamples) {
  auto a = HopfSurface::diagonal(q(1, 2), q(1, 4));
  EXPECT_EQ(a.classify(), SurfaceClass::Hyperresonant);
  EXPECT_EQ(*a.hyper(), (Hyperresonance{2, 1}));
  auto h = HopfSurface::diagonal(q(1, 2), q(1, 2));
  EXPECT_EQ(h.classify(), SurfaceClass::Homothety);
  EXPECT_EQ(*h.hyper(), (Hyperresonance{1, 1}));
  auto g = HopfSurface::diagonal(q(1, 2), q(1, 3));
  EXPECT_EQ(g.classify(), SurfaceClass::Generic);
  EXPECT_FALSE(g.hyper());
  auto e = HopfSurface::exceptional(q(1, 2), 3);
  EXPECT_EQ(e.classify(), SurfaceClass::Exceptional);
  EXPECT_EQ(e.m(), 3);
}

// minimal (m1,m2) by direct comparison of exact powers
TEST(HopfSurface, HyperresonanceIsMinimal) {
  struct C { GaussRat a, b; };
  for (auto [a, b] : std::vector<C>{{q(1, 4), q(1, 2)}, {q(1, 8), q(1, 4)}, {q(4, 9), q(8, 27)}, {q(1, 2), q(1, 3)},
                                    {q(0, 1, 1, 2), q(-1, 4)}, {q(0, 1, 1, 2), q(1, 16)}}) {
    auto s = HopfSurface::diagonal(a, b);
    std::optional<Hyperresonance> oracle;
    for (int m1 = 1; m1 <= 16 && !oracle; ++m1)
      for (int m2 = 1; m2 <= 16; ++m2)
        if (a.pow(m1) == b.pow(m2)) {
          oracle = Hyperresonance{m1, m2};
          break;
        }
    ASSERT_EQ(bool(s.hyper()), bool(oracle)) << a.to_string() << " " << b.to_string();
    if (oracle) {
      EXPECT_EQ(s.hyper()->m1, oracle->m1);
      EXPECT_EQ(a.pow(s.hyper()->m1), b.pow(s.hyper()->m2));
      // no pair with smaller m1 and any m2 <= 64
      for (int m1 = 1; m1 < s.hyper()->m1; ++m1)
        for (int m2 = 1; m2 <= 64; ++m2) EXPECT_FALSE(a.pow(m1) == b.pow(m2));
    }
  }
}

TEST(HopfSurface, FunctionFieldAndBiholGroup) {
  auto a = HopfSurface::diagonal(q(1, 2), q(1, 4));
  EXPECT_EQ(a.function_field().to_string(), "C(z1^2/z2)");
  EXPECT_EQ(a.bihol_group(), BiholGroup::DiagonalLinear);
  EXPECT_EQ(HopfSurface::diagonal(q(1, 2), q(1, 3)).function_field().to_string(), "C");
  EXPECT_EQ(HopfSurface::exceptional(q(1, 2), 2).function_field().to_string(), "C");
  EXPECT_EQ(HopfSurface::exceptional(q(1, 2), 2).bihol_group(), BiholGroup::ExceptionalFamily);
  EXPECT_EQ(HopfSurface::diagonal(q(1, 3), q(1, 3)).bihol_group(), BiholGroup::AllInvertibleLinear);
}

TEST(HopfSurface, ApplyF) {
  auto d = HopfSurface::diagonal(q(1, 2), q(1, 3));
  auto r = d.apply_F(1.0, 1.0);
  EXPECT_NEAR(std::abs(r[0] - 0.5), 0, 1e-15);
  EXPECT_NEAR(std::abs(r[1] - 1.0 / 3), 0, 1e-15);
  auto e1 = HopfSurface::exceptional(q(1, 2), 1).apply_F(1.0, 0.0);
  EXPECT_NEAR(std::abs(e1[0] - 0.5), 0, 1e-15);
  EXPECT_NEAR(std::abs(e1[1] - 1.0), 0, 1e-15);
  auto e2 = HopfSurface::exceptional(q(1, 2), 2).apply_F(2.0, 1.0);
  EXPECT_NEAR(std::abs(e2[0] - 1.0), 0, 1e-15);
  EXPECT_NEAR(std::abs(e2[1] - 4.25), 0, 1e-15);
  EXPECT_THROW(d.apply_F(0.0, 0.0), std::invalid_argument);
}

TEST(HopfSurface, ApplyFInjectiveOnSamples) {
  auto e = HopfSurface::exceptional(q(1, 2), 2);
  detail::Sampler S(4, 0.5, 1.0);
  std::vector<std::array<cplx, 2>> img;
  for (int i = 0; i < 200; ++i) {
    auto z = S.point();
    img.push_back(e.apply_F(z[0], z[1]));
  }
  for (std::size_t i = 0; i < img.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      EXPECT_GT(std::abs(img[i][0] - img[j][0]) + std::abs(img[i][1] - img[j][1]), 1e-12);
}

TEST(HopfSurface, RejectsNonContractions) {
  EXPECT_THROW(HopfSurface::diagonal(q(2), q(1, 2)), std::invalid_argument);
  EXPECT_THROW(HopfSurface::diagonal(q(1), q(1, 2)), std::invalid_argument);
  EXPECT_THROW(HopfSurface::exceptional(q(3, 2), 1), std::invalid_argument);
  EXPECT_THROW(HopfSurface::exceptional(q(1, 2), 0), std::invalid_argument);
}

TEST(HopfSurface, FormalBasesBypassSearch) {
  auto B = EigenBasis::formal({0.25, 0.5}, {{1, -2}});
  auto s = HopfSurface::diagonal(B);
  EXPECT_EQ(*s.hyper(), (Hyperresonance{1, 2}));
  auto G = EigenBasis::formal({std::complex<double>{0.3, 0.2}, 0.5}, {});
  EXPECT_EQ(HopfSurface::diagonal(G).classify(), SurfaceClass::Generic);
}
