#include <hopf/verify.hpp>

#include <gtest/gtest.h>

#include <numbers>

using namespace hopf;

namespace {

GaussRat q(long a, long b = 1, long c = 0, long d = 1) { return GaussRat::frac(a, b, c, d); }

cplx eval_homog(const HomogPoly& p, cplx z1, cplx z2) {
  auto c = p.numeric();
  cplx s = 0.0;
  for (int k = 0; k <= p.degree(); ++k) s += c[k] * std::pow(z1, k) * std::pow(z2, p.degree() - k);
  return s;
}

}  // namespace

TEST(Mat2, InverseAndDeterminant) {
  Mat2 g(q(1, 2), q(3), q(-1, 1, 1, 1), q(2, 3));
  Mat2 gi = g.inverse();
  EXPECT_EQ(g * gi, Mat2::identity());
  EXPECT_EQ(gi * g, Mat2::identity());
  EXPECT_EQ(g.det(), Scalar(q(1, 3) + q(3, 1, -3, 1)));
  EXPECT_THROW(Mat2(1, 2, 2, 4), std::invalid_argument);
}

TEST(HomogPoly, ComposeMatchesPointwiseEvaluation) {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 4; ++n) {
    std::vector<Scalar> c;
    for (int k = 0; k <= n; ++k) c.emplace_back(q(k + 1, 2, n - k, 3));
    HomogPoly p(n, c);
    Mat2 h(q(1, 2), q(1, 3, 1, 1), q(-1), q(2));
    HomogPoly ph = p.compose(h);
    auto H = h.numeric();
    for (int t = 0; t < 20; ++t) {
      std::normal_distribution<double> N;
      cplx z1(N(rng), N(rng)), z2(N(rng), N(rng));
      cplx w1 = H[0] * z1 + H[1] * z2, w2 = H[2] * z1 + H[3] * z2;
      cplx lhs = eval_homog(ph, z1, z2), rhs = eval_homog(p, w1, w2);
      EXPECT_LT(std::abs(lhs - rhs), 1e-12 * (1 + std::abs(rhs)));
    }
  }
}

TEST(GroupElt, ComposeAgreesWithActionOnPoints) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 3; ++n) {
    for (int t = 0; t < 30; ++t) {
      GroupElt x = detail::random_elt(rng, n), y = detail::random_elt(rng, n);
      std::normal_distribution<double> N;
      ModelPoint pt{cplx(N(rng), N(rng)), cplx(N(rng), N(rng)), cplx(N(rng), N(rng)), n};
      // act by hand: (v,w) -> (g v, w + p(g v))
      auto act = [](const GroupElt& e, const ModelPoint& p) {
        auto G = e.g.numeric();
        cplx X = G[0] * p.x + G[1] * p.y, Y = G[2] * p.x + G[3] * p.y;
        return ModelPoint{X, Y, p.w + eval_homog(e.p, X, Y), p.n};
      };
      ModelPoint a = act(compose(x, y), pt), b = act(x, act(y, pt));
      EXPECT_LT(model_distance(a, b), 1e-10);
      EXPECT_LT(model_distance(act_model(x, pt), act(x, pt)), 1e-12);
    }
  }
}

TEST(GroupElt, ExactAxiomsSmall) {
  for (int n = 1; n <= 3; ++n) {
    auto rep = check_group_axioms(n, 100, 42 + n, 50);
    for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << "n=" << n << " " << c.name << " " << c.value;
  }
}

TEST(GroupElt, EqualityModuloRootsOfUnity) {
  GroupElt x{Mat2(q(1, 2), 1, 0, q(3)), HomogPoly::monomial(2, 1, 5)};
  GroupElt y{x.g.scaled(-1), x.p};
  EXPECT_EQ(x, y);  // -1 is a square root of unity
  GroupElt x1{Mat2(q(1, 2), 1, 0, q(3)), HomogPoly::monomial(1, 1, 5)};
  GroupElt y1{x1.g.scaled(-1), x1.p};
  EXPECT_NE(x1, y1);
  GroupElt x4{Mat2(q(1, 2), 1, 0, q(3)), HomogPoly(4)};
  EXPECT_EQ(x4, (GroupElt{x4.g.scaled(GaussRat::i()), x4.p}));
  EXPECT_NE(x, (GroupElt{x.g.scaled(GaussRat::i()), x.p}));
}

TEST(ModelPoint, ChartsAgree) {
  ModelPoint p{cplx(2, 1), cplx(0.5, -1), cplx(3, 0), 2};
  auto t = p.in_chart(Chart::T), s = p.in_chart(Chart::S);
  // s1 = 1/t1, s2 = t2/t1^n
  EXPECT_LT(std::abs(s.c1 - 1.0 / t.c1), 1e-14);
  EXPECT_LT(std::abs(s.c2 - t.c2 / std::pow(t.c1, 2)), 1e-14);
  EXPECT_LT(model_distance(ModelPoint::from_affine(t, 2), ModelPoint::from_affine(s, 2)), 1e-14);
  // scaling (x,y,w) -> (a x, a y, a^n w) is the same point
  cplx a(0.3, 2.0);
  ModelPoint r{a * p.x, a * p.y, a * a * p.w, 2};
  EXPECT_LT(model_distance(p, r), 1e-14);
}

TEST(ModelPoint, InfinityUsesSecondChart) {
  ModelPoint p{1.0, 0.0, 2.0, 1};
  auto a = p.to_affine();
  EXPECT_EQ(a.chart, Chart::S);
  EXPECT_EQ(a.c1, 0.0);
}

TEST(GroupElt, IdentityAndInverseExamples) {
  GroupElt x{Mat2(q(2), q(1, 3), 0, q(-1, 2)), HomogPoly(2, {Scalar(1), Scalar(q(0, 1, 1, 1)), Scalar(3)})};
  GroupElt e = GroupElt::identity(2);
  EXPECT_TRUE(detail::same_exact(compose(e, x), x));
  EXPECT_TRUE(detail::same_exact(compose(x, inverse(x)), e));
  EXPECT_THROW(compose(x, GroupElt::identity(1)), std::invalid_argument);
}
