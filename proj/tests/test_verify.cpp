#include "support.hpp"

#include <gtest/gtest.h>

using namespace hopf;
using fixtures::q;

namespace {

StructureRecord find(const std::vector<StructureRecord>& r, StructureKind k, int row = 0) {
  for (const auto& x : r)
    if (x.kind == k && x.hyper_case == row) return x;
  throw std::runtime_error("record not found");
}

const CheckResult& check(const VerifyReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  throw std::runtime_error("no check " + name);
}

}  // namespace

TEST(Verify, RadialIsEquivariant) {
  auto s = HopfSurface::diagonal(q(1, 2), q(1, 3));
  auto rec = find(enumerate_structures(s, 2), StructureKind::Radial);
  auto rep = check_equivariance(rec, s, default_config(s));
  EXPECT_TRUE(rep.pass);
  EXPECT_LT(rep.max_equivariance_residual, 1e-12);
  EXPECT_EQ(rep.samples, 200);
}

TEST(Verify, HyperRowOneEquivariantButBranched) {
  auto s = HopfSurface::diagonal(q(1, 4), q(1, 2));
  auto rec = find(enumerate_structures(s, 2, {{{q(1)}}}), StructureKind::Hyperresonant, 1);
  auto cfg = default_config(s);
  auto eq = check_equivariance(rec, s, cfg);
  EXPECT_TRUE(eq.pass);
  EXPECT_LT(eq.max_equivariance_residual, 1e-9);
  auto im = check_immersion(rec, cfg);
  EXPECT_FALSE(im.pass);
  EXPECT_TRUE(check(im, "det on shell").pass);
  EXPECT_FALSE(check(im, "det on axes and root curves").pass);
  EXPECT_LT(check(im, "det on axes and root curves").value, 1e-12);
  EXPECT_TRUE(check(im, "finite differences").pass);
}

TEST(Verify, PerturbedHolonomyFails) {
  auto s = HopfSurface::diagonal(q(1, 2), q(1, 3));
  for (const auto& rec : enumerate_structures(s, 2)) {
    auto bad = rec;
    const Mat2& g = rec.hol.g;
    bad.hol.g = Mat2(g.a() * Scalar(q(1001, 1000)), g.b(), g.c(), g.d());
    auto rep = check_equivariance(bad, s, default_config(s));
    EXPECT_FALSE(rep.pass) << rec.provenance;
    EXPECT_GT(rep.max_equivariance_residual, 1e-4);
  }
}

TEST(Verify, DeterminantControls) {
  VerifyConfig cfg;
  cfg.samples = 50;
  StructureRecord id;
  id.dev = detail::constant_map(1, 1, 0, 0, 1);
  auto rep = check_immersion(id, cfg);
  EXPECT_TRUE(rep.pass);
  EXPECT_NEAR(rep.min_jacobian_magnitude, 1.0, 1e-12);
  // radial n = 1: det = -z2^-3
  StructureRecord rad;
  rad.dev = detail::constant_map(1, 1, -1, 0, -1);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(0.3, 1.0), A(0, 6.283);
  for (int i = 0; i < 50; ++i) {
    cplx z1 = std::polar(U(rng), A(rng)), z2 = std::polar(U(rng), A(rng));
    EXPECT_NEAR(std::abs(det_numeric(rad.dev, z1, z2, Chart::T)), std::pow(std::abs(z2), -3), 1e-9);
  }
  EXPECT_TRUE(check_immersion(rad, cfg).pass);
}

// t = (z1^2, z2) on the exceptional surface is branched along z1 = 0
TEST(Verify, BranchedExceptionalControlFails) {
  auto s = HopfSurface::exceptional(q(1, 2), 2);
  auto rec = enumerate_structures(s, 2).front();
  rec.dev.k1 = 2;
  auto rep = check_immersion(rec, default_config(s));
  EXPECT_FALSE(rep.pass);
  EXPECT_FALSE(check(rep, "det on axes and root curves").pass);
}

TEST(Verify, ExceptionalEigenIsEquivariantAndImmersed) {
  for (int m = 1; m <= 2; ++m)
    for (int n = m; n <= 3; ++n) {
      auto s = HopfSurface::exceptional(q(1, 2), m);
      for (const auto& rec : enumerate_structures(s, n)) {
        auto cfg = default_config(s);
        EXPECT_TRUE(check_equivariance(rec, s, cfg).pass) << rec.provenance << " m=" << m << " n=" << n;
        EXPECT_TRUE(check_immersion(rec, cfg).pass) << rec.provenance;
      }
    }
}

TEST(Verify, GroupAxiomsSmall) {
  for (int n = 1; n <= 3; ++n) {
    auto rep = check_group_axioms(n, 40, 100 + n, 40);
    EXPECT_TRUE(rep.pass) << n;
    EXPECT_LT(rep.max_equivariance_residual, 1e-10);
  }
}

TEST(Verify, ConfigValidation) {
  VerifyConfig c;
  c.r_min = 2;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.samples = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Verify, Deterministic) {
  auto s = HopfSurface::diagonal(q(1, 4), q(1, 2));
  auto rec = find(enumerate_structures(s, 2, {{{q(1), q(2)}}}), StructureKind::Hyperresonant, 2);
  auto a = check_equivariance(rec, s, default_config(s)), b = check_equivariance(rec, s, default_config(s));
  EXPECT_EQ(a.max_equivariance_residual, b.max_equivariance_residual);
}
