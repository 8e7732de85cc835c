#pragma once
// Numeric checks: equivariance and immersion of developing maps, group axioms,
// and the functional equations of section families.

#include <hopf/classify.hpp>
#include <hopf/sections.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace hopf {

struct VerifyConfig {
  int samples = 200;
  double tol_equiv = 1e-9;
  double tol_jac = 1e-5;
  double det_threshold = 1e-8;
  std::uint64_t seed = 1;
  double r_min = 0.5, r_max = 1.0;
  int curve_samples = 16;  // per root curve u = r of P1, Q1, P2
  int axis_samples = 16;   // per coordinate axis

  void validate() const {
    if (!(r_min > 0 && r_min < r_max)) throw std::invalid_argument("VerifyConfig: need 0 < r_min < r_max");
    if (!(tol_equiv > 0 && tol_jac > 0 && det_threshold > 0)) throw std::invalid_argument("VerifyConfig: tolerances must be positive");
    if (samples < 1) throw std::invalid_argument("VerifyConfig: samples must be positive");
  }
};

// shell between the smallest eigenvalue modulus and 1
inline VerifyConfig default_config(const HopfSurface& s) {
  VerifyConfig c;
  c.r_min = s.min_modulus();
  return c;
}

struct SampleFailure {
  std::string check;
  cplx z1, z2;
  double value = 0;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  double value = 0;
  std::string detail;
};

struct VerifyReport {
  bool pass = true;
  double max_equivariance_residual = 0;
  double min_jacobian_magnitude = std::numeric_limits<double>::infinity();
  double max_fd_error = 0;
  int samples = 0, resampled = 0;
  std::vector<CheckResult> checks;
  std::vector<SampleFailure> failures;  // first few only

  void add(CheckResult c) {
    pass = pass && c.pass;
    checks.push_back(std::move(c));
  }
  void fail_at(std::string check, cplx z1, cplx z2, double v) {
    if (failures.size() < 10) failures.push_back({std::move(check), z1, z2, v});
  }
  void merge(const VerifyReport& o) {
    pass = pass && o.pass;
    max_equivariance_residual = std::max(max_equivariance_residual, o.max_equivariance_residual);
    min_jacobian_magnitude = std::min(min_jacobian_magnitude, o.min_jacobian_magnitude);
    max_fd_error = std::max(max_fd_error, o.max_fd_error);
    samples += o.samples;
    resampled += o.resampled;
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    for (const auto& f : o.failures)
      if (failures.size() < 10) failures.push_back(f);
  }
};

namespace detail {

struct Sampler {
  std::mt19937_64 rng;
  double r_min, r_max;
  Sampler(std::uint64_t seed, double a, double b) : rng(seed), r_min(a), r_max(b) {}

  std::array<cplx, 2> point() {
    std::normal_distribution<double> N;
    double v[4];
    double s = 0;
    for (double& x : v) {
      x = N(rng);
      s += x * x;
    }
    s = std::sqrt(s);
    double r = std::uniform_real_distribution<double>(r_min, r_max)(rng);
    return {cplx(v[0], v[1]) * (r / s), cplx(v[2], v[3]) * (r / s)};
  }
  cplx scalar() {
    double r = std::uniform_real_distribution<double>(r_min, r_max)(rng);
    double t = std::uniform_real_distribution<double>(0, 2 * std::numbers::pi)(rng);
    return std::polar(r, t);
  }
};

inline bool finite(const ModelPoint& p) {
  return std::isfinite(std::abs(p.x)) && std::isfinite(std::abs(p.y)) && std::isfinite(std::abs(p.w));
}

}  // namespace detail

// dev(F z) against hol . dev(z) on the sampling shell
inline VerifyReport check_equivariance(const StructureRecord& rec, const HopfSurface& s, const VerifyConfig& cfg) {
  cfg.validate();
  VerifyReport rep;
  detail::Sampler S(cfg.seed, cfg.r_min, cfg.r_max);
  NumericElt hol(rec.hol);
  int tries = 0, limit = cfg.samples + cfg.samples / 10;
  while (rep.samples < cfg.samples && tries < limit) {
    ++tries;
    auto [z1, z2] = S.point();
    ModelPoint a, b;
    try {
      auto fz = s.apply_F(z1, z2);
      a = eval_model(rec.dev, fz[0], fz[1]);
      b = hol.act(eval_model(rec.dev, z1, z2));
    } catch (const std::domain_error&) {
      ++rep.resampled;
      continue;
    }
    if (!detail::finite(a) || !detail::finite(b)) {
      ++rep.resampled;
      continue;
    }
    ++rep.samples;
    double r = model_distance(a, b);
    rep.max_equivariance_residual = std::max(rep.max_equivariance_residual, r);
    if (!(r < cfg.tol_equiv)) rep.fail_at("equivariance", z1, z2, r);
  }
  CheckResult c{"equivariance", rep.max_equivariance_residual < cfg.tol_equiv, rep.max_equivariance_residual, ""};
  if (rep.samples < cfg.samples) {
    c.pass = false;
    c.detail = "malformed record: too many samples outside the domain of the map";
  }
  rep.add(std::move(c));
  return rep;
}

// symbolic det in the well-conditioned chart, on the shell, both axes and the
// curves where a polynomial factor of the map vanishes; finite differences as a cross-check
inline VerifyReport check_immersion(const StructureRecord& rec, const VerifyConfig& cfg) {
  cfg.validate();
  const DevMap& d = rec.dev;
  VerifyReport rep;
  detail::Sampler S(cfg.seed ^ 0x9e3779b97f4a7c15ULL, cfg.r_min, cfg.r_max);
  double min_shell = std::numeric_limits<double>::infinity(), min_special = min_shell;

  auto probe = [&](cplx z1, cplx z2, double& min_det, const char* where) {
    ModelPoint mp;
    try {
      mp = eval_model(d, z1, z2);
    } catch (const std::domain_error&) {
      ++rep.resampled;
      return;
    }
    if (!detail::finite(mp)) {
      ++rep.resampled;
      return;
    }
    Chart c = mp.best_chart();
    cplx det = det_numeric(d, z1, z2, c);
    auto J = jacobian_fd(d, z1, z2, c);
    double scale = std::abs(J[0] * J[3]) + std::abs(J[1] * J[2]);
    double err = std::abs(J[0] * J[3] - J[1] * J[2] - det) / std::max(scale, 1e-300);
    if (!std::isfinite(err)) err = std::abs(det) == 0.0 && scale == 0.0 ? 0.0 : 1.0;
    ++rep.samples;
    double mag = std::abs(det);
    min_det = std::min(min_det, mag);
    rep.max_fd_error = std::max(rep.max_fd_error, err);
    if (!(mag > cfg.det_threshold)) rep.fail_at(std::string("det on ") + where, z1, z2, mag);
    if (!(err < cfg.tol_jac)) rep.fail_at(std::string("fd on ") + where, z1, z2, err);
  };

  for (int i = 0; i < cfg.samples; ++i) {
    auto [z1, z2] = S.point();
    probe(z1, z2, min_shell, "shell");
  }
  for (int i = 0; i < cfg.axis_samples; ++i) {
    probe(S.scalar(), 0.0, min_special, "axis z2=0");
    probe(0.0, S.scalar(), min_special, "axis z1=0");
  }
  if (d.hyper) {
    auto [m1, m2] = d.m();
    for (const UniPoly* p : {&d.P1, &d.Q1, &d.P2}) {
      if (p->is_constant()) continue;
      for (cplx r : p->roots())
        for (int i = 0; i < cfg.curve_samples; ++i) {
          cplx z2 = S.scalar();
          cplx z1 = std::pow(r * std::pow(z2, double(m2)), 1.0 / double(m1));
          probe(z1, z2, min_special, "root curve");
        }
    }
  }
  rep.min_jacobian_magnitude = std::min(min_shell, min_special);
  rep.add({"det on shell", min_shell > cfg.det_threshold, min_shell, ""});
  rep.add({"det on axes and root curves", min_special > cfg.det_threshold, min_special,
           min_special > cfg.det_threshold ? "" : "det vanishes: the map is branched"});
  rep.add({"finite differences", rep.max_fd_error < cfg.tol_jac, rep.max_fd_error, ""});
  return rep;
}

// ------------------------------------------------------------------ group axioms

namespace detail {

inline GaussRat random_gauss(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  return GaussRat::frac(num(rng), den(rng), num(rng), den(rng));
}

inline GroupElt random_elt(std::mt19937_64& rng, int n) {
  for (;;) {
    GaussRat a = random_gauss(rng), b = random_gauss(rng), c = random_gauss(rng), d = random_gauss(rng);
    if ((a * d - b * c).is_zero()) continue;
    std::vector<Scalar> p;
    for (int k = 0; k <= n; ++k) p.emplace_back(random_gauss(rng));
    return {Mat2(a, b, c, d), HomogPoly(n, std::move(p))};
  }
}

inline bool same_exact(const GroupElt& x, const GroupElt& y) { return x.g == y.g && x.p == y.p; }

}  // namespace detail

inline VerifyReport check_group_axioms(int n, int trials, std::uint64_t seed, int action_trials = 200) {
  VerifyReport rep;
  std::mt19937_64 rng(seed);
  int assoc = 0, ident = 0, inv = 0;
  GroupElt e = GroupElt::identity(n);
  for (int t = 0; t < trials; ++t) {
    GroupElt x = detail::random_elt(rng, n), y = detail::random_elt(rng, n), z = detail::random_elt(rng, n);
    if (!detail::same_exact(compose(compose(x, y), z), compose(x, compose(y, z)))) ++assoc;
    if (!detail::same_exact(compose(e, x), x) || !detail::same_exact(compose(x, e), x)) ++ident;
    GroupElt xi = inverse(x);
    if (!detail::same_exact(compose(x, xi), e) || !detail::same_exact(compose(xi, x), e)) ++inv;
    ++rep.samples;
  }
  rep.add({"associativity", assoc == 0, double(assoc), std::to_string(trials) + " trials"});
  rep.add({"identity", ident == 0, double(ident), std::to_string(trials) + " trials"});
  rep.add({"inverse", inv == 0, double(inv), std::to_string(trials) + " trials"});

  std::normal_distribution<double> N;
  auto rpoint = [&] { return ModelPoint{cplx(N(rng), N(rng)), 1.0, cplx(N(rng), N(rng)), n}; };
  double act_res = 0, mu_res = 0;
  // zeta = exp(2 pi i / n) as a formal generator with zeta^n = 1
  BasisPtr zb = EigenBasis::formal({std::polar(1.0, 2 * std::numbers::pi / n), 1.0}, {{n, 0}, {0, 1}}, {"zeta", "one"});
  Scalar zeta = Scalar::gen(1, zb);
  int mu_exact = 0;
  for (int t = 0; t < action_trials; ++t) {
    GroupElt x = detail::random_elt(rng, n), y = detail::random_elt(rng, n);
    ModelPoint q = rpoint();
    ModelPoint lhs = act_model(compose(x, y), q), rhs = act_model(x, act_model(y, q));
    act_res = std::max(act_res, model_distance(lhs, rhs));
    GroupElt xz{x.g.scaled(zeta), x.p};
    mu_res = std::max(mu_res, model_distance(act_model(x, q), act_model(xz, q)));
    if (!(xz == x)) ++mu_exact;
  }
  rep.max_equivariance_residual = std::max(act_res, mu_res);
  rep.add({"action compatibility", act_res < 1e-10, act_res, std::to_string(action_trials) + " trials"});
  rep.add({"mu_n invariance", mu_res < 1e-10 && mu_exact == 0, mu_res, std::to_string(action_trials) + " trials"});
  return rep;
}

// ------------------------------------------------------------------ sections

inline VerifyReport check_sections(const SectionFamily& f, const HopfSurface& s, const VerifyConfig& cfg,
                                   int instances = 50) {
  cfg.validate();
  VerifyReport rep;
  std::mt19937_64 rng(cfg.seed);
  detail::Sampler S(cfg.seed + 17, cfg.r_min, cfg.r_max);
  std::array<cplx, 4> g{1.0, 0.0, 0.0, 1.0};
  if (f.projective) g = f.g->numeric();
  cplx a = f.a.is_zero() ? cplx(0.0) : f.a.numeric();
  double worst = 0;
  for (int k = 0; k < instances; ++k) {
    SectionInstance x = random_instance(f, rng, k);
    for (int i = 0; i < cfg.samples; ++i) {
      auto [z1, z2] = S.point();
      auto fz = s.apply_F(z1, z2);
      auto v = x.eval(f, s, z1, z2), w = x.eval(f, s, fz[0], fz[1]);
      double r;
      if (f.projective) {
        std::array<cplx, 2> gv{g[0] * v[0] + g[1] * v[1], g[2] * v[0] + g[3] * v[1]};
        double na = std::hypot(std::abs(w[0]), std::abs(w[1])), nb = std::hypot(std::abs(gv[0]), std::abs(gv[1]));
        r = std::abs(w[0] * gv[1] - w[1] * gv[0]) / (na * nb);
      } else {
        cplx lhs = w[0] / w[1], rhs = a * v[0] / v[1];
        double sc = std::max(std::abs(lhs), std::abs(rhs));
        r = sc == 0.0 ? 0.0 : std::abs(lhs - rhs) / sc;
      }
      if (!std::isfinite(r)) continue;  // sample on a pole of P/Q
      ++rep.samples;
      worst = std::max(worst, r);
      if (!(r < cfg.tol_equiv)) rep.fail_at("section " + to_string(f.variant), z1, z2, r);
    }
  }
  rep.max_equivariance_residual = worst;
  rep.add({"section " + to_string(f.variant), worst < cfg.tol_equiv, worst, f.formula()});
  return rep;
}

}  // namespace hopf
