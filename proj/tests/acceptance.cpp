// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

using namespace hopf;
using fixtures::q;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Matrix {
  std::string name;
  HopfSurface s;
  int n;
  EnumerateOptions opt;
};

std::vector<Matrix> test_matrix() {
  std::vector<Matrix> out;
  for (int n = 1; n <= 3; ++n) out.push_back({"generic (1/2,1/3)", HopfSurface::diagonal(q(1, 2), q(1, 3)), n, {}});
  EnumerateOptions hp;
  hp.hyper_params = {{q(1)}, {q(1), q(3, 1, 1, 2)}};
  out.push_back({"hyperresonant (1/4,1/2)", HopfSurface::diagonal(q(1, 4), q(1, 2)), 2, hp});
  for (int n = 1; n <= 3; ++n) out.push_back({"homothety 1/2", HopfSurface::diagonal(q(1, 2), q(1, 2)), n, {}});
  for (int m = 1; m <= 2; ++m)
    for (int n = m; n <= 3; ++n)
      out.push_back({"exceptional (1/2, m=" + std::to_string(m) + ")", HopfSurface::exceptional(q(1, 2), m), n, {}});
  return out;
}

std::string tag(const Matrix& m) { return m.name + " n=" + std::to_string(m.n); }

// ---------------------------------------------------------------- criteria

Outcome group_axioms() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    auto rep = check_group_axioms(n, 1000, 1000 + n, 0);
    for (const auto& c : rep.checks)
      if (c.name == "associativity" || c.name == "identity" || c.name == "inverse")
        if (!c.pass) o.pass = false, o.detail += c.name + " fails for n=" + std::to_string(n) + "; ";
  }
  if (o.pass) o.detail = "3000 exact triples";
  return o;
}

Outcome action_and_mu() {
  Outcome o;
  double worst = 0;
  for (int n = 1; n <= 3; ++n) {
    auto rep = check_group_axioms(n, 0, 2000 + n, 200);
    o.pass = o.pass && rep.pass;
    worst = std::max(worst, rep.max_equivariance_residual);
  }
  o.detail = "max chordal residual " + [&] { char b[32]; std::snprintf(b, sizeof b, "%.2e", worst); return std::string(b); }();
  return o;
}

Outcome equivariance() {
  Outcome o;
  double worst = 0;
  int count = 0;
  for (const auto& m : test_matrix())
    for (const auto& rec : enumerate_structures(m.s, m.n, m.opt)) {
      auto rep = check_equivariance(rec, m.s, default_config(m.s));
      worst = std::max(worst, rep.max_equivariance_residual);
      ++count;
      if (!rep.pass) o.pass = false, o.detail += tag(m) + " " + rec.provenance + "; ";
    }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d structures, max residual %.2e", count, worst);
  o.detail = buf + (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

Outcome immersion() {
  Outcome o;
  int count = 0, branched = 0;
  double fd = 0;
  std::string why;
  for (const auto& m : test_matrix())
    for (const auto& rec : enumerate_structures(m.s, m.n, m.opt)) {
      auto rep = check_immersion(rec, default_config(m.s));
      fd = std::max(fd, rep.max_fd_error);
      ++count;
      if (!rep.pass) {
        o.pass = false;
        ++branched;
        char d[48];
        std::snprintf(d, sizeof d, " (min |det| %.1e); ", rep.min_jacobian_magnitude);
        why += tag(m) + " " + rec.provenance + d;
      }
    }
  // negative controls must fail
  auto gen = HopfSurface::diagonal(q(1, 2), q(1, 3));
  auto radial = enumerate_structures(gen, 2).front();
  auto perturbed = radial;
  const Mat2& g = radial.hol.g;
  perturbed.hol.g = Mat2(g.a() * Scalar(q(1001, 1000)), g.b(), g.c(), g.d());
  bool c1 = !check_equivariance(perturbed, gen, default_config(gen)).pass;
  auto ex = HopfSurface::exceptional(q(1, 2), 2);
  auto k2 = enumerate_structures(ex, 2).front();
  k2.dev.k1 = 2;
  bool c2 = !check_immersion(k2, default_config(ex)).pass;
  if (!c1) o.pass = false, why += "perturbed holonomy control passed; ";
  if (!c2) o.pass = false, why += "k=2 control passed; ";
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d structures, %d branched, max fd error %.2e, controls %s", count, branched, fd,
                c1 && c2 ? "fail as required" : "WRONG");
  o.detail = buf + (why.empty() ? "" : ": " + why);
  return o;
}

Outcome case_table() {
  struct Row {
    std::string combo;
    bool feasible;
    std::string degrees;
    std::vector<std::string> conditions;
  };
  const std::vector<Row> table{
      {"(0,1,-1,-n)", true, "deg P1 >= 1, deg Q1 = 0, deg P2 = 0", {"m2 = m1*n", "m1 > 1 or n > 1 or degP1 > 1"}},
      {"(0,1,0,1)", false, "", {"degQ1 != degP1"}},
      {"(0,1,1,0)", true, "deg P1 = 0, deg Q1 >= 1, deg P2 = 0", {"m2 = m1*n", "m1 > 1 or n > 1 or degQ1 > 1"}},
      {"(1,0,-1,-n)", true, "deg P1 = 0, deg Q1 = 0, deg P2 >= 1", {"m2 = m1", "m1*degP2 != n"}},
      {"(1,0,0,1)", true, "deg P1 = 0, deg Q1 >= 1, deg P2 = 0", {"m2*n = m1", "m2 > 1 or n > 1 or degQ1 > 1"}},
      {"(1,0,1,0)", false, "", {"degP2 != n*degQ1"}},
  };
  Outcome o;
  auto rep = reproduce_case_table();
  int feasible = 0, impossible = 0;
  if (rep.rows.size() != table.size()) return {false, "row count " + std::to_string(rep.rows.size())};
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& r = rep.rows[i];
    (r.feasible ? feasible : impossible)++;
    bool ok = r.combo.to_string() == table[i].combo && r.feasible == table[i].feasible &&
              r.conditions == table[i].conditions && (!r.feasible || r.pattern_string() == table[i].degrees);
    if (!ok) o.pass = false, o.detail += "mismatch at " + table[i].combo + "; ";
  }
  for (const auto& s : rep.swapped)
    if (!s.feasibility_agrees) o.pass = false, o.detail += "chart swap disagrees at " + s.combo.to_string() + "; ";
  o.detail = std::to_string(rep.rows.size()) + " rows (k1 >= 0), " + std::to_string(feasible) + " feasible, " +
             std::to_string(impossible) + " impossible" + (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

Outcome completeness() {
  Outcome o;
  int classes = 0;
  for (const auto& m : test_matrix()) {
    if (m.s.is_exceptional()) continue;
    auto opt = m.opt;
    opt.hyper_params = default_hyper_params(2);
    auto b = brute_force_admissible(m.s, m.n, 2);
    std::set<Signature> brute(b.signatures.begin(), b.signatures.end());
    auto enumd = signatures_of(enumerate_structures(m.s, m.n, opt), m.s.is_homothety());
    classes += int(brute.size());
    if (brute != enumd)
      o.pass = false, o.detail += tag(m) + ": brute " + std::to_string(brute.size()) + " vs enumerated " +
                                  std::to_string(enumd.size()) + "; ";
  }
  o.detail = std::to_string(classes) + " classes matched" + (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

Outcome sections() {
  Outcome o;
  auto d = HopfSurface::diagonal(q(1, 2), q(1, 3));
  auto h = HopfSurface::diagonal(q(1, 4), q(1, 2));
  auto e = HopfSurface::exceptional(q(1, 2), 2);
  Mat2 jordan(q(3), 1, 0, q(3));
  std::vector<std::pair<SectionFamily, const HopfSurface*>> rows{
      {line_bundle_sections(d, Scalar(q(1, 12))), &d},
      {line_bundle_sections(d, Scalar(q(1, 5))), &d},
      {line_bundle_sections(h, Scalar::gen(2, h.basis()).pow(3)), &h},
      {line_bundle_sections(e, e.lambda().pow(4)), &e},
      {proj_bundle_sections(d, Mat2::diag(q(1, 2), q(3))), &d},
      {proj_bundle_sections(d, Mat2::diag(q(5), 1)), &d},
      {proj_bundle_sections(h, Mat2::diag(Scalar::gen(1, h.basis()), 1)), &h},
      {proj_bundle_sections(d, jordan), &d},
      {proj_bundle_sections(e, jordan), &e},
  };
  double worst = 0;
  for (auto& [f, s] : rows) {
    VerifyConfig cfg = default_config(*s);
    cfg.samples = 100;
    auto rep = check_sections(f, *s, cfg, 50);
    worst = std::max(worst, rep.max_equivariance_residual);
    if (!rep.pass) o.pass = false, o.detail += f.formula() + "; ";
  }
  // the Jordan row as a symbolic expression
  auto j = proj_bundle_sections(e, jordan);
  using L = LPoly<5>;
  L table = L::var(1) * L::var(2, -1) * L::var(3, 2) * L::var(0, -2) + L::var(4);
  bool sym = j.variant == SectionVariant::JordanFamily && j.symbolic() == table;
  if (!sym) o.pass = false, o.detail += "Jordan closed form differs; ";
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu rows x 50 instances x 100 samples, max residual %.2e", rows.size(), worst);
  o.detail = buf + (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

Outcome normal_forms() {
  Outcome o;
  std::mt19937_64 rng(8);
  auto bases = fixtures::normal_form_bases();
  int trials = 0;
  for (const auto& b : bases) {
    auto ref = normal_form(b.x);
    if (!detail::same_exact(normal_form(ref.element).element, ref.element))
      o.pass = false, o.detail += b.name + " not idempotent; ";
    for (int t = 0; t < 100; ++t, ++trials) {
      auto y = fixtures::conjugate_by(fixtures::random_conjugator(rng, b.x.n(), false), b.x);
      if (!(normal_form(y).element == ref.element)) {
        o.pass = false, o.detail += b.name + " trial " + std::to_string(t) + "; ";
        break;
      }
    }
  }
  auto fb = fixtures::formal_base();
  auto ref = normal_form(fb.x);
  for (int t = 0; t < 100; ++t, ++trials) {
    auto c = fixtures::random_conjugator(rng, 2, true, fb.x.g.a().basis());
    if (!(normal_form(fixtures::conjugate_by(c, fb.x)).element == ref.element)) {
      o.pass = false, o.detail += fb.name + "; ";
      break;
    }
  }
  o.detail = std::to_string(bases.size() + 1) + " bases, " + std::to_string(trials) + " conjugations" +
             (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double budget_s;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all{
      {1, "group axioms", 10, group_axioms},
      {2, "action compatibility and mu_n invariance", 5, action_and_mu},
      {3, "equivariance on the test matrix", 30, equivariance},
      {4, "immersion and negative controls", 30, immersion},
      {5, "case table", 60, case_table},
      {6, "bounded completeness", 300, completeness},
      {7, "section functional equations", 60, sections},
      {8, "normal form invariance", 60, normal_forms},
  };
  int failed = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) o.pass = false, o.detail += " (over the " + std::to_string(int(c.budget_s)) + " s budget)";
    failed += !o.pass;
    std::printf("%s %d %s [%.2f s] %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
