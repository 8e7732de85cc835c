#pragma once
// Symbolic derivation of the degree patterns of admissible maps with some
// nonconstant polynomial, as functions of n, m1, m2.
//
// For each exponent combination ((k1,l1),(k2~,l2~)) and each set of nonconstant
// polynomials, admissibility forces A=0 (P1), B=0 (P2), C=0 (Q1). These are
// linear in the unknown degrees; solving them and substituting into D and D~
// decides feasibility.

#include <hopf/devmap.hpp>
#include <hopf/laurent.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hopf {

using CPoly = LPoly<6>;

namespace cases {

enum Var : std::size_t { M1 = 0, M2 = 1, NN = 2, DP1 = 3, DQ1 = 4, DP2 = 5 };
inline const std::array<std::string, 6> kNames{"m1", "m2", "n", "degP1", "degQ1", "degP2"};
inline const std::array<std::string, 3> kPolyNames{"P1", "Q1", "P2"};
inline constexpr std::array<std::size_t, 3> kDegVar{DP1, DQ1, DP2};

inline CPoly v(std::size_t i) { return CPoly::var(i); }
inline std::string str(const CPoly& p) { return p.to_string(kNames); }

}  // namespace cases

// integers that may be -n, written as a + b*n
struct NLinear {
  int a = 0, b = 0;
  CPoly poly() const { return CPoly(a) + CPoly(b) * cases::v(cases::NN); }
  int at(int n) const { return a + b * n; }
  std::string to_string() const {
    if (b == 0) return std::to_string(a);
    if (a == 0) return b == 1 ? "n" : b == -1 ? "-n" : std::to_string(b) + "n";
    return std::to_string(a) + (b > 0 ? "+" : "-") + "n";
  }
  friend bool operator==(const NLinear&, const NLinear&) = default;
};

struct ExponentPair {
  NLinear k, l;
  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
  std::string to_string() const { return "(" + k.to_string() + "," + l.to_string() + ")"; }
};

// the allowed list {(-1,-n), (0,0), (0,1), (1,0)}
inline std::vector<ExponentPair> kl_list() {
  return {{{-1, 0}, {0, -1}}, {{0, 0}, {0, 0}}, {{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}};
}

struct Combo {
  ExponentPair first;  // (k1, l1)
  ExponentPair tilde;  // (k2~, l2~)
  std::string to_string() const {
    return "(" + first.k.to_string() + "," + first.l.to_string() + "," + tilde.k.to_string() + "," +
           tilde.l.to_string() + ")";
  }
  friend bool operator==(const Combo&, const Combo&) = default;
};

enum class DegreeKind { Zero, Free, Forced };

struct DegreeEntry {
  DegreeKind kind = DegreeKind::Zero;
  CPoly value;  // for Forced
  std::string to_string(std::size_t poly) const {
    std::string name = "deg " + cases::kPolyNames[poly];
    switch (kind) {
      case DegreeKind::Zero: return name + " = 0";
      case DegreeKind::Free: return name + " >= 1";
      case DegreeKind::Forced: return name + " = " + cases::str(value);
    }
    return name;
  }
};

struct PatternAnalysis {
  std::array<bool, 3> nonconstant{};  // P1, Q1, P2
  bool feasible = false;
  std::string failure;
  std::array<DegreeEntry, 3> degrees;
  std::vector<CPoly> relations;  // each = 0, after normalisation
  std::optional<std::pair<std::size_t, CPoly>> substitution;  // parameter eliminated by the relation
  CPoly D_raw, D, D_tilde;  // D before / after solving, D~ after solving
  int free_count = 0;
  bool fails_only_on_D = false;
  bool forced_positive = true;
};

struct CaseRow {
  Combo combo;
  bool feasible = false;
  PatternAnalysis pattern;
  std::vector<std::string> conditions;  // rendered side conditions
  std::string pattern_string() const {
    std::string s;
    for (std::size_t i = 0; i < 3; ++i) s += (i ? ", " : "") + pattern.degrees[i].to_string(i);
    return s;
  }
};

struct ChartSwapNote {
  Combo combo;
  Combo image;
  bool feasibility_agrees = false;
};

struct CaseReport {
  std::vector<CaseRow> rows;             // k1 >= 0 combinations, one row each
  std::vector<ChartSwapNote> swapped;    // k1 = -1 combinations, reduced by the chart swap
  std::vector<std::pair<Combo, std::string>> excluded;  // ruled out before any degree analysis
  std::optional<std::array<int, 3>> instance;           // (n, m1, m2) if given
};

namespace cases {

// "x1*x2*...*xk != 1" for positive-integer variables reads as "some xi > 1"
inline std::string render_nonzero(const CPoly& cond) {
  CPoly c = cond.split_content().second;
  if (c.uniform_sign() < 0 || c.constant() == 1) c = -c;
  if (c.terms().size() == 2 && c.constant() == -1) {
    for (const auto& [m, coef] : c.terms()) {
      if (m == CPoly::Mono{}) continue;
      bool simple = coef == 1;
      for (int e : m) simple = simple && (e == 0 || e == 1);
      if (simple) {
        std::string s;
        for (std::size_t i = 0; i < 6; ++i)
          if (m[i]) s += (s.empty() ? "" : " or ") + kNames[i] + " > 1";
        return s;
      }
    }
  }
  CPoly pos, neg;
  for (const auto& [m, coef] : c.terms())
    (sgn(coef) > 0 ? pos : neg) = (sgn(coef) > 0 ? pos : neg) + CPoly::term(abs(coef), m);
  return str(pos) + " != " + str(neg);
}

inline std::string render_relation(const CPoly& rel) {
  CPoly pos, neg;
  for (const auto& [m, coef] : rel.terms())
    (sgn(coef) > 0 ? pos : neg) = (sgn(coef) > 0 ? pos : neg) + CPoly::term(abs(coef), m);
  // put the lone variable on the left
  if (neg.is_monomial() && !pos.is_monomial()) std::swap(pos, neg);
  if (pos.is_monomial() && neg.is_monomial() && neg.terms().begin()->first < pos.terms().begin()->first &&
      CPoly::mono_str(neg.terms().begin()->first, kNames).find('*') == std::string::npos)
    std::swap(pos, neg);
  return str(pos) + " = " + str(neg);
}

// pick a parameter that the relation determines linearly: a lone term x with
// coefficient +-1 not appearing elsewhere; prefer m2, then m1, then n
inline std::optional<std::pair<std::size_t, CPoly>> eliminate(const CPoly& rel) {
  for (std::size_t x : {M2, M1, NN}) {
    if (!rel.involves(x) || rel.max_degree(x) != 1) continue;
    auto [lin, rest] = rel.split_linear(x);
    if (!lin.is_constant()) continue;
    mpq_class c = lin.constant();
    if (c != 1 && c != -1) continue;
    return std::pair{x, CPoly(0) - rest * CPoly(c == 1 ? 1L : -1L)};
  }
  return std::nullopt;
}

inline PatternAnalysis analyse(const Combo& cb, std::array<bool, 3> nonconst) {
  PatternAnalysis pa;
  pa.nonconstant = nonconst;
  CPoly m1 = v(M1), m2 = v(M2), n = v(NN);
  CPoly dP1 = nonconst[0] ? v(DP1) : CPoly(0);
  CPoly dQ1 = nonconst[1] ? v(DQ1) : CPoly(0);
  CPoly dP2 = nonconst[2] ? v(DP2) : CPoly(0);
  CPoly k1 = cb.first.k.poly(), l1 = cb.first.l.poly();
  CPoly k2 = cb.tilde.k.poly() + m2 * (dP1 - dQ1);
  CPoly l2 = cb.tilde.l.poly() + m2 * (dP2 - n * dQ1);
  CPoly A = m1 * l2 + l1 * m2, B = m1 * k2 + k1 * m2, C = n * B - A, D = k1 * l2 - l1 * k2;
  // D~ = D + A (degP1 - degQ1) - B (degP2 - n degQ1)
  CPoly Dt = D + A * (dP1 - dQ1) - B * (dP2 - n * dQ1);
  pa.D_raw = D;

  std::vector<CPoly> eqs;
  if (nonconst[0]) eqs.push_back(A);
  if (nonconst[1]) eqs.push_back(C);
  if (nonconst[2]) eqs.push_back(B);

  std::map<std::size_t, CPoly> solved;
  std::vector<CPoly> param_eqs;
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    CPoly e = eqs[i];
    std::optional<std::size_t> piv;
    for (std::size_t x : kDegVar) {
      if (!e.involves(x)) continue;
      auto [lin, rest] = e.split_linear(x);
      if (lin.is_monomial()) { piv = x; break; }
    }
    if (!piv) {
      bool has_unknown = e.involves(DP1) || e.involves(DQ1) || e.involves(DP2);
      if (has_unknown) throw std::domain_error("case table: non-monomial pivot");
      param_eqs.push_back(e);
      continue;
    }
    auto [lin, rest] = e.split_linear(*piv);
    CPoly val = CPoly(0) - rest * lin.inverse_monomial();
    for (auto& [x, s] : solved) s = s.substitute(*piv, val);
    for (std::size_t j = i + 1; j < eqs.size(); ++j) eqs[j] = eqs[j].substitute(*piv, val);
    solved[*piv] = val;
  }

  // parameter relations
  for (const auto& e : param_eqs) {
    if (e.is_zero()) continue;
    if (e.uniform_sign() != 0) {
      pa.failure = "contradiction: " + str(e) + " = 0 with positive parameters";
      return pa;
    }
    CPoly r = e.split_content().second;
    pa.relations.push_back(r);
  }
  auto apply = [&](CPoly p) {
    for (const auto& [x, s] : solved) p = p.substitute(x, s);
    if (pa.substitution) p = p.substitute(pa.substitution->first, pa.substitution->second);
    return p;
  };
  if (!pa.relations.empty()) {
    if (pa.relations.size() > 1) throw std::domain_error("case table: more than one parameter relation");
    pa.substitution = eliminate(pa.relations[0]);
    if (!pa.substitution) throw std::domain_error("case table: cannot eliminate a parameter");
  }

  for (std::size_t i = 0; i < 3; ++i) {
    if (!nonconst[i]) continue;
    std::size_t x = kDegVar[i];
    auto it = solved.find(x);
    if (it == solved.end()) {
      pa.degrees[i].kind = DegreeKind::Free;
      ++pa.free_count;
      continue;
    }
    CPoly val = apply(it->second);
    pa.degrees[i] = {DegreeKind::Forced, val};
    bool param_only = !val.involves(DP1) && !val.involves(DQ1) && !val.involves(DP2);
    if (param_only && (val.is_zero() || val.uniform_sign() < 0)) pa.forced_positive = false;
  }

  pa.D = apply(D);
  pa.D_tilde = apply(Dt);
  if (!pa.forced_positive) {
    pa.failure = "forced degree is not positive";
    return pa;
  }
  if (pa.D.is_zero() || pa.D_tilde.is_zero()) {
    pa.failure = pa.D.is_zero() ? "D = 0 identically" : "D~ = 0 identically";
    pa.fails_only_on_D = true;
    return pa;
  }
  pa.feasible = true;
  return pa;
}

inline std::vector<std::array<bool, 3>> patterns() {
  std::vector<std::array<bool, 3>> out;
  for (int mask = 1; mask < 8; ++mask) out.push_back({bool(mask & 1), bool(mask & 2), bool(mask & 4)});
  return out;
}

inline ExponentPair hat_pair(const ExponentPair& p) {
  // (k, l) -> (-k, l - n k)
  return {{-p.k.a, -p.k.b}, {p.l.a, p.l.b - p.k.a}};  // k never depends on n here
}

}  // namespace cases

inline CaseRow analyse_combo(const Combo& cb) {
  CaseRow row;
  row.combo = cb;
  std::vector<PatternAnalysis> all;
  for (auto pat : cases::patterns()) all.push_back(cases::analyse(cb, pat));
  const PatternAnalysis* pick = nullptr;
  for (const auto& pa : all)
    if (pa.feasible) { pick = &pa; break; }
  if (pick) {
    row.feasible = true;
  } else {
    // the pattern whose degrees are all forced and positive but which branches (D = 0)
    for (const auto& pa : all)
      if (pa.fails_only_on_D && pa.free_count == 0) { pick = &pa; break; }
    if (!pick)
      for (const auto& pa : all)
        if (pa.fails_only_on_D) { pick = &pa; break; }
    if (!pick) pick = &all.front();
  }
  row.pattern = *pick;
  for (const auto& r : row.pattern.relations) row.conditions.push_back(cases::render_relation(r));
  // D != 0; for infeasible rows show it before solving, which is where it contradicts
  const CPoly& dc = row.feasible ? row.pattern.D : row.pattern.D_raw;
  if (!dc.is_constant()) row.conditions.push_back(cases::render_nonzero(dc));
  if (row.feasible && !row.pattern.D_tilde.is_constant() && !(row.pattern.D_tilde == row.pattern.D) &&
      !(row.pattern.D_tilde == -row.pattern.D))
    row.conditions.push_back(cases::render_nonzero(row.pattern.D_tilde));
  return row;
}

inline CaseReport reproduce_case_table(std::optional<std::array<int, 3>> instance = std::nullopt) {
  CaseReport rep;
  rep.instance = instance;
  auto list = kl_list();
  auto is_zero_pair = [](const ExponentPair& p) { return p.k == NLinear{} && p.l == NLinear{}; };
  std::vector<CaseRow> by_combo;
  for (const auto& first : list)
    for (const auto& td : list) {
      Combo cb{first, td};
      if (is_zero_pair(first)) {
        rep.excluded.push_back({cb, "(k1,l1) = (0,0)"});
        continue;
      }
      if (is_zero_pair(td)) {
        rep.excluded.push_back({cb, "(k2~,l2~) = (0,0) gives D~ = 0"});
        continue;
      }
      if (first.k.a < 0) {
        Combo img{cases::hat_pair(first), cases::hat_pair(td)};
        bool f_here = analyse_combo(cb).feasible;
        bool f_img = analyse_combo(img).feasible;
        rep.swapped.push_back({cb, img, f_here == f_img});
        continue;
      }
      rep.rows.push_back(analyse_combo(cb));
    }
  return rep;
}

// ------------------------------------------------------------------ instances

namespace cases {

inline std::optional<mpq_class> eval_at(CPoly p, const std::array<long, 6>& x, const std::array<bool, 6>& known) {
  for (std::size_t i = 0; i < 6; ++i)
    if (known[i] && p.involves(i)) {
      if (x[i] == 0 && p.max_degree(i) >= 0) {
        // no negative powers of a vanishing variable
        for (const auto& [m, c] : p.terms())
          if (m[i] < 0) return std::nullopt;
      }
      p = p.substitute(i, CPoly(x[i]));
    }
  if (!p.is_constant()) return std::nullopt;
  return p.constant();
}

}  // namespace cases

// degree triples (P1, Q1, P2) the row allows at (n, m1, m2), up to deg_bound
inline std::vector<std::array<int, 3>> row_instances(const CaseRow& row, int n, int m1, int m2, int deg_bound) {
  using namespace cases;
  std::vector<std::array<int, 3>> out;
  if (!row.feasible) return out;
  const auto& pa = row.pattern;
  std::array<long, 6> x{m1, m2, n, 0, 0, 0};
  std::array<bool, 6> known{true, true, true, false, false, false};
  for (const auto& r : pa.relations) {
    auto v = eval_at(r, x, known);
    if (!v || *v != 0) return out;
  }
  std::array<int, 3> lo{}, hi{};
  for (std::size_t i = 0; i < 3; ++i) {
    bool free = pa.degrees[i].kind == DegreeKind::Free;
    lo[i] = free ? 1 : 0;
    hi[i] = free ? deg_bound : 0;
  }
  for (int a = lo[0]; a <= hi[0]; ++a)
    for (int b = lo[1]; b <= hi[1]; ++b)
      for (int c = lo[2]; c <= hi[2]; ++c) {
        std::array<long, 6> y = x;
        y[DP1] = a, y[DQ1] = b, y[DP2] = c;
        std::array<bool, 6> all{true, true, true, true, true, true};
        std::array<int, 3> deg{a, b, c};
        bool ok = true;
        for (std::size_t i = 0; i < 3 && ok; ++i) {
          if (pa.degrees[i].kind != DegreeKind::Forced) continue;
          auto v = eval_at(pa.degrees[i].value, y, all);
          ok = v && v->get_den() == 1 && *v >= 1 && *v <= deg_bound;
          if (ok) deg[i] = int(v->get_num().get_si());
        }
        if (!ok) continue;
        for (std::size_t i = 0; i < 3; ++i) y[kDegVar[i]] = deg[i];
        auto d = eval_at(pa.D, y, all), dt = eval_at(pa.D_tilde, y, all);
        if (!d || !dt || *d == 0 || *dt == 0) continue;
        out.push_back(deg);
      }
  return out;
}

}  // namespace hopf
