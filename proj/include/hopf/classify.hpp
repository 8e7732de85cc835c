#pragma once
// Enumeration of O(n)-structures on a primary Hopf surface, and a bounded
// brute-force search over admissible developing maps used as a completeness oracle.

#include <hopf/devmap.hpp>
#include <hopf/hopf_surface.hpp>

#include <algorithm>
#include <array>
#include <future>
#include <set>
#include <string>
#include <vector>

namespace hopf {

enum class StructureKind { Radial, Eigen, ExceptionalEigen, Hyperresonant };

inline std::string to_string(StructureKind k) {
  switch (k) {
    case StructureKind::Radial: return "radial";
    case StructureKind::Eigen: return "eigen";
    case StructureKind::ExceptionalEigen: return "exceptional-eigen";
    case StructureKind::Hyperresonant: return "hyperresonant";
  }
  return "?";
}

struct StructureRecord {
  StructureKind kind = StructureKind::Radial;
  int axis = 0;        // Eigen
  int hyper_case = 0;  // Hyperresonant rows 1..5
  int swap_of = 0;     // rows 4,5 are the index swaps of rows 1,2
  std::vector<GaussRat> params;
  DevMap dev;
  GroupElt hol;
  bool complete = false, essential = false;
  std::string provenance;
};

struct EnumerateOptions {
  std::vector<std::vector<GaussRat>> hyper_params;  // one list a_1..a_N per family instance
  std::vector<int> eigen_axes{1, 2};                 // homothety only
};

namespace detail {

inline void check_params(const std::vector<GaussRat>& a) {
  if (a.empty()) throw std::invalid_argument("enumerate_structures: empty parameter list");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) throw std::invalid_argument("enumerate_structures: parameter a_j = 0");
    for (std::size_t j = 0; j < i; ++j)
      if (a[i] == a[j]) throw std::invalid_argument("enumerate_structures: repeated parameter " + a[i].to_string());
  }
}

inline StructureRecord make_record(StructureKind k, DevMap d, GroupElt hol, std::string prov) {
  StructureRecord r;
  r.kind = k;
  r.dev = std::move(d);
  r.hol = std::move(hol);
  r.provenance = std::move(prov);
  r.essential = k == StructureKind::Eigen || k == StructureKind::ExceptionalEigen;
  return r;
}

inline DevMap constant_map(int n, int k1, int k2, int l1, int l2) {
  DevMap d;
  d.n = n;
  d.k1 = k1;
  d.k2 = k2;
  d.l1 = l1;
  d.l2 = l2;
  return d;
}

// holonomy of the hyperresonant rows, written as listed with the family
inline GroupElt hyper_row_holonomy(int row, const Hyperresonance& h, int N, int n, const BasisPtr& b) {
  Frac in(1, n);
  Exp a, d;
  switch (row) {
    case 1:
    case 2:
      a = Exp{Frac(h.m1 * N) - in, 0};
      d = Exp{-in, 1};
      break;
    case 3:
      a = Exp{1, -Frac(h.m2 * N, n)};
      d = Exp{0, Frac(1) - Frac(h.m2 * N, n)};
      break;
    default:
      a = Exp{1, -in};
      d = Exp{Frac(h.m1 * N), -in};
  }
  return {Mat2::diag(Scalar::monomial(1, a, b), Scalar::monomial(1, d, b)), HomogPoly(n)};
}

}  // namespace detail

// Dev maps of the hyperresonant rows; Pi = prod (u - a_j).
//   1,2: t = (z2^(N m2 - 1) Pi, z1 z2^-n)               m2 = n m1
//   3:   t = (z1/z2, z2^(N m - n) Pi)                   m1 = m2 = m
//   4,5: t = (z1 z2^(-N m2)/Pi, z2^(1 - n N m2)/Pi^n)   m1 = n m2
inline DevMap hyper_row_map(int row, const Hyperresonance& h, int n, const std::vector<GaussRat>& a) {
  int N = int(a.size());
  DevMap d;
  d.n = n;
  d.hyper = IVec{h.m1, h.m2};
  UniPoly Pi = UniPoly::from_roots(a);
  switch (row) {
    case 1:
    case 2:
      d.k1 = 0, d.k2 = N * h.m2 - 1, d.l1 = 1, d.l2 = -n;
      d.P1 = Pi;
      break;
    case 3:
      d.k1 = 1, d.k2 = -1, d.l1 = 0, d.l2 = N * h.m2 - n;
      d.P2 = Pi;
      break;
    default:
      d.k1 = 1, d.k2 = -N * h.m2, d.l1 = 0, d.l2 = 1 - n * N * h.m2;
      d.Q1 = Pi;
  }
  return d;
}

// which rows apply for hyperresonance h, degree n and N parameters
inline std::vector<int> hyper_rows(const Hyperresonance& h, int n, int N) {
  std::vector<int> rows;
  if (h.m2 == n * h.m1) {
    if (N == 1 && (h.m1 >= 2 || n >= 2)) rows.push_back(1);
    if (N >= 2) rows.push_back(2);
  }
  if (h.m1 == h.m2 && h.m1 * N != n) rows.push_back(3);
  if (h.m1 == n * h.m2) {
    if (N == 1 && (h.m2 >= 2 || n >= 2)) rows.push_back(4);
    if (N >= 2) rows.push_back(5);
  }
  return rows;
}

inline std::vector<StructureRecord> enumerate_structures(const HopfSurface& s, int n, const EnumerateOptions& opt = {}) {
  if (n < 1) throw std::invalid_argument("enumerate_structures: n must be >= 1");
  for (const auto& a : opt.hyper_params) detail::check_params(a);
  const BasisPtr& B = s.basis();
  std::vector<StructureRecord> out;

  if (s.is_exceptional()) {
    int m = s.m();
    if (n < m) return out;
    if (m == 1) {
      out.push_back(detail::make_record(StructureKind::Radial, detail::constant_map(n, 1, -1, 0, -n),
                                        {s.linear_matrix(), HomogPoly(n)}, "radial, exceptional m = 1"));
    }
    Scalar l = s.lambda();
    Mat2 g = Mat2::diag(Scalar::monomial(1, Exp{Frac(1) - Frac(m, n), 0}, B),
                        Scalar::monomial(1, Exp{-Frac(m, n), 0}, B));
    HomogPoly p = HomogPoly::monomial(n, m, l.pow(-m));
    out.push_back(detail::make_record(StructureKind::ExceptionalEigen, detail::constant_map(n, 1, 0, 0, 1),
                                      {g, p}, "eigenstructure, exceptional"));
    return out;
  }

  // radial: t = (z1/z2, z2^-n), holonomy (F, 0)
  out.push_back(detail::make_record(StructureKind::Radial, detail::constant_map(n, 1, -1, 0, -n),
                                    {s.linear_matrix(), HomogPoly(n)}, "radial"));

  // eigenstructures: t = (z1, z2) and t = (z2, z1)
  std::vector<int> axes{1, 2};
  if (s.is_homothety()) axes = opt.eigen_axes;
  for (int ax : axes) {
    if (ax != 1 && ax != 2) throw std::invalid_argument("enumerate_structures: eigen axis must be 1 or 2");
    DevMap d = ax == 1 ? detail::constant_map(n, 1, 0, 0, 1) : detail::constant_map(n, 0, 1, 1, 0);
    Scalar la = ax == 1 ? s.lambda1() : s.lambda2(), lb = ax == 1 ? s.lambda2() : s.lambda1();
    Scalar den = lb.root(n).inv();
    auto r = detail::make_record(StructureKind::Eigen, d, {Mat2::diag(la * den, den), HomogPoly(n)},
                                 "eigenstructure, axis " + std::to_string(ax));
    r.axis = ax;
    out.push_back(std::move(r));
  }

  if (auto h = s.hyper()) {
    for (const auto& a : opt.hyper_params) {
      int N = int(a.size());
      for (int row : hyper_rows(*h, n, N)) {
        auto r = detail::make_record(StructureKind::Hyperresonant, hyper_row_map(row, *h, n, a),
                                     detail::hyper_row_holonomy(row, *h, N, n, B),
                                     "hyperresonant row " + std::to_string(row));
        r.hyper_case = row;
        r.params = a;
        if (row >= 4) r.swap_of = row - 3;
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

// ------------------------------------------------------------------ canonical forms

// the map precomposed with (z1,z2) -> (z2,z1), rewritten for the swapped hyperresonance
inline DevMap swap_indices(const DevMap& d) {
  DevMap t = tilde(d);
  DevMap s = t;
  s.k1 = t.k2, s.k2 = t.k1;
  s.l1 = t.l2, s.l2 = t.l1;
  if (d.hyper) s.hyper = IVec{(*d.hyper)[1], (*d.hyper)[0]};
  return s;
}

// discrete data of a family: exponents, degrees, hyperresonance
using Signature = std::array<int, 11>;

inline Signature raw_signature(const DevMap& d) {
  IVec m = d.hyper.value_or(IVec{0, 0});
  return {d.k1 < 0 ? 1 : 0, d.k1, d.k2, d.l1, d.l2, d.dP1(), d.dQ1(), d.dP2(), int(m[0]), int(m[1]), d.n};
}

// orbit under the chart swap and, for the homothety, the index swap
inline std::vector<DevMap> iso_orbit(const DevMap& d, bool index_swap) {
  std::vector<DevMap> orbit{d, hat(d)};
  if (index_swap) {
    DevMap s = swap_indices(d);
    orbit.push_back(s);
    orbit.push_back(hat(s));
  }
  return orbit;
}

// orbit member with the smallest signature
inline DevMap canonical_form(const DevMap& d, bool index_swap) {
  auto orbit = iso_orbit(d, index_swap);
  return *std::min_element(orbit.begin(), orbit.end(),
                           [](const DevMap& a, const DevMap& b) { return raw_signature(a) < raw_signature(b); });
}

inline Signature canonical_signature(const DevMap& d, bool index_swap) {
  return raw_signature(canonical_form(d, index_swap));
}

struct BruteForceResult {
  std::vector<DevMap> admissible;       // every admissible map found
  std::vector<DevMap> representatives;  // one per class, sorted by signature
  std::vector<Signature> signatures;
};

namespace detail {

// fixed generic roots, distinct across the three polynomials
inline UniPoly sample_poly(int which, int deg) {
  std::vector<GaussRat> r;
  for (int j = 0; j < deg; ++j) r.push_back(GaussRat::frac(3 * which + 7 * j + 2, 5, 2 * j + which + 1, 11));
  return UniPoly::from_roots(r);
}

}  // namespace detail

inline BruteForceResult brute_force_admissible(const HopfSurface& s, int n, int deg_bound) {
  if (s.is_exceptional()) throw std::invalid_argument("brute_force_admissible: diagonal surfaces only");
  auto h = s.hyper();
  int bound = h ? deg_bound : 0;
  std::vector<std::array<int, 2>> kl{{-1, -n}, {0, 0}, {0, 1}, {1, 0}};

  auto task = [&](std::array<int, 2> first, std::array<int, 2> second) {
    std::vector<DevMap> found;
    for (int d1 = 0; d1 <= bound; ++d1)
      for (int e = 0; e <= bound; ++e)
        for (int d2 = 0; d2 <= bound; ++d2) {
          DevMap d;
          d.n = n;
          if (h) d.hyper = IVec{h->m1, h->m2};
          int m2 = h ? h->m2 : 1;
          d.k1 = first[0];
          d.l1 = first[1];
          d.k2 = second[0] + m2 * (d1 - e);
          d.l2 = second[1] + m2 * (d2 - n * e);
          d.P1 = detail::sample_poly(0, d1);
          d.Q1 = detail::sample_poly(1, e);
          d.P2 = detail::sample_poly(2, d2);
          if (d.all_constant()) d.hyper.reset();
          if (is_admissible(d)) found.push_back(std::move(d));
        }
    return found;
  };

  std::vector<std::future<std::vector<DevMap>>> jobs;
  for (const auto& a : kl)
    for (const auto& b : kl) jobs.push_back(std::async(std::launch::async, task, a, b));

  BruteForceResult res;
  for (auto& j : jobs)
    for (auto& d : j.get()) res.admissible.push_back(std::move(d));

  bool sw = s.is_homothety();
  std::set<Signature> seen;
  std::vector<std::pair<Signature, DevMap>> reps;
  for (const auto& d : res.admissible) {
    DevMap c = canonical_form(d, sw);
    Signature sig = raw_signature(c);
    if (seen.insert(sig).second) reps.emplace_back(sig, std::move(c));
  }
  std::sort(reps.begin(), reps.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [c, d] : reps) {
    res.signatures.push_back(c);
    res.representatives.push_back(d);
  }
  return res;
}

inline std::set<Signature> signatures_of(const std::vector<StructureRecord>& recs, bool index_swap) {
  std::set<Signature> out;
  for (const auto& r : recs) out.insert(canonical_signature(r.dev, index_swap));
  return out;
}

// parameter lists of sizes 1..deg_bound, matching the brute-force degrees
inline std::vector<std::vector<GaussRat>> default_hyper_params(int max_n) {
  std::vector<std::vector<GaussRat>> out;
  for (int N = 1; N <= max_n; ++N) {
    std::vector<GaussRat> a;
    for (int j = 0; j < N; ++j) a.push_back(GaussRat::frac(j + 1, 1, j, 3));
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace hopf
