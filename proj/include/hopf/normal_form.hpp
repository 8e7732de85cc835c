#pragma once
// Resonant degrees and conjugacy normal forms in G(n).

#include <hopf/group.hpp>

#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hopf {

struct ResonanceReport {
  std::vector<int> degrees;  // sorted
  std::optional<int> leading, trailing;
  int lattice_rank = 0;
};

inline int hyperresonance_rank(const EigenBasis& b) { return b.lattice.rank(); }

namespace detail {

inline int basis_rank_of(const Mat2& g) {
  for (int i = 0; i < 4; ++i)
    if (const auto& b = g(i / 2, i % 2).basis()) return b->lattice.rank();
  return 0;
}

inline bool is_resonant(const Scalar& l1, const Scalar& l2, int k, int n) {
  return (l1.pow(k) * l2.pow(n - k)).is_one();
}

inline GroupElt conjugate(const GroupElt& c, const GroupElt& c_inv, const GroupElt& x) {
  return compose(compose(c, x), c_inv);
}

inline GroupElt conjugate_linear(const Mat2& h, const GroupElt& x) {
  int n = x.n();
  return conjugate({h, HomogPoly(n)}, {h.inverse(), HomogPoly(n)}, x);
}

}  // namespace detail

// Resonant degrees of g (triangular). With p given, leading/trailing refer to
// its nonzero resonant terms; otherwise to the extreme resonant degrees.
inline ResonanceReport resonant_degrees(const Mat2& g, int n, const HomogPoly* p = nullptr) {
  if (n < 1) throw std::invalid_argument("resonant_degrees: n must be >= 1");
  ResonanceReport r;
  r.lattice_rank = detail::basis_rank_of(g);
  const Scalar *l1, *l2;
  bool jordan = false;
  if (g.is_upper()) {
    l1 = &g.a();
    l2 = &g.d();
    jordan = !g.b().is_zero() && g.a() == g.d();
  } else if (g.is_lower()) {
    l1 = &g.a();
    l2 = &g.d();
    jordan = g.a() == g.d();
  } else {
    throw std::invalid_argument("resonant_degrees: g must be triangular (diagonalize first)");
  }
  if (jordan) {
    if (is_root_of_unity(*l1, n)) r.degrees.push_back(n);
  } else {
    for (int k = 0; k <= n; ++k)
      if (detail::is_resonant(*l1, *l2, k, n)) r.degrees.push_back(k);
  }
  for (int k : r.degrees) {
    if (p && (*p)[k].is_zero()) continue;
    if (!r.leading) r.leading = k;
    r.trailing = k;
  }
  return r;
}

struct NormalFormResult {
  GroupElt element;
  bool unique = true;
  bool swap_applied = false;
};

namespace detail {

struct DiagNormal {
  HomogPoly p;
  bool unique = true;
};

// diag(l1,l2) with l1 != l2: kill nonresonant terms, scale leading and trailing to 1
inline DiagNormal normalize_diagonal(const Scalar& l1, const Scalar& l2, const HomogPoly& p) {
  int n = p.degree();
  std::vector<int> res;
  for (int k = 0; k <= n; ++k)
    if (!p[k].is_zero() && is_resonant(l1, l2, k, n)) res.push_back(k);
  DiagNormal out{HomogPoly(n), true};
  if (res.empty()) return out;
  int k1 = res.front(), k2 = res.back();
  if (res.size() >= 2) {
    std::int64_t N = std::int64_t(n) * (k2 - k1);
    if (!is_root_of_unity(l1, N) || !is_root_of_unity(l2, N))
      throw std::logic_error("normal_form: two resonant terms but eigenvalues are not roots of unity");
  }
  for (int k : res) {
    if (!p[k].is_monomial()) throw std::domain_error("normal_form: resonant coefficient is not a monomial");
  }
  out.p[k1] = 1;
  out.p[k2] = 1;
  int delta = k2 - k1;
  for (int k : res) {
    if (k == k1 || k == k2) continue;
    int e1 = k2 - k, e2 = k - k1;
    int g = std::gcd(std::gcd(e1, e2), delta);
    Scalar x = p[k1].pow(-(e1 / g)) * p[k2].pow(-(e2 / g));
    out.p[k] = p[k] * x.root(delta / g);
    out.unique = false;  // defined up to delta-th roots of unity
  }
  return out;
}

inline HomogPoly reversed(const HomogPoly& p) {
  int n = p.degree();
  HomogPoly r(n);
  for (int k = 0; k <= n; ++k) r[k] = p[n - k];
  return r;
}

inline std::strong_ordering compare_coeffs(const HomogPoly& a, const HomogPoly& b) {
  for (int k = a.degree(); k >= 0; --k)
    if (auto c = a[k] <=> b[k]; c != 0) return c;
  return std::strong_ordering::equal;
}

}  // namespace detail

inline NormalFormResult normal_form(const GroupElt& x_in) {
  const int n = x_in.n();
  GroupElt x = x_in;
  if (!x.g.is_upper()) {
    if (!x.g.is_lower()) throw std::invalid_argument("normal_form: g must be triangular");
    x = detail::conjugate_linear(Mat2::swap(), x);
  }
  const Scalar a = x.g.a(), d = x.g.d();

  if (!x.g.b().is_zero() && a == d) {
    // single Jordan block
    if (is_root_of_unity(a, n)) {
      Mat2 u(1, 1, 0, 1);
      HomogPoly p(n);
      if (!x.p[n].is_zero()) p[n] = 1;
      return {{u, p}, true, false};
    }
    return {{Mat2(a, 1, 0, a), HomogPoly(n)}, true, false};
  }

  if (!x.g.b().is_zero()) {
    // distinct eigenvalues: P = [[1,b],[0,d-a]] has P^-1 g P = diag(a,d)
    Mat2 P(1, x.g.b(), 0, d - a);
    if (!P.det().is_monomial())
      throw std::domain_error("normal_form: eigenvalue difference is not invertible in the scalar ring");
    x = detail::conjugate_linear(P.inverse(), x);
  }

  if (a == d) {
    if (is_root_of_unity(a, n)) return {{Mat2::identity(), x.p}, false, false};
    return {{Mat2::diag(a, a), HomogPoly(n)}, true, false};
  }

  auto fwd = detail::normalize_diagonal(a, d, x.p);
  auto bwd = detail::normalize_diagonal(d, a, detail::reversed(x.p));
  // choose the orientation by mu_n-invariant keys (l1/l2, l2^n), then by p
  auto key_f = std::pair{a / d, d.pow(n)};
  auto key_b = std::pair{d / a, a.pow(n)};
  bool swap = false;
  if (auto c = key_b.first <=> key_f.first; c != 0)
    swap = c < 0;
  else if (auto c2 = key_b.second <=> key_f.second; c2 != 0)
    swap = c2 < 0;
  else
    swap = detail::compare_coeffs(bwd.p, fwd.p) < 0;
  if (swap) return {{Mat2::diag(d, a), bwd.p}, bwd.unique, true};
  return {{Mat2::diag(a, d), fwd.p}, fwd.unique, false};
}

// satisfies one of the three normal-form clauses
inline bool is_normal_form(const GroupElt& x) {
  const int n = x.n();
  const Mat2& g = x.g;
  if (!g.is_upper()) return false;
  if (!g.b().is_zero()) {
    if (!(g.b().is_one() && g.a() == g.d())) return false;
    if (x.p.is_zero()) return true;
    if (!(g.a().is_one())) return false;
    for (int k = 0; k < n; ++k)
      if (!x.p[k].is_zero()) return false;
    return x.p[n].is_one();
  }
  if (g.a() == g.d() && is_root_of_unity(g.a(), n)) return true;  // g = I stratum
  auto rep = resonant_degrees(g, n, &x.p);
  for (int k = 0; k <= n; ++k) {
    bool res = std::find(rep.degrees.begin(), rep.degrees.end(), k) != rep.degrees.end();
    if (!res && !x.p[k].is_zero()) return false;
  }
  if (rep.leading && !x.p[*rep.leading].is_one()) return false;
  if (rep.trailing && !x.p[*rep.trailing].is_one()) return false;
  return true;
}

inline bool is_generic(const GroupElt& x) {
  auto nf = normal_form(x);
  if (!nf.element.g.b().is_zero()) return false;
  return nf.element.p.is_zero();
}

}  // namespace hopf
