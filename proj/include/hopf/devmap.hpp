#pragma once
// Developing maps of monomial-times-rational shape on diagonal Hopf surfaces:
//   t1 = z1^k1 z2^k2 P1(u)/Q1(u),  t2 = z1^l1 z2^l2 P2(u)/Q1(u)^n,  u = z1^m1 / z2^m2
// with the A,B,C,D calculus for their Jacobians.

#include <hopf/group.hpp>
#include <hopf/unipoly.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace hopf {

struct DevMap {
  int n = 1;
  int k1 = 0, k2 = 0, l1 = 0, l2 = 0;
  UniPoly P1{1}, Q1{1}, P2{1};
  std::optional<IVec> hyper;  // (m1, m2); absent means all polynomials constant

  IVec m() const { return hyper.value_or(IVec{1, 1}); }
  int dP1() const { return P1.degree(); }
  int dQ1() const { return Q1.degree(); }
  int dP2() const { return P2.degree(); }
  bool all_constant() const { return P1.is_constant() && Q1.is_constant() && P2.is_constant(); }
  friend bool operator==(const DevMap&, const DevMap&) = default;

  std::string to_string() const;
};

// t1 = z1^a z2^b P/Q written out, with u spelled as a monomial ratio
inline std::string DevMap::to_string() const {
  auto mono = [](int a, int b) {
    std::string s;
    auto one = [&](const char* z, int e) {
      if (e == 0) return;
      if (!s.empty()) s += "*";
      s += z;
      if (e != 1) s += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    };
    one("z1", a);
    one("z2", b);
    return s;
  };
  auto side = [&](int a, int b, const UniPoly& p, const UniPoly& q, int qpow) {
    std::string s = mono(a, b);
    bool unit_q = q.is_constant() && q.coeff(0) == GaussRat(1);
    if (!(p.is_constant() && p.coeff(0) == GaussRat(1)) || s.empty()) {
      std::string ps = p.is_constant() && s.empty() ? p.to_string() : "(" + p.to_string() + ")";
      s = s.empty() ? ps : s + "*" + ps;
    }
    if (!unit_q) s += "/(" + q.to_string() + ")" + (qpow != 1 ? "^" + std::to_string(qpow) : "");
    return s;
  };
  std::string out = "t1 = " + side(k1, k2, P1, Q1, 1) + ", t2 = " + side(l1, l2, P2, Q1, n);
  if (hyper) {
    auto pw = [](const char* z, std::int64_t e) { return e == 1 ? std::string(z) : std::string(z) + "^" + std::to_string(e); };
    out += ", u = " + pw("z1", (*hyper)[0]) + "/" + pw("z2", (*hyper)[1]);
  }
  return out;
}

struct Abcd {
  long A = 0, B = 0, C = 0, D = 0;
  friend bool operator==(const Abcd&, const Abcd&) = default;
};

struct AbcdReport {
  Abcd base, tilde, hat;
  int k2_tilde = 0, l2_tilde = 0;
};

inline Abcd abcd_raw(const DevMap& d) {
  auto [m1, m2] = d.m();
  Abcd r;
  r.A = long(m1) * d.l2 + long(d.l1) * m2;
  r.B = long(m1) * d.k2 + long(d.k1) * m2;
  r.C = long(d.n) * r.B - r.A;
  r.D = long(d.k1) * d.l2 - long(d.l1) * d.k2;
  return r;
}

// the same map written in the variable 1/u
inline DevMap tilde(const DevMap& d) {
  auto [m1, m2] = d.m();
  int d1 = d.dP1() - d.dQ1(), d2 = d.dP2() - d.n * d.dQ1();
  DevMap t = d;
  t.k1 = d.k1 + m1 * d1;
  t.k2 = d.k2 - m2 * d1;
  t.l1 = d.l1 + m1 * d2;
  t.l2 = d.l2 - m2 * d2;
  t.P1 = d.P1.reversed();
  t.Q1 = d.Q1.reversed();
  t.P2 = d.P2.reversed();
  if (d.hyper) t.hyper = IVec{-m1, -m2};
  return t;
}

// the same map in chart S: s1 = 1/t1, s2 = t2/t1^n
inline DevMap hat(const DevMap& d) {
  DevMap h = d;
  h.k1 = -d.k1;
  h.k2 = -d.k2;
  h.l1 = d.l1 - d.n * d.k1;
  h.l2 = d.l2 - d.n * d.k2;
  h.P1 = d.Q1;
  h.Q1 = d.P1;
  return h;
}

// transformation rules for A..D in terms of the original constants
inline Abcd tilde_dictionary(const Abcd& a, int dP1, int dQ1, int dP2, int n) {
  long d1 = dP1 - dQ1, d2 = dP2 - long(n) * dQ1;
  Abcd t;
  t.A = -a.A;
  t.B = -a.B;
  t.C = -a.C;
  t.D = a.D + a.A * d1 - a.B * d2;
  return t;
}
inline Abcd hat_dictionary(const Abcd& a, int n) {
  Abcd h;
  h.A = a.A - long(n) * a.B;
  h.B = -a.B;
  h.C = -a.A;
  h.D = -a.D;
  return h;
}

inline AbcdReport abcd(const DevMap& d) {
  AbcdReport r;
  r.base = abcd_raw(d);
  r.tilde = abcd_raw(tilde(d));
  r.hat = abcd_raw(hat(d));
  DevMap t = tilde(d);
  r.k2_tilde = t.k2;
  r.l2_tilde = t.l2;
  return r;
}

// det t' = z1^e1 z2^e2 * P1 P2 / Q1^(n+1) * R(u)
struct DetFactorization {
  int e1 = 0, e2 = 0;
  UniPoly P1, P2, Q1;
  int q_power = 1;
  RatFunc R;
  RatFunc factor;  // P1 P2 R / Q1^(n+1), reduced; stable at roots of P1, P2
};

inline DetFactorization det_jacobian(const DevMap& d) {
  Abcd c = abcd_raw(d);
  DetFactorization f;
  f.e1 = d.k1 + d.l1 - 1;
  f.e2 = d.k2 + d.l2 - 1;
  f.P1 = d.P1;
  f.P2 = d.P2;
  f.Q1 = d.Q1;
  f.q_power = d.n + 1;
  auto G = [](long v) { return GaussRat(v); };
  f.R = G(c.A) * RatFunc(d.P1.euler(), d.P1) + G(-c.B) * RatFunc(d.P2.euler(), d.P2) +
        G(c.C) * RatFunc(d.Q1.euler(), d.Q1) + RatFunc(UniPoly(G(c.D)));
  // Q1 * (A uP1' P2 - B uP2' P1 + D P1 P2) + C uQ1' P1 P2, over Q1^(n+2)
  UniPoly M = d.Q1 * (UniPoly(G(c.A)) * d.P1.euler() * d.P2 - UniPoly(G(c.B)) * d.P2.euler() * d.P1 +
                      UniPoly(G(c.D)) * d.P1 * d.P2) +
              UniPoly(G(c.C)) * d.Q1.euler() * d.P1 * d.P2;
  f.factor = RatFunc(M, d.Q1.pow(d.n + 2));
  return f;
}

// ------------------------------------------------------------------ verdicts

struct Verdict {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

inline bool in_kl_list(int k, int l, int n) {
  return (k == -1 && l == -n) || (k == 0 && l == 0) || (k == 0 && l == 1) || (k == 1 && l == 0);
}

inline Verdict is_semiadmissible(const DevMap& d) {
  auto fail = [](std::string r) { return Verdict{false, std::move(r)}; };
  if (d.n < 1) return fail("degree n must be >= 1");
  if (d.P1.is_zero() || d.Q1.is_zero() || d.P2.is_zero()) return fail("zero polynomial");
  if (!d.hyper && !d.all_constant()) return fail("nonconstant polynomial without a hyperresonance");
  const UniPoly* polys[3] = {&d.P1, &d.Q1, &d.P2};
  const char* names[3] = {"P1", "Q1", "P2"};
  for (int i = 0; i < 3; ++i) {
    if (polys[i]->coeff(0).is_zero()) return fail(std::string(names[i]) + " has a root at u=0");
    if (!is_squarefree(*polys[i])) return fail(std::string(names[i]) + " has a double root");
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!coprime(*polys[i], *polys[j]))
        return fail(std::string(names[i]) + " and " + names[j] + " have a common root");
  if (!in_kl_list(d.k1, d.l1, d.n)) return fail("(k1,l1) not in the allowed list");
  DevMap t = tilde(d);
  if (!in_kl_list(t.k2, t.l2, d.n)) return fail("(k2~,l2~) not in the allowed list");
  return {};
}

inline Verdict is_admissible(const DevMap& d) {
  if (auto s = is_semiadmissible(d); !s) return {false, "not semiadmissible: " + s.reason};
  Abcd c = abcd_raw(d);
  if (c.A != 0 && !d.P1.is_constant()) return {false, "A != 0 and P1 nonconstant"};
  if (c.B != 0 && !d.P2.is_constant()) return {false, "B != 0 and P2 nonconstant"};
  if (c.C != 0 && !d.Q1.is_constant()) return {false, "C != 0 and Q1 nonconstant"};
  auto f = det_jacobian(d);
  if (!f.R.is_constant()) return {false, "R(u) is not constant"};
  if (f.R.constant_value().is_zero()) return {false, "R(u) = D = 0"};
  if (d.k1 == 0 && d.l1 == 0) return {false, "(k1,l1) = (0,0)"};
  if (abcd_raw(tilde(d)).D == 0) return {false, "D~ = 0"};
  if (abcd_raw(hat(d)).D == 0) return {false, "D^ = 0"};
  return {};
}

// holonomy (g,0) with t(Fz) = g t(z):  g = diag(l^(k - l/n), l^(-l/n)) in multi-index notation
inline GroupElt holonomy_of(const DevMap& d, const BasisPtr& basis) {
  Frac inv_n(1, d.n);
  Exp ek{Frac(d.k1), Frac(d.k2)}, el{Frac(d.l1), Frac(d.l2)};
  Exp e_den = -(inv_n * el);
  Scalar a = Scalar::monomial(1, ek + e_den, basis);
  Scalar b = Scalar::monomial(1, e_den, basis);
  return {Mat2::diag(a, b), HomogPoly(d.n)};
}

// ------------------------------------------------------------------ numerics

namespace detail {

inline cplx zpow(cplx z, int e) {
  if (e == 0) return 1.0;
  if (z == 0.0) return e > 0 ? cplx(0.0) : cplx(INFINITY, 0.0);
  return std::pow(z, e);
}

// weighted homogenisation: P(u) * z2^(m2 deg P), finite on both axes (m1,m2 > 0)
inline cplx homog(const UniPoly& p, int m1, int m2, cplx z1, cplx z2) {
  cplx a = zpow(z1, m1), b = zpow(z2, m2), s = 0.0;
  int dp = p.degree();
  for (int j = dp; j >= 0; --j) s += p.coeff(j).to_complex() * std::pow(a, j) * std::pow(b, dp - j);
  return s;
}

}  // namespace detail

// homogeneous value of the map; throws std::domain_error where it is undefined
inline ModelPoint eval_model(const DevMap& d, cplx z1, cplx z2) {
  if (z1 == 0.0 && z2 == 0.0) throw std::invalid_argument("eval: z = 0");
  auto [m1, m2] = d.m();
  if (d.hyper && (m1 <= 0 || m2 <= 0)) throw std::invalid_argument("eval: needs a positive hyperresonance");
  IVec ex{d.k1, d.k2 - m2 * d.dP1()}, ey{0, -m2 * d.dQ1()}, ew{d.l1, d.l2 - m2 * d.dP2()};
  IVec sig{-std::min(ex[0], ey[0]), -std::min(ex[1], ey[1])};
  auto mono = [&](const IVec& e, std::int64_t s) {
    return detail::zpow(z1, int(e[0] + s * sig[0])) * detail::zpow(z2, int(e[1] + s * sig[1]));
  };
  cplx x = mono(ex, 1) * detail::homog(d.P1, m1, m2, z1, z2);
  cplx y = mono(ey, 1) * detail::homog(d.Q1, m1, m2, z1, z2);
  cplx w = mono(ew, d.n) * detail::homog(d.P2, m1, m2, z1, z2);
  if (!std::isfinite(std::abs(w)) || (x == 0.0 && y == 0.0))
    throw std::domain_error("eval: map undefined at this point");
  return {x, y, w, d.n};
}

inline AffinePoint eval(const DevMap& d, cplx z1, cplx z2) { return eval_model(d, z1, z2).to_affine(); }

namespace detail {

// det of the chart coordinates of `d` itself (chart T of d), z may lie on an axis
inline cplx det_in_own_chart(const DevMap& d, cplx z1, cplx z2) {
  auto [m1, m2] = d.m();
  bool use_tilde = false;
  if (d.hyper) {
    if (z2 == 0.0)
      use_tilde = true;
    else if (z1 != 0.0)
      use_tilde = std::abs(zpow(z1, m1)) > std::abs(zpow(z2, m2));
  }
  DevMap r = use_tilde ? tilde(d) : d;
  auto [r1, r2] = r.m();
  auto f = det_jacobian(r);
  cplx u;
  if (!r.hyper)
    u = 0.0;
  else if (!use_tilde)
    u = z1 == 0.0 ? cplx(0.0) : zpow(z1, r1) / zpow(z2, r2);
  else
    u = z2 == 0.0 ? cplx(0.0) : zpow(z2, -r2) / zpow(z1, -r1);
  cplx val = f.factor.num().eval(u) / f.factor.den().eval(u);
  return zpow(z1, f.e1) * zpow(z2, f.e2) * val;
}

}  // namespace detail

// symbolic Jacobian determinant in the given chart
inline cplx det_numeric(const DevMap& d, cplx z1, cplx z2, Chart c) {
  return c == Chart::T ? detail::det_in_own_chart(d, z1, z2) : detail::det_in_own_chart(hat(d), z1, z2);
}

// central differences of the chart coordinates
inline std::array<cplx, 4> jacobian_fd(const DevMap& d, cplx z1, cplx z2, Chart c, double rel_step = 1e-6) {
  double h = rel_step * std::max(1e-3, std::hypot(std::abs(z1), std::abs(z2)));
  auto f = [&](cplx a, cplx b) { return eval_model(d, a, b).in_chart(c); };
  auto p1 = f(z1 + h, z2), m1 = f(z1 - h, z2), p2 = f(z1, z2 + h), m2 = f(z1, z2 - h);
  return {(p1.c1 - m1.c1) / (2 * h), (p2.c1 - m2.c1) / (2 * h), (p1.c2 - m1.c2) / (2 * h), (p2.c2 - m2.c2) / (2 * h)};
}

}  // namespace hopf
