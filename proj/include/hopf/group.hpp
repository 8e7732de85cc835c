#pragma once
// G(n) = GL(2)/mu_n  x|  Sym^n(C^2)*  and its action on the total space of O(n).
//
// A point of O(n) is kept homogeneously as (v, w) with v in C^2 \ 0, up to
// (v, w) ~ (a v, a^n w). Chart T: v = (t1, 1), w = t2. Chart S: v = (1, s1), w = s2.
// (g, p) acts by (v, w) -> (g v, w + p(g v)), which factors as (I,p)(g,0).

#include <hopf/scalar.hpp>

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopf {

using cplx = std::complex<double>;

class Mat2 {
 public:
  Mat2() : Mat2(1, 0, 0, 1) {}
  Mat2(Scalar a, Scalar b, Scalar c, Scalar d) : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    det_ = e_[0] * e_[3] - e_[1] * e_[2];
    if (det_.is_zero()) throw std::invalid_argument("Mat2: singular matrix");
  }
  static Mat2 identity() { return {}; }
  static Mat2 diag(Scalar a, Scalar d) { return {std::move(a), 0, 0, std::move(d)}; }
  static Mat2 swap() { return {0, 1, 1, 0}; }

  const Scalar& a() const { return e_[0]; }
  const Scalar& b() const { return e_[1]; }
  const Scalar& c() const { return e_[2]; }
  const Scalar& d() const { return e_[3]; }
  const Scalar& operator()(int i, int j) const { return e_[2 * i + j]; }
  const Scalar& det() const { return det_; }

  bool is_diagonal() const { return b().is_zero() && c().is_zero(); }
  bool is_upper() const { return c().is_zero(); }
  bool is_lower() const { return b().is_zero(); }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a() * y.a() + x.b() * y.c(), x.a() * y.b() + x.b() * y.d(), x.c() * y.a() + x.d() * y.c(),
            x.c() * y.b() + x.d() * y.d()};
  }
  Mat2 scaled(const Scalar& s) const { return {s * a(), s * b(), s * c(), s * d()}; }
  // det must be a monomial
  Mat2 inverse() const {
    Scalar r = det_.inv();
    return {r * d(), -(r * b()), -(r * c()), r * a()};
  }
  friend bool operator==(const Mat2& x, const Mat2& y) { return x.e_ == y.e_; }

  std::array<cplx, 4> numeric() const { return {a().numeric(), b().numeric(), c().numeric(), d().numeric()}; }

  std::string to_string() const {
    return "[[" + a().to_string() + ", " + b().to_string() + "], [" + c().to_string() + ", " + d().to_string() + "]]";
  }

 private:
  std::array<Scalar, 4> e_;
  Scalar det_;
};

// p(Z1,Z2) = sum_k a_k Z1^k Z2^(n-k)
class HomogPoly {
 public:
  HomogPoly() : HomogPoly(1) {}
  explicit HomogPoly(int n) : a_(std::size_t(check_degree(n)) + 1) {}
  HomogPoly(int n, std::vector<Scalar> coeffs) : a_(std::move(coeffs)) {
    check_degree(n);
    if (int(a_.size()) != n + 1) throw std::invalid_argument("HomogPoly: need n+1 coefficients");
  }
  // c * Z1^k Z2^(n-k)
  static HomogPoly monomial(int n, int k, Scalar c) {
    HomogPoly p(n);
    p.a_.at(std::size_t(k)) = std::move(c);
    return p;
  }

  int degree() const { return int(a_.size()) - 1; }
  const Scalar& operator[](int k) const { return a_.at(std::size_t(k)); }
  Scalar& operator[](int k) { return a_.at(std::size_t(k)); }
  const std::vector<Scalar>& coeffs() const { return a_; }
  bool is_zero() const {
    for (const auto& c : a_)
      if (!c.is_zero()) return false;
    return true;
  }

  friend HomogPoly operator+(const HomogPoly& x, const HomogPoly& y) {
    same_degree(x, y);
    HomogPoly r = x;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += y.a_[k];
    return r;
  }
  HomogPoly operator-() const {
    HomogPoly r = *this;
    for (auto& c : r.a_) c = -c;
    return r;
  }
  friend HomogPoly operator-(const HomogPoly& x, const HomogPoly& y) { return x + (-y); }
  friend HomogPoly operator*(const Scalar& s, const HomogPoly& x) {
    HomogPoly r = x;
    for (auto& c : r.a_) c = s * c;
    return r;
  }
  friend bool operator==(const HomogPoly&, const HomogPoly&) = default;

  // (p o h)(Z) = p(h Z), expanded exactly
  HomogPoly compose(const Mat2& h) const {
    int n = degree();
    // linear forms in t = Z1/Z2:  L1 = a t + b,  L2 = c t + d
    std::vector<Scalar> L1{h.b(), h.a()}, L2{h.d(), h.c()};
    std::vector<std::vector<Scalar>> pw1(std::size_t(n) + 1), pw2(std::size_t(n) + 1);
    pw1[0] = pw2[0] = {Scalar(1)};
    for (int k = 1; k <= n; ++k) {
      pw1[k] = mul(pw1[k - 1], L1);
      pw2[k] = mul(pw2[k - 1], L2);
    }
    HomogPoly r(n);
    for (int k = 0; k <= n; ++k) {
      if (a_[k].is_zero()) continue;
      auto term = mul(pw1[k], pw2[n - k]);
      for (int j = 0; j <= n; ++j) r.a_[j] += a_[k] * term[j];
    }
    return r;
  }

  cplx eval(cplx z1, cplx z2) const {
    cplx s = 0.0;
    for (int k = degree(); k >= 0; --k) s = s * z1 + a_[k].numeric() * std::pow(z2, degree() - k);
    return s;
  }
  // numeric coefficients, cached by callers that evaluate often
  std::vector<cplx> numeric() const {
    std::vector<cplx> v;
    for (const auto& c : a_) v.push_back(c.numeric());
    return v;
  }

  std::string to_string() const {
    std::string out;
    int n = degree();
    for (int k = n; k >= 0; --k) {
      if (a_[k].is_zero()) continue;
      if (!out.empty()) out += " + ";
      std::string c = a_[k].to_string();
      out += a_[k].is_monomial() ? c : "(" + c + ")";
      if (k > 0) out += "*Z1" + (k > 1 ? "^" + std::to_string(k) : "");
      if (n - k > 0) out += "*Z2" + (n - k > 1 ? "^" + std::to_string(n - k) : "");
    }
    return out.empty() ? "0" : out;
  }

 private:
  static int check_degree(int n) {
    if (n < 1) throw std::invalid_argument("HomogPoly: degree must be >= 1");
    return n;
  }
  static void same_degree(const HomogPoly& x, const HomogPoly& y) {
    if (x.degree() != y.degree()) throw std::invalid_argument("HomogPoly: degree mismatch");
  }
  static std::vector<Scalar> mul(const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    std::vector<Scalar> r(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
    return r;
  }

  std::vector<Scalar> a_;
};

struct GroupElt {
  Mat2 g;
  HomogPoly p;

  GroupElt() = default;
  GroupElt(Mat2 g_, HomogPoly p_) : g(std::move(g_)), p(std::move(p_)) {}
  static GroupElt identity(int n) { return {Mat2::identity(), HomogPoly(n)}; }
  int n() const { return p.degree(); }

  std::string to_string() const { return "(" + g.to_string() + ", " + p.to_string() + ")"; }
};

inline GroupElt compose(const GroupElt& x, const GroupElt& y) {
  if (x.n() != y.n()) throw std::invalid_argument("compose: degree mismatch");
  return {x.g * y.g, x.p + y.p.compose(x.g.inverse())};
}

inline GroupElt inverse(const GroupElt& x) { return {x.g.inverse(), -x.p.compose(x.g)}; }

// (g,p) == (g',p')  iff  p == p'  and  g' = zeta g  with zeta^n = 1
inline bool operator==(const GroupElt& x, const GroupElt& y) {
  if (x.n() != y.n() || !(x.p == y.p)) return false;
  std::optional<Scalar> zeta;
  for (int i = 0; i < 4; ++i) {
    const Scalar& u = x.g(i / 2, i % 2);
    const Scalar& v = y.g(i / 2, i % 2);
    if (u.is_zero() != v.is_zero()) return false;
    if (!zeta && u.is_monomial()) zeta = v / u;
  }
  if (!zeta) throw std::domain_error("GroupElt equality: no monomial entry to compare");
  if (!(x.g.scaled(*zeta) == y.g)) return false;
  return is_root_of_unity(*zeta, x.n());
}
inline bool operator!=(const GroupElt& x, const GroupElt& y) { return !(x == y); }

// ---------------------------------------------------------------- points of O(n)

enum class Chart { T, S };

struct AffinePoint {
  Chart chart = Chart::T;
  cplx c1, c2;
};

// homogeneous representative (x, y; w): t1 = x/y, t2 = w/y^n, s1 = y/x, s2 = w/x^n
struct ModelPoint {
  cplx x, y, w;
  int n = 1;

  static ModelPoint from_affine(const AffinePoint& pt, int n) {
    if (pt.chart == Chart::T) return {pt.c1, 1.0, pt.c2, n};
    return {1.0, pt.c1, pt.c2, n};
  }

  bool finite_in(Chart c) const { return c == Chart::T ? y != 0.0 : x != 0.0; }
  // the chart where the base coordinate has modulus <= 1
  Chart best_chart() const { return std::abs(y) >= std::abs(x) ? Chart::T : Chart::S; }

  AffinePoint in_chart(Chart c) const {
    if (c == Chart::T) return {Chart::T, x / y, w / std::pow(y, n)};
    return {Chart::S, y / x, w / std::pow(x, n)};
  }

  // chart T unless |t1| > 1e6 or the denominator is below 1e-9, then chart S
  AffinePoint to_affine() const {
    double sx = std::abs(x), sy = std::abs(y);
    if (sx == 0.0 && sy == 0.0) throw std::domain_error("ModelPoint: zero base vector");
    double scale = std::max(sx, sy);
    if (sy >= 1e-9 * scale && sx <= 1e6 * sy) return in_chart(Chart::T);
    return in_chart(Chart::S);
  }
};

// chordal distance on P^1 between base points
inline double chordal(const ModelPoint& a, const ModelPoint& b) {
  double na = std::hypot(std::abs(a.x), std::abs(a.y)), nb = std::hypot(std::abs(b.x), std::abs(b.y));
  return std::abs(a.x * b.y - a.y * b.x) / (na * nb);
}

// chordal distance of the bases plus relative fibre gap, compared in the chart
// that is well conditioned for the first point
inline double model_distance(const ModelPoint& a, const ModelPoint& b) {
  Chart c = a.best_chart();
  if (!b.finite_in(c)) return 1.0;
  AffinePoint pa = a.in_chart(c), pb = b.in_chart(c);
  double fib = std::abs(pa.c2 - pb.c2) / std::max(1.0, std::abs(pa.c2));
  return chordal(a, b) + fib;
}

struct NumericElt {
  std::array<cplx, 4> g;
  std::vector<cplx> p;
  int n;
  explicit NumericElt(const GroupElt& x) : g(x.g.numeric()), p(x.p.numeric()), n(x.n()) {}

  ModelPoint act(const ModelPoint& q) const {
    cplx X = g[0] * q.x + g[1] * q.y, Y = g[2] * q.x + g[3] * q.y;
    cplx val = 0.0;
    for (int k = n; k >= 0; --k) val = val * X + p[k] * std::pow(Y, n - k);
    return {X, Y, q.w + val, n};
  }
};

inline ModelPoint act_model(const GroupElt& x, const ModelPoint& q) { return NumericElt(x).act(q); }

inline AffinePoint act_affine(const GroupElt& x, const AffinePoint& pt, int n) {
  if (n != x.n()) throw std::invalid_argument("act_affine: degree mismatch");
  return act_model(x, ModelPoint::from_affine(pt, n)).to_affine();
}

inline double affine_distance(const AffinePoint& a, const AffinePoint& b, int n) {
  return model_distance(ModelPoint::from_affine(a, n), ModelPoint::from_affine(b, n));
}

}  // namespace hopf
