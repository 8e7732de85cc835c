#pragma once
// Exact Gaussian rationals  re + i*im  over GMP rationals.

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace hopf {

class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long re) : re_(re) {}  // NOLINT(implicit)
  GaussRat(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  static GaussRat frac(long num, long den, long im_num = 0, long im_den = 1) {
    if (den == 0 || im_den == 0) throw std::invalid_argument("GaussRat: zero denominator");
    return GaussRat(mpq_class(num, den), mpq_class(im_num, im_den));
  }
  static GaussRat i() { return GaussRat(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussRat inv() const {
    if (is_zero()) throw std::domain_error("GaussRat: division by zero");
    mpq_class nn = norm();
    return GaussRat(re_ / nn, -im_ / nn);
  }

  GaussRat pow(std::int64_t e) const {
    if (e < 0) return inv().pow(-e);
    GaussRat base = *this, acc(1);
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  GaussRat& operator+=(const GaussRat& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GaussRat& operator-=(const GaussRat& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  GaussRat& operator*=(const GaussRat& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) { return *this *= o.inv(); }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  GaussRat operator-() const { return GaussRat(-re_, -im_); }

  friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  // lexicographic (re, im); only used for canonical ordering
  friend std::strong_ordering operator<=>(const GaussRat& a, const GaussRat& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  std::string to_string() const {
    if (is_real()) return re_.get_str();
    if (sgn(re_) == 0) return im_.get_str() + "i";
    std::string s = re_.get_str();
    s += sgn(im_) > 0 ? "+" : "-";
    s += mpq_class(abs(im_)).get_str() + "i";
    return s;
  }

 private:
  mpq_class re_{0}, im_{0};
};

namespace detail {

inline std::optional<mpz_class> exact_int_root(const mpz_class& v, unsigned long q) {
  if (sgn(v) < 0) {
    if (q % 2 == 0) return std::nullopt;
    auto r = exact_int_root(-v, q);
    if (!r) return std::nullopt;
    return mpz_class(-*r);
  }
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), q) == 0) return std::nullopt;
  return r;
}

// best rational approximation with denominator <= max_den (continued fractions)
inline mpq_class rationalize(double x, long max_den) {
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int it = 0; it < 64; ++it) {
    double a = std::floor(r);
    if (std::abs(a) > 1e15) break;
    long ai = static_cast<long>(a);
    long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    double frac = r - a;
    if (std::abs(frac) < 1e-15) break;
    r = 1.0 / frac;
  }
  if (k1 == 0) return mpq_class(0);
  return mpq_class(h1, k1);
}

}  // namespace detail

// Exact q-th root of c, if some q-th root is a Gaussian rational. Prefers the
// principal root; tries the other branches when the principal one is irrational.
inline std::optional<GaussRat> exact_root(const GaussRat& c, std::int64_t q) {
  if (q <= 0) throw std::invalid_argument("exact_root: q must be positive");
  if (q == 1 || c.is_zero()) return c;
  if (c.is_real() && sgn(c.re()) > 0) {
    auto n = detail::exact_int_root(c.re().get_num(), q);
    auto d = detail::exact_int_root(c.re().get_den(), q);
    if (n && d) return GaussRat(mpq_class(*n, *d));
  }
  std::complex<double> z = c.to_complex();
  double mag = std::pow(std::abs(z), 1.0 / double(q));
  double arg = std::arg(z) / double(q);
  for (std::int64_t k = 0; k < q; ++k) {
    double a = arg + 2.0 * M_PI * double(k) / double(q);
    std::complex<double> r = std::polar(mag, a);
    GaussRat cand(detail::rationalize(r.real(), 1000000), detail::rationalize(r.imag(), 1000000));
    if (cand.pow(q) == c) return cand;
  }
  return std::nullopt;
}

}  // namespace hopf
