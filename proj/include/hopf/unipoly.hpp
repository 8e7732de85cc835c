#pragma once
// Univariate polynomials and rational functions in u over Gaussian rationals.

#include <hopf/gauss_rat.hpp>

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace hopf {

class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(GaussRat c) {  // NOLINT(implicit)
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  UniPoly(long c) : UniPoly(GaussRat(c)) {}  // NOLINT(implicit)
  explicit UniPoly(std::vector<GaussRat> low_to_high) : c_(std::move(low_to_high)) { trim(); }

  static UniPoly x() { return UniPoly(std::vector<GaussRat>{0, 1}); }
  // prod_j (u - r_j)
  static UniPoly from_roots(const std::vector<GaussRat>& roots) {
    UniPoly p(1);
    for (const auto& r : roots) p = p * UniPoly(std::vector<GaussRat>{-r, 1});
    return p;
  }

  int degree() const { return c_.empty() ? -1 : int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<GaussRat>& coeffs() const { return c_; }
  GaussRat coeff(int k) const { return k >= 0 && k < int(c_.size()) ? c_[std::size_t(k)] : GaussRat(0); }
  GaussRat lead() const { return c_.empty() ? GaussRat(0) : c_.back(); }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<GaussRat> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(int(i)) + b.coeff(int(i));
    return UniPoly(std::move(r));
  }
  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussRat> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
  }
  UniPoly pow(int e) const {
    UniPoly r(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<GaussRat> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * GaussRat(long(i));
    return UniPoly(std::move(r));
  }
  // u * P'(u)
  UniPoly euler() const { return x() * derivative(); }
  // coefficients reversed: u^deg P(1/u)
  UniPoly reversed() const {
    std::vector<GaussRat> r(c_.rbegin(), c_.rend());
    return UniPoly(std::move(r));
  }

  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    if (d.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
    std::vector<GaussRat> rem = c_, q(std::max<std::size_t>(c_.size(), d.c_.size()) - d.c_.size() + 1);
    GaussRat inv = d.lead().inv();
    for (int i = int(rem.size()) - 1; i >= d.degree(); --i) {
      if (rem[std::size_t(i)].is_zero()) continue;
      GaussRat f = rem[std::size_t(i)] * inv;
      int s = i - d.degree();
      q[std::size_t(s)] = f;
      for (int j = 0; j <= d.degree(); ++j) rem[std::size_t(s + j)] -= f * d.c_[std::size_t(j)];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
  }
  UniPoly monic() const {
    if (is_zero()) return {};
    GaussRat inv = lead().inv();
    UniPoly r = *this;
    for (auto& c : r.c_) c *= inv;
    return r;
  }

  std::complex<double> eval(std::complex<double> u) const {
    std::complex<double> s = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * u + it->to_complex();
    return s;
  }

  // numeric roots through the companion matrix
  std::vector<std::complex<double>> roots() const {
    int d = degree();
    if (d <= 0) return {};
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(d, d);
    std::complex<double> lc = lead().to_complex();
    for (int i = 1; i < d; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) C(i, d - 1) = -c_[std::size_t(i)].to_complex() / lc;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    std::vector<std::complex<double>> r(es.eigenvalues().data(), es.eigenvalues().data() + d);
    return r;
  }

  std::string to_string(const std::string& var = "u") const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      GaussRat c = c_[std::size_t(k)];
      if (c.is_zero()) continue;
      // real negative coefficients print as subtraction
      bool neg = c.is_real() && sgn(c.re()) < 0 && !out.empty();
      if (neg) c = -c;
      if (!out.empty()) out += neg ? " - " : " + ";
      std::string cs = c.to_string();
      if (!c.is_real()) cs = "(" + cs + ")";
      if (k == 0) {
        out += cs;
      } else {
        if (c == GaussRat(-1))
          out += "-";
        else if (!(c == GaussRat(1)))
          out += cs + "*";
        out += var + (k > 1 ? "^" + std::to_string(k) : "");
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<GaussRat> c_;
};

inline UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline bool is_squarefree(const UniPoly& p) { return p.degree() <= 0 || gcd(p, p.derivative()).degree() == 0; }
inline bool coprime(const UniPoly& a, const UniPoly& b) { return gcd(a, b).degree() == 0; }

// num/den in lowest terms with monic denominator
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(UniPoly num, UniPoly den = UniPoly(1)) {  // NOLINT(implicit)
    if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    UniPoly g = gcd(num, den);
    num_ = num.divmod(g).first;
    den_ = den.divmod(g).first;
    GaussRat l = den_.lead();
    num_ = num_ * UniPoly(l.inv());
    den_ = den_.monic();
  }
  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  GaussRat constant_value() const { return num_.coeff(0); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const GaussRat& s, const RatFunc& a) { return RatFunc(UniPoly(s) * a.num_, a.den_); }
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  std::string to_string() const {
    if (den_.is_constant()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  UniPoly num_, den_;
};

}  // namespace hopf
