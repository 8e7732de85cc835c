#pragma once
// Exact scalars: finite sums of  c * l1^e1 * l2^e2  with Gaussian-rational c and
// rational exponents taken modulo the relation lattice of an EigenBasis.
// Products of monomials stay monomials; sums appear through group composition.

#include <hopf/eigen_basis.hpp>

#include <algorithm>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hopf {

struct Term {
  Exp e;
  GaussRat c;
  friend bool operator==(const Term&, const Term&) = default;
};

class Scalar {
 public:
  Scalar() = default;
  Scalar(long c) : Scalar(GaussRat(c)) {}  // NOLINT(implicit)
  Scalar(const GaussRat& c) {              // NOLINT(implicit)
    if (!c.is_zero()) terms_.push_back({Exp{}, c});
  }

  static Scalar monomial(const GaussRat& c, Exp e, BasisPtr b) {
    if (!b && !e.is_zero()) throw std::invalid_argument("Scalar: exponents need an EigenBasis");
    Scalar s;
    s.basis_ = std::move(b);
    if (!c.is_zero()) s.terms_.push_back({s.basis_ ? s.basis_->lattice.reduce(e) : e, c});
    return s;
  }
  // l_i^power
  static Scalar gen(int i, const BasisPtr& b, Frac power = 1) {
    Exp e = i == 1 ? Exp{power, 0} : Exp{0, power};
    return monomial(GaussRat(1), e, b);
  }

  const BasisPtr& basis() const { return basis_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const { return is_monomial() && terms_[0].e.is_zero() && terms_[0].c == GaussRat(1); }
  // the value when it has no eigenvalue part
  std::optional<GaussRat> as_constant() const {
    if (is_zero()) return GaussRat(0);
    if (is_monomial() && terms_[0].e.is_zero()) return terms_[0].c;
    return std::nullopt;
  }
  const Term& lead() const {
    if (!is_monomial()) throw std::domain_error("Scalar: not a monomial");
    return terms_[0];
  }

  Scalar with_basis(const BasisPtr& b) const {
    Scalar s = *this;
    s.basis_ = merge_basis(basis_, b);
    return s;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return combine(a, b, false); }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return combine(a, b, true); }
  Scalar operator-() const {
    Scalar s = *this;
    for (auto& t : s.terms_) t.c = -t.c;
    return s;
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    r.basis_ = merge_basis(a.basis_, b.basis_);
    if (a.is_zero() || b.is_zero()) return r;
    std::vector<Term> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) raw.push_back({r.reduce(x.e + y.e), x.c * y.c});
    r.terms_ = collect(std::move(raw));
    return r;
  }
  // only monomials are invertible
  Scalar inv() const {
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    if (!is_monomial()) throw std::domain_error("Scalar: inverse of a non-monomial sum");
    Scalar r;
    r.basis_ = basis_;
    r.terms_.push_back({reduce(-terms_[0].e), terms_[0].c.inv()});
    return r;
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar pow(std::int64_t k) const {
    if (k < 0) return inv().pow(-k);
    Scalar base = *this, acc(1);
    acc.basis_ = basis_;
    while (k > 0) {
      if (k & 1) acc = acc * base;
      base = base * base;
      k >>= 1;
    }
    return acc;
  }

  // Some q-th root of a monomial, exact; throws when the coefficient has no
  // Gaussian-rational q-th root. Exponent part uses e/q.
  Scalar root(std::int64_t q) const {
    if (is_zero()) return *this;
    const Term& t = lead();
    auto c = exact_root(t.c, q);
    if (!c) throw std::domain_error("Scalar: coefficient " + t.c.to_string() + " has no exact root of order " +
                                    std::to_string(q));
    return monomial(*c, Frac(1, q) * t.e, basis_);
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (!a.is_zero() && !b.is_zero()) (void)merge_basis(a.basis_, b.basis_);
    return a.terms_ == b.terms_;
  }
  // total order on canonical forms, used for deterministic choices
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (auto c = a.terms_[i].e <=> b.terms_[i].e; c != 0) return c;
      if (auto c = a.terms_[i].c <=> b.terms_[i].c; c != 0) return c;
    }
    return a.terms_.size() <=> b.terms_.size();
  }

  std::complex<double> numeric() const {
    std::complex<double> s = 0.0;
    for (const auto& t : terms_) {
      std::complex<double> v = t.c.to_complex();
      if (!t.e.is_zero()) v *= basis_->eval(t.e);
      s += v;
    }
    return s;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const auto& t = terms_[i];
      if (i) out += " + ";
      std::string c = t.c.to_string();
      bool paren = !t.c.is_real() && sgn(t.c.re()) != 0;
      if (t.e.is_zero()) {
        out += c;
        continue;
      }
      if (!(t.c == GaussRat(1))) out += (paren ? "(" + c + ")" : c) + "*";
      bool first = true;
      for (int k = 0; k < 2; ++k) {
        const Frac& f = k == 0 ? t.e.e1 : t.e.e2;
        if (f.is_zero()) continue;
        if (!first) out += "*";
        first = false;
        out += basis_->names[k];
        if (!(f == Frac(1))) out += "^" + (f.is_integer() && f.num() > 0 ? f.to_string() : "(" + f.to_string() + ")");
      }
    }
    return out;
  }

 private:
  Exp reduce(const Exp& e) const { return basis_ ? basis_->lattice.reduce(e) : e; }

  static BasisPtr merge_basis(const BasisPtr& a, const BasisPtr& b) {
    if (!a) return b;
    if (!b) return a;
    if (!same_basis(a, b)) throw std::invalid_argument("Scalar: EigenBasis mismatch");
    return a;
  }

  static std::vector<Term> collect(std::vector<Term> raw) {
    std::sort(raw.begin(), raw.end(), [](const Term& x, const Term& y) { return x.e < y.e; });
    std::vector<Term> out;
    for (auto& t : raw) {
      if (!out.empty() && out.back().e == t.e)
        out.back().c += t.c;
      else
        out.push_back(std::move(t));
      if (out.back().c.is_zero()) out.pop_back();
    }
    return out;
  }

  static Scalar combine(const Scalar& a, const Scalar& b, bool sub) {
    Scalar r;
    r.basis_ = merge_basis(a.basis_, b.basis_);
    std::vector<Term> raw = a.terms_;
    for (const auto& t : b.terms_) raw.push_back({t.e, sub ? -t.c : t.c});
    r.terms_ = collect(std::move(raw));
    return r;
  }

  BasisPtr basis_;
  std::vector<Term> terms_;  // sorted by exponent, nonzero coefficients, reduced exponents
};

inline bool is_root_of_unity(const Scalar& a, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("is_root_of_unity: n must be >= 1");
  return a.pow(n).is_one();
}

}  // namespace hopf
