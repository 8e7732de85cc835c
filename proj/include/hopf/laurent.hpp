#pragma once
// Multivariate Laurent polynomials with rational coefficients over a fixed set
// of named variables. Division is allowed by monomials only.

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopf {

template <std::size_t N>
class LPoly {
 public:
  using Mono = std::array<int, N>;

  LPoly() = default;
  LPoly(long c) { add(Mono{}, mpq_class(c)); }  // NOLINT(implicit)
  static LPoly var(std::size_t i, int power = 1) {
    Mono m{};
    m[i] = power;
    LPoly p;
    p.add(m, 1);
    return p;
  }
  static LPoly term(const mpq_class& c, const Mono& m) {
    LPoly p;
    p.add(m, c);
    return p;
  }

  const std::map<Mono, mpq_class>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_monomial() const { return t_.size() == 1; }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Mono{}); }
  mpq_class constant() const {
    auto it = t_.find(Mono{});
    return it == t_.end() ? mpq_class(0) : it->second;
  }
  bool involves(std::size_t i) const {
    for (const auto& [m, c] : t_)
      if (m[i] != 0) return true;
    return false;
  }
  int max_degree(std::size_t i) const {
    int d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m[i]);
    return d;
  }

  friend LPoly operator+(LPoly a, const LPoly& b) {
    for (const auto& [m, c] : b.t_) a.add(m, c);
    return a;
  }
  LPoly operator-() const {
    LPoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
  }
  friend LPoly operator-(const LPoly& a, const LPoly& b) { return a + (-b); }
  friend LPoly operator*(const LPoly& a, const LPoly& b) {
    LPoly r;
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) {
        Mono m;
        for (std::size_t i = 0; i < N; ++i) m[i] = ma[i] + mb[i];
        r.add(m, ca * cb);
      }
    return r;
  }
  friend bool operator==(const LPoly&, const LPoly&) = default;

  LPoly inverse_monomial() const {
    if (!is_monomial()) throw std::domain_error("LPoly: only monomials are invertible");
    auto [m, c] = *t_.begin();
    Mono r;
    for (std::size_t i = 0; i < N; ++i) r[i] = -m[i];
    return term(1 / c, r);
  }

  // coefficient of x_i^1, assuming degree <= 1 in x_i; rest is the x_i-free part
  std::pair<LPoly, LPoly> split_linear(std::size_t i) const {
    LPoly lin, rest;
    for (const auto& [m, c] : t_) {
      if (m[i] == 0) {
        rest.add(m, c);
      } else if (m[i] == 1) {
        Mono k = m;
        k[i] = 0;
        lin.add(k, c);
      } else {
        throw std::domain_error("LPoly: not linear in the requested variable");
      }
    }
    return {lin, rest};
  }

  // replace x_i by v; negative powers of x_i need v to be a monomial
  LPoly substitute(std::size_t i, const LPoly& v) const {
    LPoly r;
    for (const auto& [m, c] : t_) {
      Mono k = m;
      int e = k[i];
      k[i] = 0;
      LPoly piece = term(c, k);
      LPoly base = e >= 0 ? v : v.inverse_monomial();
      for (int j = 0; j < std::abs(e); ++j) piece = piece * base;
      r = r + piece;
    }
    return r;
  }

  // all coefficients share one sign (and the polynomial is nonzero)
  int uniform_sign() const {
    int s = 0;
    for (const auto& [m, c] : t_) {
      int cs = sgn(c);
      if (s == 0) s = cs;
      else if (s != cs) return 0;
    }
    return s;
  }

  // p = content * rest, content a monomial with positive coefficient and the
  // smallest exponents present; rest has coprime-ish integer coefficients
  std::pair<LPoly, LPoly> split_content() const {
    if (t_.empty()) return {LPoly(1), LPoly()};
    Mono lo = t_.begin()->first;
    for (const auto& [m, c] : t_)
      for (std::size_t i = 0; i < N; ++i) lo[i] = std::min(lo[i], m[i]);
    mpz_class g = 0, l = 1;
    for (const auto& [m, c] : t_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    LPoly content = term(mpq_class(g, l), lo);
    return {content, *this * content.inverse_monomial()};
  }

  std::string to_string(const std::array<std::string, N>& names) const {
    if (t_.empty()) return "0";
    // common monomial denominator
    Mono den{};
    for (const auto& [m, c] : t_)
      for (std::size_t i = 0; i < N; ++i) den[i] = std::max(den[i], -m[i]);
    mpz_class dl = 1;
    for (const auto& [m, c] : t_) mpz_lcm(dl.get_mpz_t(), dl.get_mpz_t(), c.get_den_mpz_t());
    std::string num;
    bool first = true;
    // descending order reads more naturally
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      mpq_class c = it->second * dl;
      Mono m = it->first;
      for (std::size_t i = 0; i < N; ++i) m[i] += den[i];
      std::string mono = mono_str(m, names);
      std::string cs = mpq_class(abs(c)).get_str();
      if (first) num += sgn(c) < 0 ? "-" : "";
      else num += sgn(c) < 0 ? " - " : " + ";
      first = false;
      if (mono.empty()) num += cs;
      else num += (cs == "1" ? "" : cs + "*") + mono;
    }
    std::string dens = mono_str(den, names);
    if (dl != 1) dens = dl.get_str() + (dens.empty() ? "" : "*" + dens);
    if (dens.empty()) return num;
    bool compound = t_.size() > 1;
    return (compound ? "(" + num + ")" : num) + "/" + (dens.find('*') != std::string::npos ? "(" + dens + ")" : dens);
  }

  static std::string mono_str(const Mono& m, const std::array<std::string, N>& names) {
    std::string s;
    for (std::size_t i = 0; i < N; ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += names[i];
      if (m[i] != 1) s += "^" + std::to_string(m[i]);
    }
    return s;
  }

 private:
  void add(const Mono& m, const mpq_class& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (sgn(it->second) == 0) t_.erase(it);
    }
  }
  std::map<Mono, mpq_class> t_;
};

}  // namespace hopf
