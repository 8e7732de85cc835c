#pragma once
// Small rationals for exponents, and relation lattices in Z^2 kept in Hermite normal form.

#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopf {

class Frac {
 public:
  constexpr Frac() = default;
  constexpr Frac(std::int64_t n) : num_(n) {}  // NOLINT(implicit)
  Frac(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if ((num_ % den_ != 0) && (num_ < 0)) --q;
    return q;
  }

  friend Frac operator+(const Frac& a, const Frac& b) {
    return make(__int128(a.num_) * b.den_ + __int128(b.num_) * a.den_, __int128(a.den_) * b.den_);
  }
  friend Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }
  friend Frac operator*(const Frac& a, const Frac& b) {
    return make(__int128(a.num_) * b.num_, __int128(a.den_) * b.den_);
  }
  friend Frac operator/(const Frac& a, const Frac& b) {
    if (b.num_ == 0) throw std::domain_error("Frac: division by zero");
    return make(__int128(a.num_) * b.den_, __int128(a.den_) * b.num_);
  }
  Frac operator-() const { Frac r; r.num_ = -num_; r.den_ = den_; return r; }
  Frac& operator+=(const Frac& o) { return *this = *this + o; }
  Frac& operator-=(const Frac& o) { return *this = *this - o; }

  friend bool operator==(const Frac&, const Frac&) = default;
  friend std::strong_ordering operator<=>(const Frac& a, const Frac& b) {
    __int128 l = __int128(a.num_) * b.den_, r = __int128(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less : l > r ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  double to_double() const { return double(num_) / double(den_); }
  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  static Frac make(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Frac: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    constexpr __int128 lim = INT64_MAX;
    if (n > lim || n < -lim || d > lim) throw std::overflow_error("Frac: exponent overflow");
    Frac f;
    f.num_ = static_cast<std::int64_t>(n);
    f.den_ = static_cast<std::int64_t>(d);
    return f;
  }
  void normalize() { *this = make(num_, den_); }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// exponent pair (e1, e2) of  l1^e1 l2^e2
struct Exp {
  Frac e1, e2;
  friend Exp operator+(const Exp& a, const Exp& b) { return {a.e1 + b.e1, a.e2 + b.e2}; }
  friend Exp operator-(const Exp& a, const Exp& b) { return {a.e1 - b.e1, a.e2 - b.e2}; }
  friend Exp operator*(const Frac& s, const Exp& a) { return {s * a.e1, s * a.e2}; }
  Exp operator-() const { return {-e1, -e2}; }
  bool is_zero() const { return e1.is_zero() && e2.is_zero(); }
  bool is_integral() const { return e1.is_integer() && e2.is_integer(); }
  friend bool operator==(const Exp&, const Exp&) = default;
  friend std::strong_ordering operator<=>(const Exp&, const Exp&) = default;
};

using IVec = std::array<std::int64_t, 2>;

// Subgroup of Z^2. Basis rows in Hermite normal form:
//   rank 1: (a,b) with a>0, or (0,b) with b>0
//   rank 2: (a,b),(0,c) with a>0, c>0, 0<=b<c
class Lattice {
 public:
  Lattice() = default;

  static Lattice from_generators(std::vector<IVec> rows) {
    Lattice L;
    // eliminate column 0
    for (;;) {
      int piv = -1;
      for (int i = 0; i < int(rows.size()); ++i)
        if (rows[i][0] != 0 && (piv < 0 || std::abs(rows[i][0]) < std::abs(rows[piv][0]))) piv = i;
      if (piv < 0) break;
      bool done = true;
      for (int i = 0; i < int(rows.size()); ++i) {
        if (i == piv || rows[i][0] == 0) continue;
        std::int64_t q = rows[i][0] / rows[piv][0];
        rows[i][0] -= q * rows[piv][0];
        rows[i][1] -= q * rows[piv][1];
        if (rows[i][0] != 0) done = false;
      }
      if (done) {
        IVec p = rows[piv];
        rows.erase(rows.begin() + piv);
        if (p[0] < 0) p = {-p[0], -p[1]};
        L.basis_.push_back(p);
        break;
      }
    }
    std::int64_t c = 0;
    for (auto& r : rows) c = std::gcd(c, r[1]);
    if (c != 0) {
      if (L.basis_.empty()) {
        L.basis_.push_back({0, c});
      } else {
        auto& p = L.basis_[0];
        p[1] = ((p[1] % c) + c) % c;
        L.basis_.push_back({0, c});
      }
    }
    return L;
  }

  int rank() const { return int(basis_.size()); }
  const std::vector<IVec>& basis() const { return basis_; }

  // canonical representative of e modulo the lattice
  Exp reduce(Exp e) const {
    if (basis_.empty()) return e;
    const IVec& v = basis_[0];
    if (v[0] != 0) {
      std::int64_t t = (e.e1 / Frac(v[0])).floor();
      e.e1 -= Frac(t * v[0]);
      e.e2 -= Frac(t * v[1]);
      if (basis_.size() == 2) {
        std::int64_t c = basis_[1][1];
        std::int64_t s = (e.e2 / Frac(c)).floor();
        e.e2 -= Frac(s * c);
      }
    } else {
      std::int64_t s = (e.e2 / Frac(v[1])).floor();
      e.e2 -= Frac(s * v[1]);
    }
    return e;
  }

  bool contains(const Exp& e) const { return e.is_integral() && reduce(e).is_zero(); }
  bool contains(IVec v) const { return contains(Exp{Frac(v[0]), Frac(v[1])}); }

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  std::vector<IVec> basis_;
};

}  // namespace hopf
