#pragma once
// Primary Hopf surfaces in Poincare-Dulac normal form:
//   diagonal     F(z) = (l1 z1, l2 z2)
//   exceptional  F(z) = (l z1, l^m z2 + z1^m)

#include <hopf/group.hpp>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace hopf {

struct Hyperresonance {
  int m1 = 0, m2 = 0;
  friend bool operator==(const Hyperresonance&, const Hyperresonance&) = default;
};

enum class SurfaceClass { Generic, Hyperresonant, Homothety, Exceptional };
enum class BiholGroup { AllInvertibleLinear, DiagonalLinear, ExceptionalFamily };

inline std::string to_string(SurfaceClass c) {
  switch (c) {
    case SurfaceClass::Generic: return "generic";
    case SurfaceClass::Hyperresonant: return "hyperresonant";
    case SurfaceClass::Homothety: return "homothety";
    case SurfaceClass::Exceptional: return "exceptional";
  }
  return "?";
}

struct FunctionField {
  bool constant = true;
  Hyperresonance u;  // u = z1^m1 / z2^m2 when not constant
  std::string to_string() const {
    if (constant) return "C";
    auto pw = [](const char* z, int e) { return e == 1 ? std::string(z) : std::string(z) + "^" + std::to_string(e); };
    return "C(" + pw("z1", u.m1) + "/" + pw("z2", u.m2) + ")";
  }
};

class HopfSurface {
 public:
  static HopfSurface diagonal(BasisPtr b) {
    HopfSurface s;
    s.basis_ = std::move(b);
    s.validate();
    return s;
  }
  static HopfSurface diagonal(const GaussRat& l1, const GaussRat& l2, int bound = kDefaultSearchBound) {
    return diagonal(EigenBasis::from_values(l1, l2, bound));
  }
  // basis generators must be (l, l^m) related by (m,-1)
  static HopfSurface exceptional(BasisPtr b, int m) {
    HopfSurface s;
    s.basis_ = std::move(b);
    s.m_ = m;
    if (m < 1) throw std::invalid_argument("HopfSurface: degree m must be >= 1");
    if (!s.basis_->lattice.contains(IVec{m, -1}))
      throw std::invalid_argument("HopfSurface: exceptional basis must relate l^m to the second generator");
    s.validate();
    return s;
  }
  static HopfSurface exceptional(const GaussRat& l, int m, int bound = kDefaultSearchBound) {
    return exceptional(EigenBasis::exceptional(l, m, bound), m);
  }

  bool is_exceptional() const { return m_ > 0; }
  int m() const { return m_; }
  const BasisPtr& basis() const { return basis_; }
  Scalar lambda1() const { return Scalar::gen(1, basis_); }
  Scalar lambda2() const { return Scalar::gen(2, basis_); }
  Scalar lambda() const { return lambda1(); }
  bool is_linear() const { return m_ == 0 || m_ == 1; }

  // minimal (m1,m2), m1,m2 > 0 with l1^m1 = l2^m2; diagonal only
  std::optional<Hyperresonance> hyper() const {
    if (is_exceptional()) return std::nullopt;
    const auto& B = basis_->lattice.basis();
    if (B.empty()) return std::nullopt;
    const IVec& v = B[0];
    if (v[0] == 0) return std::nullopt;
    if (B.size() == 1) {
      if (v[1] >= 0) return std::nullopt;
      return Hyperresonance{int(v[0]), int(-v[1])};
    }
    std::int64_t c = B[1][1];
    std::int64_t m2 = ((-v[1]) % c + c) % c;
    if (m2 == 0) m2 = c;
    return Hyperresonance{int(v[0]), int(m2)};
  }
  bool is_homothety() const {
    auto h = hyper();
    return h && h->m1 == 1 && h->m2 == 1;
  }

  SurfaceClass classify() const {
    if (is_exceptional()) return SurfaceClass::Exceptional;
    auto h = hyper();
    if (!h) return SurfaceClass::Generic;
    if (h->m1 == 1 && h->m2 == 1) return SurfaceClass::Homothety;
    return SurfaceClass::Hyperresonant;
  }

  FunctionField function_field() const {
    auto h = hyper();
    if (!h) return {};
    return {false, *h};
  }

  BiholGroup bihol_group() const {
    if (is_exceptional()) return BiholGroup::ExceptionalFamily;
    return is_homothety() ? BiholGroup::AllInvertibleLinear : BiholGroup::DiagonalLinear;
  }

  std::array<cplx, 2> apply_F(cplx z1, cplx z2) const {
    if (z1 == 0.0 && z2 == 0.0) throw std::invalid_argument("apply_F: z = 0");
    const auto& w = basis_->witness;
    if (is_exceptional()) return {w[0] * z1, w[1] * z2 + std::pow(z1, m_)};
    return {w[0] * z1, w[1] * z2};
  }

  // F as a matrix acting on (z1, z2); linear surfaces only
  Mat2 linear_matrix() const {
    if (!is_linear()) throw std::logic_error("HopfSurface: F is not linear");
    if (is_exceptional()) return Mat2(lambda(), 0, 1, lambda());
    return Mat2::diag(lambda1(), lambda2());
  }

  // smallest eigenvalue modulus, the default inner radius for sampling
  double min_modulus() const {
    return std::min(std::abs(basis_->witness[0]), std::abs(basis_->witness[1]));
  }

  std::string describe() const {
    if (is_exceptional())
      return "exceptional F(z) = (l z1, l^" + std::to_string(m_) + " z2 + z1^" + std::to_string(m_) + ")";
    return "diagonal F(z) = (l1 z1, l2 z2)";
  }

 private:
  void validate() const {
    if (!basis_) throw std::invalid_argument("HopfSurface: missing basis");
    for (int i = 0; i < 2; ++i) {
      double a = std::abs(basis_->witness[i]);
      if (!(a > 0.0 && a < 1.0))
        throw std::invalid_argument("HopfSurface: eigenvalues must satisfy 0 < |l| < 1");
    }
  }

  BasisPtr basis_;
  int m_ = 0;
};

}  // namespace hopf
