#pragma once
// Meromorphic sections of line bundles (F, a) and flat P^1-bundles (F, g).

#include <hopf/hopf_surface.hpp>
#include <hopf/laurent.hpp>

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace hopf {

enum class SectionVariant { Zero, InfinityOnly, ZeroAndInfinity, Monomial, MonomialTimesRational, JordanFamily };

inline std::string to_string(SectionVariant v) {
  switch (v) {
    case SectionVariant::Zero: return "Zero";
    case SectionVariant::InfinityOnly: return "InfinityOnly";
    case SectionVariant::ZeroAndInfinity: return "ZeroAndInfinity";
    case SectionVariant::Monomial: return "Monomial";
    case SectionVariant::MonomialTimesRational: return "MonomialTimesRational";
    case SectionVariant::JordanFamily: return "JordanFamily";
  }
  return "?";
}

struct SectionFamily {
  SectionVariant variant = SectionVariant::Zero;
  int k1 = 0, k2 = 0;            // Monomial, MonomialTimesRational: z1^k1 z2^k2
  bool free_constant = false;    // Monomial: c z1^k1 z2^k2 with c arbitrary
  Hyperresonance hyper;          // MonomialTimesRational: u = z1^m1/z2^m2
  int m = 0;                     // JordanFamily
  bool includes_infinity = false;

  // bundle data
  bool projective = false;
  Scalar a;                 // line bundle multiplier, P^1 diagonal ratio a1/a2, or Jordan eigenvalue
  std::optional<Mat2> g;    // P^1 bundles only

  std::string formula() const {
    auto mono = [&] {
      std::string s;
      if (k1) s += "z1^" + std::to_string(k1);
      if (k2) s += std::string(s.empty() ? "" : "*") + "z2^" + std::to_string(k2);
      return s.empty() ? std::string("1") : s;
    };
    std::string f;
    switch (variant) {
      case SectionVariant::Zero: f = "0"; break;
      case SectionVariant::InfinityOnly: return "inf";
      case SectionVariant::ZeroAndInfinity: return "0, inf";
      case SectionVariant::Monomial: f = "c*" + mono(); break;
      case SectionVariant::MonomialTimesRational:
        f = mono() + "*P(u)/Q(u), u = z1^" + std::to_string(hyper.m1) + "/z2^" + std::to_string(hyper.m2);
        break;
      case SectionVariant::JordanFamily: f = "(z2/a)*(l/z1)^" + std::to_string(m) + " + c"; break;
    }
    return includes_infinity ? f + ", inf" : f;
  }

  // Jordan row as an exact Laurent polynomial in (z1, z2, a, l, c)
  LPoly<5> symbolic() const {
    if (variant != SectionVariant::JordanFamily) throw std::logic_error("SectionFamily: no closed form");
    using L = LPoly<5>;
    return L::var(1) * L::var(2, -1) * L::var(3, m) * L::var(0, -m) + L::var(4);
  }
};

inline const std::array<std::string, 5> kJordanNames{"z1", "z2", "a", "l", "c"};

namespace detail {

// integral (k1,k2) with a = l1^k1 l2^k2, reduced modulo the relation lattice
inline std::optional<IVec> solve_power_product(const HopfSurface& s, const Scalar& a, int bound) {
  if (a.is_zero() || !a.is_monomial()) return std::nullopt;
  const BasisPtr& B = s.basis();
  const Term& t = a.lead();
  auto reduce = [&](IVec k) {
    Exp e = B->lattice.reduce(Exp{Frac(k[0]), Frac(k[1])});
    return IVec{e.e1.num(), e.e2.num()};
  };
  if (t.c == GaussRat(1) && t.e.is_integral()) return IVec{t.e.e1.num(), t.e.e2.num()};
  if (!B->exact || !t.e.is_integral()) return std::nullopt;
  // concrete eigenvalues: the coefficient may itself be a power product
  const auto& ex = *B->exact;
  GaussRat v = t.c * ex[0].pow(t.e.e1.num()) * ex[1].pow(t.e.e2.num());
  double target = std::log(std::abs(v.to_complex()));
  double L1 = std::log(std::abs(ex[0].to_complex())), L2 = std::log(std::abs(ex[1].to_complex()));
  for (int k1 = -bound; k1 <= bound; ++k1)
    for (int k2 = -bound; k2 <= bound; ++k2) {
      if (std::abs(k1 * L1 + k2 * L2 - target) > 1e-9) continue;
      if (ex[0].pow(k1) * ex[1].pow(k2) == v) return reduce({k1, k2});
    }
  return std::nullopt;
}

}  // namespace detail

inline SectionFamily line_bundle_sections(const HopfSurface& s, const Scalar& a, int bound = kDefaultSearchBound) {
  if (a.is_zero()) throw std::invalid_argument("line_bundle_sections: a must be nonzero");
  SectionFamily f;
  f.a = a;
  auto k = detail::solve_power_product(s, a, bound);
  if (!k) return f;
  if (s.is_exceptional()) {
    f.variant = SectionVariant::Monomial;
    f.k1 = int((*k)[0] + std::int64_t(s.m()) * (*k)[1]);  // l2 = l^m
    f.free_constant = true;
    return f;
  }
  f.k1 = int((*k)[0]);
  f.k2 = int((*k)[1]);
  if (auto h = s.hyper()) {
    f.variant = SectionVariant::MonomialTimesRational;
    f.hyper = *h;
  } else {
    f.variant = SectionVariant::Monomial;
    f.free_constant = true;
  }
  return f;
}

// g diagonal, or upper triangular with equal diagonal entries and nonzero corner
inline SectionFamily proj_bundle_sections(const HopfSurface& s, const Mat2& g, int bound = kDefaultSearchBound) {
  SectionFamily f;
  f.projective = true;
  f.g = g;
  if (g.is_diagonal()) {
    f = line_bundle_sections(s, g.a() / g.d(), bound);
    f.projective = true;
    f.g = g;
    if (f.variant == SectionVariant::Zero)
      f.variant = SectionVariant::ZeroAndInfinity;
    else
      f.includes_infinity = true;
    return f;
  }
  if (!g.is_upper() || !(g.a() == g.d()))
    throw std::invalid_argument("proj_bundle_sections: g must be diagonal or a single Jordan block");
  f.a = g.a() / g.b();  // projectively g ~ [[a,1],[0,a]]
  if (s.is_exceptional()) {
    f.variant = SectionVariant::JordanFamily;
    f.m = s.m();
    f.includes_infinity = true;
  } else {
    f.variant = SectionVariant::InfinityOnly;
  }
  return f;
}

// ------------------------------------------------------------------ instances

// one member of a family; values are homogeneous pairs [num : den] on P^1
struct SectionInstance {
  bool infinity = false;
  cplx c = 0.0;
  std::vector<cplx> P{1.0}, Q{1.0};

  std::array<cplx, 2> eval(const SectionFamily& f, const HopfSurface& s, cplx z1, cplx z2) const {
    if (infinity) return {1.0, 0.0};
    auto poly = [](const std::vector<cplx>& p, cplx u) {
      cplx r = 0.0;
      for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * u + *it;
      return r;
    };
    switch (f.variant) {
      case SectionVariant::Zero:
      case SectionVariant::ZeroAndInfinity: return {0.0, 1.0};
      case SectionVariant::InfinityOnly: return {1.0, 0.0};
      case SectionVariant::Monomial: return {c * std::pow(z1, f.k1) * std::pow(z2, f.k2), 1.0};
      case SectionVariant::MonomialTimesRational: {
        cplx u = std::pow(z1, f.hyper.m1) / std::pow(z2, f.hyper.m2);
        return {std::pow(z1, f.k1) * std::pow(z2, f.k2) * poly(P, u), poly(Q, u)};
      }
      case SectionVariant::JordanFamily: {
        cplx a = f.a.numeric(), l = s.basis()->witness[0];
        return {z2 / a * std::pow(l / z1, f.m) + c, 1.0};
      }
    }
    return {0.0, 1.0};
  }
};

inline SectionInstance random_instance(const SectionFamily& f, std::mt19937_64& rng, int index) {
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  auto rc = [&] { return cplx(U(rng), U(rng)); };
  SectionInstance x;
  bool inf_allowed = f.includes_infinity || f.variant == SectionVariant::ZeroAndInfinity ||
                     f.variant == SectionVariant::InfinityOnly;
  x.infinity = inf_allowed && (f.variant == SectionVariant::InfinityOnly || index % 2 == 1);
  x.c = rc();
  std::uniform_int_distribution<int> deg(0, 3);
  x.P.resize(std::size_t(deg(rng)) + 1);
  x.Q.resize(std::size_t(deg(rng)) + 1);
  for (auto& v : x.P) v = rc();
  for (auto& v : x.Q) v = rc();
  return x;
}

}  // namespace hopf
