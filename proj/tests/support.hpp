#pragma once
// Shared fixtures for the unit tests and the acceptance run.

#include <hopf/hopf.hpp>

#include <random>
#include <string>
#include <vector>

namespace fixtures {

using namespace hopf;

inline GaussRat q(long a, long b = 1, long c = 0, long d = 1) { return GaussRat::frac(a, b, c, d); }

struct Base {
  std::string name;
  GroupElt x;
};

// elements whose normal forms are unique
inline std::vector<Base> normal_form_bases() {
  std::vector<Base> out;
  out.push_back({"jordan unipotent n=2", {Mat2(1, 1, 0, 1), HomogPoly(2, {Scalar(q(2)), Scalar(q(1, 3)), Scalar(q(5))})}});
  out.push_back({"jordan -1 n=2", {Mat2(-1, 1, 0, -1), HomogPoly(2, {Scalar(q(1)), Scalar(0), Scalar(q(0, 1, 1, 1))})}});
  out.push_back({"jordan 1/2 n=3", {Mat2(q(1, 2), 1, 0, q(1, 2)), HomogPoly(3, {Scalar(1), Scalar(2), Scalar(3), Scalar(4)})}});
  out.push_back({"diag 2,1/2 n=2", {Mat2::diag(q(2), q(1, 2)), HomogPoly(2, {Scalar(q(7)), Scalar(q(3, 1, 1, 1)), Scalar(q(5))})}});
  out.push_back({"diag 1/2,1/3 n=3", {Mat2::diag(q(1, 2), q(1, 3)), HomogPoly(3, {Scalar(1), Scalar(1), Scalar(1), Scalar(1)})}});
  out.push_back({"diag i,1 n=4", {Mat2::diag(GaussRat::i(), 1), HomogPoly(4, {Scalar(q(3)), Scalar(1), Scalar(0), Scalar(2), Scalar(q(1, 1, 1, 1))})}});
  out.push_back({"scalar 1/2 n=2", {Mat2::diag(q(1, 2), q(1, 2)), HomogPoly(2, {Scalar(1), Scalar(2), Scalar(3)})}});
  out.push_back({"upper 1/2,1/4 n=2", {Mat2(q(1, 2), q(3), 0, q(1, 4)), HomogPoly(2, {Scalar(1), Scalar(q(1, 1, 1, 1)), Scalar(2)})}});
  return out;
}

// formal eigenvalues with l1 l2 = 1; the middle degree is resonant for n = 2
inline Base formal_base() {
  auto B = EigenBasis::formal({2.0, 0.5}, {{1, 1}});
  return {"formal l1 l2 = 1, n=2",
          {Mat2::diag(Scalar::gen(1, B), Scalar::gen(2, B)),
           HomogPoly(2, {Scalar(q(3)).with_basis(B), Scalar::monomial(q(2), Exp{Frac(1), Frac(0)}, B), Scalar(q(5))})}};
}

inline GaussRat small(std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
  for (;;) {
    GaussRat g = GaussRat::frac(num(rng), den(rng), num(rng), den(rng));
    if (!nonzero || !g.is_zero()) return g;
  }
}

// random (h, r) keeping g triangular: h upper triangular, optionally followed by the swap
inline GroupElt random_conjugator(std::mt19937_64& rng, int n, bool diagonal_only, const BasisPtr& b = nullptr) {
  Scalar a = small(rng, true), d = small(rng, true), c = diagonal_only ? GaussRat(0) : small(rng);
  Mat2 h(a, c, 0, d);
  if (b) h = Mat2::diag(a * Scalar::monomial(1, Exp{Frac(std::uniform_int_distribution<int>(-2, 2)(rng)), 0}, b), d);
  if (std::bernoulli_distribution(0.5)(rng)) h = Mat2::swap() * h;
  std::vector<Scalar> p;
  for (int k = 0; k <= n; ++k) p.emplace_back(small(rng));
  return {h, HomogPoly(n, p)};
}

inline GroupElt conjugate_by(const GroupElt& c, const GroupElt& x) { return compose(compose(c, x), inverse(c)); }

}  // namespace fixtures
