#pragma once
// Two formal eigenvalue generators l1, l2 with a lattice of multiplicative relations.

#include <hopf/gauss_rat.hpp>
#include <hopf/lattice.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopf {

struct EigenBasis;
using BasisPtr = std::shared_ptr<const EigenBasis>;

inline constexpr int kDefaultSearchBound = 64;

struct EigenBasis {
  std::array<std::string, 2> names{"l1", "l2"};
  Lattice lattice;
  std::array<std::complex<double>, 2> witness{1.0, 1.0};
  std::array<std::complex<double>, 2> log_witness{0.0, 0.0};
  // set when the generators are concrete Gaussian rationals
  std::optional<std::array<GaussRat, 2>> exact;

  // l1^e1 l2^e2 evaluated on principal branches
  std::complex<double> eval(const Exp& e) const {
    return std::exp(e.e1.to_double() * log_witness[0] + e.e2.to_double() * log_witness[1]);
  }

  // Formal generators with declared relations; witnesses must satisfy them.
  static BasisPtr formal(std::array<std::complex<double>, 2> w, const std::vector<IVec>& relations,
                         std::array<std::string, 2> names = {"l1", "l2"}) {
    auto b = std::make_shared<EigenBasis>();
    b->names = std::move(names);
    b->lattice = Lattice::from_generators(relations);
    b->set_witness(w);
    b->validate();
    return b;
  }

  // Concrete eigenvalues; relations found by exact search over |a|,|b| <= bound.
  static BasisPtr from_values(const GaussRat& l1, const GaussRat& l2, int bound = kDefaultSearchBound,
                              std::array<std::string, 2> names = {"l1", "l2"}) {
    if (l1.is_zero() || l2.is_zero()) throw std::invalid_argument("EigenBasis: zero eigenvalue");
    auto b = std::make_shared<EigenBasis>();
    b->names = std::move(names);
    b->exact = std::array<GaussRat, 2>{l1, l2};
    b->lattice = Lattice::from_generators(search_relations(l1, l2, bound));
    b->set_witness({l1.to_complex(), l2.to_complex()});
    b->validate();
    return b;
  }

  // Exceptional contraction: generators l = lambda and l2 = lambda^m.
  static BasisPtr exceptional(const GaussRat& lambda, int m, int bound = kDefaultSearchBound) {
    if (m < 1) throw std::invalid_argument("EigenBasis: degree m must be positive");
    return from_values(lambda, lambda.pow(m), bound, {"l", "l^" + std::to_string(m)});
  }
  static BasisPtr exceptional_formal(std::complex<double> w, int m, const std::vector<IVec>& extra = {}) {
    std::vector<IVec> rel = extra;
    rel.push_back({m, -1});
    return formal({w, std::pow(w, m)}, rel, {"l", "l^" + std::to_string(m)});
  }

  static std::vector<IVec> search_relations(const GaussRat& l1, const GaussRat& l2, int bound) {
    std::vector<GaussRat> p1(2 * bound + 1), p2(2 * bound + 1);
    for (int a = -bound; a <= bound; ++a) {
      p1[a + bound] = l1.pow(a);
      p2[a + bound] = l2.pow(a);
    }
    double L1 = std::log(std::abs(l1.to_complex())), L2 = std::log(std::abs(l2.to_complex()));
    std::vector<IVec> found;
    for (int a = -bound; a <= bound; ++a)
      for (int b = -bound; b <= bound; ++b) {
        if (a == 0 && b == 0) continue;
        if (std::abs(a * L1 + b * L2) > 1e-9) continue;
        if (p1[a + bound] * p2[b + bound] == GaussRat(1)) found.push_back({a, b});
      }
    return found;
  }

  friend bool operator==(const EigenBasis& a, const EigenBasis& b) {
    return a.names == b.names && a.lattice == b.lattice && a.witness == b.witness;
  }

 private:
  void set_witness(std::array<std::complex<double>, 2> w) {
    if (w[0] == 0.0 || w[1] == 0.0) throw std::invalid_argument("EigenBasis: zero witness");
    witness = w;
    log_witness = {std::log(w[0]), std::log(w[1])};
  }
  void validate() const {
    for (const auto& v : lattice.basis()) {
      std::complex<double> r = std::pow(witness[0], double(v[0])) * std::pow(witness[1], double(v[1]));
      if (std::abs(r - 1.0) > 1e-12)
        throw std::invalid_argument("EigenBasis: numeric witness violates relation (" + std::to_string(v[0]) +
                                    "," + std::to_string(v[1]) + ")");
    }
  }
};

inline bool same_basis(const BasisPtr& a, const BasisPtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace hopf
