#pragma once
// JSON encoding of exact values, surfaces, structures and reports.
// Gaussian rationals are [re_num, re_den, im_num, im_den]; integers too large
// for int64 are written as decimal strings.

#include <hopf/case_table.hpp>
#include <hopf/classify.hpp>
#include <hopf/normal_form.hpp>
#include <hopf/sections.hpp>
#include <hopf/verify.hpp>

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopf {

using json = nlohmann::ordered_json;

// schema or syntax problem in an input file; line is 1-based, 0 if unknown
struct SpecError : std::runtime_error {
  int line = 0;
  SpecError(const std::string& msg, int l = 0)
      : std::runtime_error(l ? "line " + std::to_string(l) + ": " + msg : msg), line(l) {}
};

namespace jio {

inline json integer(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}
inline mpz_class to_mpz(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

inline json encode(const GaussRat& g) {
  return json::array({integer(g.re().get_num()), integer(g.re().get_den()), integer(g.im().get_num()),
                      integer(g.im().get_den())});
}
inline GaussRat decode_gauss(const json& j) {
  if (j.is_number_integer()) return GaussRat(j.get<long>());
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("Gaussian rational must be [re_num, re_den, im_num, im_den]");
  mpz_class d1 = to_mpz(j[1]), d2 = to_mpz(j[3]);
  if (d1 == 0 || d2 == 0) throw std::invalid_argument("zero denominator");
  mpq_class re(to_mpz(j[0]), d1), im(to_mpz(j[2]), d2);
  re.canonicalize();
  im.canonicalize();
  return GaussRat(re, im);
}

inline json encode(const Frac& f) { return json::array({f.num(), f.den()}); }
inline Frac decode_frac(const json& j) {
  if (j.is_number_integer()) return Frac(j.get<std::int64_t>());
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("exponent must be [num, den]");
  return Frac(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
}

inline json encode(const EigenBasis& b) {
  json j;
  j["names"] = b.names;
  json rel = json::array();
  for (const auto& v : b.lattice.basis()) rel.push_back({v[0], v[1]});
  j["relations"] = rel;
  j["witness"] = {{b.witness[0].real(), b.witness[0].imag()}, {b.witness[1].real(), b.witness[1].imag()}};
  if (b.exact) j["exact"] = {encode((*b.exact)[0]), encode((*b.exact)[1])};
  return j;
}
inline BasisPtr decode_basis(const json& j) {
  auto w = j.at("witness");
  std::array<std::complex<double>, 2> wit{cplx(w.at(0).at(0).get<double>(), w.at(0).at(1).get<double>()),
                                          cplx(w.at(1).at(0).get<double>(), w.at(1).at(1).get<double>())};
  std::vector<IVec> rel;
  for (const auto& r : j.at("relations")) rel.push_back({r.at(0).get<std::int64_t>(), r.at(1).get<std::int64_t>()});
  auto names = j.value("names", std::array<std::string, 2>{"l1", "l2"});
  auto b = std::make_shared<EigenBasis>(*EigenBasis::formal(wit, rel, names));
  if (j.contains("exact")) b->exact = std::array<GaussRat, 2>{decode_gauss(j["exact"][0]), decode_gauss(j["exact"][1])};
  return b;
}

inline json encode(const Scalar& s) {
  json terms = json::array();
  for (const auto& t : s.terms()) terms.push_back({{"c", encode(t.c)}, {"e", {encode(t.e.e1), encode(t.e.e2)}}});
  return terms;
}
// a bare quadruple is accepted as a constant
inline Scalar decode_scalar(const json& j, const BasisPtr& b) {
  if (j.is_number_integer() || (j.is_array() && j.size() == 4 && !j[0].is_object()))
    return Scalar(decode_gauss(j)).with_basis(b);
  Scalar s;
  s = s.with_basis(b);
  for (const auto& t : j) {
    Exp e{decode_frac(t.at("e").at(0)), decode_frac(t.at("e").at(1))};
    s += Scalar::monomial(decode_gauss(t.at("c")), e, e.is_zero() ? b : b);
  }
  return s;
}

inline json encode(const Mat2& g) {
  return {{encode(g.a()), encode(g.b())}, {encode(g.c()), encode(g.d())}};
}
inline Mat2 decode_mat(const json& j, const BasisPtr& b) {
  return Mat2(decode_scalar(j.at(0).at(0), b), decode_scalar(j.at(0).at(1), b), decode_scalar(j.at(1).at(0), b),
              decode_scalar(j.at(1).at(1), b));
}

inline json encode(const HomogPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(encode(c));
  return a;
}
inline HomogPoly decode_homog(const json& j, const BasisPtr& b) {
  std::vector<Scalar> c;
  for (const auto& x : j) c.push_back(decode_scalar(x, b));
  if (c.empty()) throw std::invalid_argument("p needs n+1 coefficients");
  int n = int(c.size()) - 1;
  return HomogPoly(n, std::move(c));
}

inline json encode(const GroupElt& x) {
  json j;
  j["n"] = x.n();
  j["g"] = encode(x.g);
  j["p"] = encode(x.p);
  j["text"] = x.to_string();
  if (x.g.is_diagonal()) {
    // conjugacy invariants of the linear part: ratio and denominator^n
    j["invariants"] = {{"ratio", (x.g.a() / x.g.d()).to_string()}, {"den_pow_n", x.g.d().pow(x.n()).to_string()}};
  }
  return j;
}
inline GroupElt decode_elt(const json& j, const BasisPtr& b) {
  GroupElt x{decode_mat(j.at("g"), b), decode_homog(j.at("p"), b)};
  if (j.contains("n") && j["n"].get<int>() != x.n()) throw std::invalid_argument("n does not match the length of p");
  return x;
}

inline json encode(const UniPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(encode(c));
  return a;
}
inline UniPoly decode_unipoly(const json& j) {
  std::vector<GaussRat> c;
  for (const auto& x : j) c.push_back(decode_gauss(x));
  return UniPoly(std::move(c));
}

inline json encode(const DevMap& d) {
  json j;
  j["n"] = d.n;
  j["k"] = {d.k1, d.k2};
  j["l"] = {d.l1, d.l2};
  j["P1"] = encode(d.P1);
  j["Q1"] = encode(d.Q1);
  j["P2"] = encode(d.P2);
  j["hyper"] = d.hyper ? json{(*d.hyper)[0], (*d.hyper)[1]} : json(nullptr);
  j["formula"] = d.to_string();
  return j;
}
inline DevMap decode_devmap(const json& j) {
  DevMap d;
  d.n = j.at("n").get<int>();
  d.k1 = j.at("k").at(0).get<int>();
  d.k2 = j.at("k").at(1).get<int>();
  d.l1 = j.at("l").at(0).get<int>();
  d.l2 = j.at("l").at(1).get<int>();
  d.P1 = decode_unipoly(j.at("P1"));
  d.Q1 = decode_unipoly(j.at("Q1"));
  d.P2 = decode_unipoly(j.at("P2"));
  if (j.contains("hyper") && !j["hyper"].is_null())
    d.hyper = IVec{j["hyper"].at(0).get<std::int64_t>(), j["hyper"].at(1).get<std::int64_t>()};
  return d;
}

inline StructureKind decode_kind(const std::string& s) {
  for (auto k : {StructureKind::Radial, StructureKind::Eigen, StructureKind::ExceptionalEigen, StructureKind::Hyperresonant})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown structure kind " + s);
}

inline json encode(const StructureRecord& r) {
  json j;
  j["kind"] = to_string(r.kind);
  if (r.kind == StructureKind::Eigen) j["axis"] = r.axis;
  if (r.kind == StructureKind::Hyperresonant) {
    j["case"] = r.hyper_case;
    if (r.swap_of) j["swap_of"] = r.swap_of;
    json p = json::array();
    for (const auto& a : r.params) p.push_back(encode(a));
    j["params"] = p;
  }
  j["dev"] = encode(r.dev);
  j["hol"] = encode(r.hol);
  j["complete"] = r.complete;
  j["essential"] = r.essential;
  j["provenance"] = r.provenance;
  return j;
}
inline StructureRecord decode_record(const json& j, const BasisPtr& b) {
  StructureRecord r;
  r.kind = decode_kind(j.at("kind").get<std::string>());
  r.axis = j.value("axis", 0);
  r.hyper_case = j.value("case", 0);
  r.swap_of = j.value("swap_of", 0);
  if (j.contains("params"))
    for (const auto& a : j["params"]) r.params.push_back(decode_gauss(a));
  r.dev = decode_devmap(j.at("dev"));
  r.hol = decode_elt(j.at("hol"), b);
  r.complete = j.at("complete").get<bool>();
  r.essential = j.at("essential").get<bool>();
  r.provenance = j.value("provenance", "");
  return r;
}

inline bool same_record(const StructureRecord& a, const StructureRecord& b) {
  return a.kind == b.kind && a.axis == b.axis && a.hyper_case == b.hyper_case && a.swap_of == b.swap_of &&
         a.params == b.params && a.dev == b.dev && a.hol.g == b.hol.g && a.hol.p == b.hol.p &&
         a.complete == b.complete && a.essential == b.essential && a.provenance == b.provenance;
}

inline json encode(const SectionFamily& f) {
  json j;
  j["variant"] = to_string(f.variant);
  j["formula"] = f.formula();
  if (f.variant == SectionVariant::Monomial || f.variant == SectionVariant::MonomialTimesRational) {
    j["k"] = {f.k1, f.k2};
    j["free_constant"] = f.free_constant;
  }
  if (f.variant == SectionVariant::MonomialTimesRational) j["hyper"] = {f.hyper.m1, f.hyper.m2};
  if (f.variant == SectionVariant::JordanFamily) j["m"] = f.m;
  j["includes_infinity"] = f.includes_infinity;
  j["projective"] = f.projective;
  j["a"] = encode(f.a);
  if (f.g) j["g"] = encode(*f.g);
  return j;
}

inline json encode(const VerifyReport& r) {
  json j;
  j["pass"] = r.pass;
  j["samples"] = r.samples;
  j["resampled"] = r.resampled;
  j["max_equivariance_residual"] = r.max_equivariance_residual;
  if (std::isfinite(r.min_jacobian_magnitude)) j["min_jacobian_magnitude"] = r.min_jacobian_magnitude;
  j["max_fd_error"] = r.max_fd_error;
  json c = json::array();
  for (const auto& x : r.checks) c.push_back({{"name", x.name}, {"pass", x.pass}, {"value", x.value}, {"detail", x.detail}});
  j["checks"] = c;
  json f = json::array();
  for (const auto& x : r.failures)
    f.push_back({{"check", x.check},
                 {"z", {{x.z1.real(), x.z1.imag()}, {x.z2.real(), x.z2.imag()}}},
                 {"value", x.value}});
  j["failures"] = f;
  return j;
}

inline json encode(const CaseRow& r) {
  json j;
  j["combo"] = r.combo.to_string();
  j["feasible"] = r.feasible;
  j["degrees"] = r.pattern_string();
  j["conditions"] = r.conditions;
  if (!r.feasible) j["reason"] = r.pattern.failure;
  return j;
}

inline json encode(const NormalFormResult& r) {
  return {{"element", encode(r.element)}, {"unique", r.unique}, {"swap_applied", r.swap_applied}};
}

}  // namespace jio

// ------------------------------------------------------------------ surface spec files

struct SurfaceSpec {
  HopfSurface surface;
  std::optional<int> n;
  std::vector<std::vector<GaussRat>> params;
  std::vector<int> eigen_axes{1, 2};
  std::optional<VerifyConfig> verify;
  json raw;
};

namespace detail {

// line of the first occurrence of "key" in the source, for diagnostics
inline int line_of(const std::string& src, const std::string& key) {
  auto pos = src.find("\"" + key + "\"");
  if (pos == std::string::npos) return 0;
  return 1 + int(std::count(src.begin(), src.begin() + long(pos), '\n'));
}

inline int line_at_byte(const std::string& src, std::size_t byte) {
  byte = std::min(byte, src.size());
  return 1 + int(std::count(src.begin(), src.begin() + long(byte), '\n'));
}

}  // namespace detail

inline json parse_json_text(const std::string& src) {
  try {
    return json::parse(src);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("syntax error: ") + e.what(), detail::line_at_byte(src, e.byte ? e.byte - 1 : 0));
  }
}

inline HopfSurface surface_from_json(const json& j, const std::string& src = "") {
  auto where = [&](const std::string& key) { return detail::line_of(src, key); };
  auto need = [&](const json& o, const std::string& key) -> const json& {
    if (!o.is_object() || !o.contains(key)) throw SpecError("missing field \"" + key + "\"", where(key));
    return o.at(key);
  };
  try {
    if (!j.is_object()) throw SpecError("surface spec must be an object", 1);
    std::string type = need(j, "type").get<std::string>();
    int bound = j.value("search_bound", kDefaultSearchBound);
    if (type == "diagonal") {
      if (j.contains("formal")) {
        const json& f = j["formal"];
        return HopfSurface::diagonal(jio::decode_basis(f));
      }
      const json& ev = need(j, "eigenvalues");
      if (!ev.is_array() || ev.size() != 2) throw SpecError("\"eigenvalues\" must hold two entries", where("eigenvalues"));
      return HopfSurface::diagonal(jio::decode_gauss(ev[0]), jio::decode_gauss(ev[1]), bound);
    }
    if (type == "exceptional") {
      int m = need(j, "m").get<int>();
      if (m < 1) throw SpecError("\"m\" must be a positive integer", where("m"));
      if (j.contains("formal")) {
        const json& w = j["formal"].at("witness");
        return HopfSurface::exceptional(EigenBasis::exceptional_formal(cplx(w.at(0).get<double>(), w.at(1).get<double>()), m), m);
      }
      return HopfSurface::exceptional(jio::decode_gauss(need(j, "lambda")), m, bound);
    }
    throw SpecError("\"type\" must be \"diagonal\" or \"exceptional\"", where("type"));
  } catch (const SpecError&) {
    throw;
  } catch (const json::exception& e) {
    throw SpecError(std::string("bad field: ") + e.what());
  } catch (const std::invalid_argument& e) {
    // attribute value errors to the eigenvalue fields
    int l = where("eigenvalues");
    if (!l) l = where("lambda");
    throw SpecError(e.what(), l);
  }
}

inline json surface_to_json(const HopfSurface& s) {
  json j;
  j["type"] = s.is_exceptional() ? "exceptional" : "diagonal";
  const auto& b = *s.basis();
  if (s.is_exceptional()) {
    j["m"] = s.m();
    if (b.exact)
      j["lambda"] = jio::encode((*b.exact)[0]);
    else
      j["formal"] = {{"witness", {b.witness[0].real(), b.witness[0].imag()}}};
  } else if (b.exact) {
    j["eigenvalues"] = {jio::encode((*b.exact)[0]), jio::encode((*b.exact)[1])};
  } else {
    j["formal"] = jio::encode(b);
  }
  return j;
}

inline SurfaceSpec parse_surface_spec(const std::string& src) {
  json j = parse_json_text(src);
  SurfaceSpec spec{surface_from_json(j, src), std::nullopt, {}, {1, 2}, std::nullopt, j};
  auto where = [&](const std::string& k) { return detail::line_of(src, k); };
  try {
    if (j.contains("n")) {
      int n = j["n"].get<int>();
      if (n < 1) throw SpecError("\"n\" must be >= 1", where("n"));
      spec.n = n;
    }
    if (j.contains("params")) {
      if (!j["params"].is_array()) throw SpecError("\"params\" must be a list of lists", where("params"));
      for (const auto& lst : j["params"]) {
        std::vector<GaussRat> a;
        for (const auto& x : lst) a.push_back(jio::decode_gauss(x));
        spec.params.push_back(std::move(a));
      }
    }
    if (j.contains("eigen_axes")) spec.eigen_axes = j["eigen_axes"].get<std::vector<int>>();
    if (j.contains("verify")) {
      VerifyConfig c = default_config(spec.surface);
      const json& v = j["verify"];
      c.samples = v.value("samples", c.samples);
      c.tol_equiv = v.value("tol_equiv", c.tol_equiv);
      c.tol_jac = v.value("tol_jac", c.tol_jac);
      c.seed = v.value("seed", c.seed);
      c.r_min = v.value("r_min", c.r_min);
      c.r_max = v.value("r_max", c.r_max);
      try {
        c.validate();
      } catch (const std::invalid_argument& e) {
        throw SpecError(e.what(), where("verify"));
      }
      spec.verify = c;
    }
  } catch (const SpecError&) {
    throw;
  } catch (const std::exception& e) {
    throw SpecError(std::string("bad field: ") + e.what());
  }
  return spec;
}

}  // namespace hopf
