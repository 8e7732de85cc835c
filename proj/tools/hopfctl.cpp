// hopfctl: batch front end for the hopf library.
// Exit status: 0 ok, 1 verification failure, 2 input error.

#include <hopf/hopf.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hopf;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// inline JSON, or @file
json json_arg(const std::string& s) {
  std::string src = !s.empty() && s[0] == '@' ? slurp(s.substr(1)) : s;
  return parse_json_text(src);
}

struct Opts {
  std::string spec, params, bundle, element;
  int n = 0, m1 = 1, m2 = 1, deg_bound = 2, samples = 0;
  double tol = 0;
  std::uint64_t seed = 1;
  bool verify = false, json_out = true, seed_set = false;
};

SurfaceSpec load_spec(const Opts& o) {
  if (o.spec.empty()) throw InputError("--spec is required");
  return parse_surface_spec(slurp(o.spec));
}

int degree_of(const Opts& o, const SurfaceSpec& s) {
  int n = o.n ? o.n : s.n.value_or(0);
  if (n < 1) throw InputError("degree n missing: pass --n or set \"n\" in the --spec file");
  return n;
}

VerifyConfig config_of(const Opts& o, const SurfaceSpec& s) {
  VerifyConfig c = s.verify.value_or(default_config(s.surface));
  if (o.samples > 0) c.samples = o.samples;
  if (o.tol > 0) c.tol_equiv = o.tol;
  if (o.seed_set) c.seed = o.seed;
  c.validate();
  return c;
}

void emit(const Opts& o, const json& j, const std::string& text) {
  if (o.json_out)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_classify(const Opts& o) {
  auto spec = load_spec(o);
  const auto& s = spec.surface;
  json j;
  j["kind"] = to_string(s.classify());
  if (s.is_exceptional()) j["m"] = s.m();
  if (auto h = s.hyper()) {
    j["m1"] = h->m1;
    j["m2"] = h->m2;
  }
  j["function_field"] = s.function_field().to_string();
  switch (s.bihol_group()) {
    case BiholGroup::AllInvertibleLinear: j["bihol_group"] = "invertible linear maps"; break;
    case BiholGroup::DiagonalLinear: j["bihol_group"] = "invertible diagonal linear maps"; break;
    case BiholGroup::ExceptionalFamily:
      j["bihol_group"] = "(z1,z2) -> (a z1, a^" + std::to_string(s.m()) + " z2 + b z1^" + std::to_string(s.m()) + ")";
      break;
  }
  j["surface"] = surface_to_json(s);
  emit(o, j, j["kind"].get<std::string>() + "\n");
  return 0;
}

std::vector<std::vector<GaussRat>> params_of(const Opts& o, const SurfaceSpec& spec) {
  if (!o.params.empty()) {
    std::vector<std::vector<GaussRat>> out;
    for (const auto& lst : json_arg(o.params)) {
      std::vector<GaussRat> a;
      for (const auto& x : lst) a.push_back(jio::decode_gauss(x));
      out.push_back(std::move(a));
    }
    return out;
  }
  if (!spec.params.empty()) return spec.params;
  return default_hyper_params(o.deg_bound);
}

int cmd_structures(const Opts& o) {
  auto spec = load_spec(o);
  int n = degree_of(o, spec);
  EnumerateOptions eo;
  eo.hyper_params = params_of(o, spec);
  eo.eigen_axes = spec.eigen_axes;
  auto recs = enumerate_structures(spec.surface, n, eo);
  json j;
  j["surface"] = surface_to_json(spec.surface);
  j["n"] = n;
  json warnings = json::array();
  if (spec.surface.is_exceptional() && n < spec.surface.m()) warnings.push_back("n < m: no structures");
  j["warnings"] = warnings;
  json arr = json::array();
  bool ok = true;
  std::string text;
  VerifyConfig cfg = config_of(o, spec);
  for (const auto& r : recs) {
    json rj = jio::encode(r);
    text += r.provenance + ": " + r.dev.to_string();
    if (o.verify) {
      VerifyReport rep = check_equivariance(r, spec.surface, cfg);
      rep.merge(check_immersion(r, cfg));
      rj["verify"] = jio::encode(rep);
      ok = ok && rep.pass;
      text += rep.pass ? "  [verified]" : "  [FAILED]";
    }
    text += "\n";
    arr.push_back(std::move(rj));
  }
  j["records"] = arr;
  if (o.verify) j["pass"] = ok;
  emit(o, j, text);
  return ok ? 0 : 1;
}

int cmd_verify(const Opts& o) {
  auto spec = load_spec(o);
  int n = degree_of(o, spec);
  VerifyConfig cfg = config_of(o, spec);
  json j;
  VerifyReport all = check_group_axioms(n, 200, cfg.seed);
  j["group_axioms"] = jio::encode(all);
  EnumerateOptions eo;
  eo.hyper_params = params_of(o, spec);
  eo.eigen_axes = spec.eigen_axes;
  json arr = json::array();
  for (const auto& r : enumerate_structures(spec.surface, n, eo)) {
    VerifyReport rep = check_equivariance(r, spec.surface, cfg);
    rep.merge(check_immersion(r, cfg));
    arr.push_back({{"provenance", r.provenance}, {"report", jio::encode(rep)}});
    all.merge(rep);
  }
  j["structures"] = arr;
  j["pass"] = all.pass;
  emit(o, j, std::string(all.pass ? "PASS" : "FAIL") + "\n");
  return all.pass ? 0 : 1;
}

int cmd_normal_form(const Opts& o) {
  if (o.element.empty()) throw InputError("--element is required");
  json e = json_arg(o.element);
  BasisPtr b;
  if (e.contains("surface")) b = surface_from_json(e["surface"]).basis();
  if (e.contains("basis")) b = jio::decode_basis(e["basis"]);
  GroupElt x = jio::decode_elt(e, b);
  NormalFormResult r = normal_form(x);
  json j = jio::encode(r);
  j["input"] = jio::encode(x);
  emit(o, j, r.element.to_string() + "\n");
  return 0;
}

int cmd_sections(const Opts& o) {
  auto spec = load_spec(o);
  if (o.bundle.empty()) throw InputError("--bundle is required");
  json bd = json_arg(o.bundle);
  const BasisPtr& b = spec.surface.basis();
  SectionFamily f;
  if (bd.contains("g"))
    f = proj_bundle_sections(spec.surface, jio::decode_mat(bd["g"], b));
  else if (bd.contains("a"))
    f = line_bundle_sections(spec.surface, jio::decode_scalar(bd["a"], b));
  else
    throw InputError("bundle data needs \"a\" (line bundle) or \"g\" (P^1-bundle)");
  json j = jio::encode(f);
  bool ok = true;
  if (o.verify) {
    VerifyConfig cfg = config_of(o, spec);
    cfg.samples = o.samples > 0 ? o.samples : 100;
    VerifyReport rep = check_sections(f, spec.surface, cfg);
    j["verify"] = jio::encode(rep);
    ok = rep.pass;
  }
  emit(o, j, f.formula() + "\n");
  return ok ? 0 : 1;
}

int cmd_cases(const Opts& o) {
  int n = o.n ? o.n : 1;
  if (n < 1 || o.m1 < 1 || o.m2 < 1) throw InputError("n, m1, m2 must be positive");
  CaseReport rep = reproduce_case_table(std::array<int, 3>{n, o.m1, o.m2});
  json j;
  json rows = json::array();
  int impossible = 0;
  std::string text;
  for (const auto& r : rep.rows) {
    json rj = jio::encode(r);
    auto inst = row_instances(r, n, o.m1, o.m2, o.deg_bound);
    json d = json::array();
    for (const auto& t : inst) d.push_back(t);
    rj["instance_degrees"] = d;
    rows.push_back(rj);
    if (!r.feasible) ++impossible;
    text += r.combo.to_string() + "  " + (r.feasible ? r.pattern_string() : "impossible");
    for (const auto& c : r.conditions) text += "; " + c;
    text += "\n";
  }
  j["instance"] = {{"n", n}, {"m1", o.m1}, {"m2", o.m2}, {"deg_bound", o.deg_bound}};
  j["rows"] = rows;
  j["row_count"] = rep.rows.size();
  j["impossible_count"] = impossible;
  json sw = json::array();
  for (const auto& s : rep.swapped)
    sw.push_back({{"combo", s.combo.to_string()}, {"image", s.image.to_string()}, {"feasibility_agrees", s.feasibility_agrees}});
  j["chart_swapped"] = sw;
  json ex = json::array();
  for (const auto& [c, why] : rep.excluded) ex.push_back({{"combo", c.to_string()}, {"reason", why}});
  j["excluded"] = ex;
  emit(o, j, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Holomorphic O(n)-structures on primary Hopf surfaces"};
  app.require_subcommand(1);
  Opts o;
  auto common = [&](CLI::App* c) {
    c->add_option("--spec", o.spec, "surface spec file (JSON)");
    c->add_option("--n", o.n, "degree n of the model O(n)");
    c->add_flag("--json,!--no-json", o.json_out, "JSON output (default on)");
  };
  auto sampling = [&](CLI::App* c) {
    c->add_option("--samples", o.samples, "sample count");
    c->add_option("--tol", o.tol, "equivariance tolerance");
    c->add_option("--seed", o.seed, "random seed")->each([&](const std::string&) { o.seed_set = true; });
  };

  auto* classify = app.add_subcommand("classify", "classify a surface");
  common(classify);
  auto* structures = app.add_subcommand("structures", "list the O(n)-structures");
  common(structures);
  sampling(structures);
  structures->add_option("--params", o.params, "hyperresonant parameter lists: JSON or @file");
  structures->add_option("--deg-bound", o.deg_bound, "default parameter list sizes 1..bound");
  structures->add_flag("--verify", o.verify, "verify each record");
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  common(verify);
  sampling(verify);
  verify->add_option("--params", o.params, "hyperresonant parameter lists: JSON or @file");
  verify->add_option("--deg-bound", o.deg_bound, "default parameter list sizes 1..bound");
  auto* nf = app.add_subcommand("normal-form", "normal form of a group element");
  common(nf);
  nf->add_option("--element", o.element, "element: JSON or @file");
  auto* sections = app.add_subcommand("sections", "meromorphic sections of a bundle");
  common(sections);
  sampling(sections);
  sections->add_option("--bundle", o.bundle, "{\"a\": scalar} or {\"g\": matrix}: JSON or @file");
  sections->add_flag("--verify", o.verify, "check the functional equation");
  auto* cases = app.add_subcommand("cases", "case table for maps with a nonconstant polynomial");
  cases->add_option("--n", o.n, "degree n");
  cases->add_option("--m1", o.m1, "hyperresonance m1");
  cases->add_option("--m2", o.m2, "hyperresonance m2");
  cases->add_option("--deg-bound", o.deg_bound, "degree bound for instance rows");
  cases->add_flag("--json,!--no-json", o.json_out, "JSON output (default on)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*classify) return cmd_classify(o);
    if (*structures) return cmd_structures(o);
    if (*verify) return cmd_verify(o);
    if (*nf) return cmd_normal_form(o);
    if (*sections) return cmd_sections(o);
    if (*cases) return cmd_cases(o);
  } catch (const SpecError& e) {
    std::cerr << "hopfctl: " << (o.spec.empty() ? "" : o.spec + ": ") << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "hopfctl: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "hopfctl: bad input: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hopfctl: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "hopfctl: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
