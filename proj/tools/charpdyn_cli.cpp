// charpdyn: exact dynamics for x^d + lambda over F_q(t), on the command line.
//
// Every subcommand reads the session field from --field p^k, the family
// degree from -d, and points/parameters in the element grammar (t, g, ^, /).
// Output is a short human-readable line by default and a JSON document with
// --json. Exit codes: 0 success, 2 parse error, 3 cap exceeded, 1 elsewhere.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "charpdyn/errors.hpp"
#include "charpdyn/extension.hpp"
#include "charpdyn/parse.hpp"
#include "charpdyn/report.hpp"
#include "charpdyn/roots.hpp"

using namespace charpdyn;
using nlohmann::json;

namespace {

struct Session {
  std::string field_spec;
  int64_t d = 2;
  std::string alpha, beta, gamma, lambda, place;
  int nmax = -1, mmax = -1, kmax = 2;
  int max_iter = 64;
  uint64_t seed = 1;
  bool emit_json = false;

  FieldPtr field;
  Caps caps;

  FamilyParams family() const { return FamilyParams::make(field, d); }
  RatFunc elem(const std::string& s) const { return parse_element(s, field); }
  int n_or(int fallback) const { return nmax >= 0 ? nmax : fallback; }
  int m_or(int fallback) const { return mmax >= 0 ? mmax : fallback; }
};

void print_doc(const Session& s, const json& doc, const std::string& human) {
  if (s.emit_json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << human << "\n";
}

std::string describe_local(const LocalHeightResult& h) {
  if (h.is_exact()) return rat_string(h.value()) + " (exact)";
  return "in [0, " + rat_string(h.upper()) + "] after " + std::to_string(h.iterations()) +
         " iterations";
}

std::string describe_orbit(const OrbitResult& r) {
  if (r.is_preperiodic()) {
    const auto& c = r.certificate();
    return "preperiodic, tail " + std::to_string(c.tail) + ", period " + std::to_string(c.period);
  }
  const auto& e = r.escape();
  return "escaping at " + e.witness.to_string() + " from step " + std::to_string(e.step);
}

json param_list(const std::vector<RatFunc>& xs) { return json::parse(json_values(xs)); }

void run_height(const Session& s) {
  auto fam = s.family();
  auto g = global_canonical_height(s.elem(s.gamma), s.elem(s.lambda), fam, s.max_iter, s.caps);
  std::string human = "canonical height = " + rat_string(g.lower);
  if (!g.is_exact()) human = "canonical height in [" + rat_string(g.lower) + ", " + rat_string(g.upper()) + "]";
  print_doc(s, json::parse(json_global_height(g)), human);
}

void run_local_height(const Session& s) {
  auto fam = s.family();
  auto v = parse_place(s.place, s.field);
  auto h = local_canonical_height(s.elem(s.gamma), s.elem(s.lambda), v, fam, s.max_iter, s.caps);
  print_doc(s, json::parse(json_local_height(h)),
            "local height at " + v.to_string() + " = " + describe_local(h));
}

void run_orbit(const Session& s) {
  auto fam = s.family();
  auto x = s.elem(s.gamma);
  auto lam = s.elem(s.lambda);
  int n = s.n_or(10);
  json elems = json::array();
  std::string human;
  for (int i = 0; i <= n; ++i) {
    elems.push_back(x.to_string());
    if (!human.empty()) human += " -> ";
    human += x.to_string();
    if (i < n) x = step(x, lam, fam);
  }
  auto verdict = decide_preperiodic(s.elem(s.gamma), lam, fam);
  print_doc(s, json{{"elements", std::move(elems)}, {"result", json::parse(json_orbit(verdict))}},
            human + "\n" + describe_orbit(verdict));
}

void run_preperiodic(const Session& s) {
  auto r = decide_preperiodic(s.elem(s.gamma), s.elem(s.lambda), s.family());
  print_doc(s, json::parse(json_orbit(r)), describe_orbit(r));
}

void run_parampoly(const Session& s) {
  auto f = param_poly(s.n_or(2), s.elem(s.gamma), s.family(), s.caps);
  print_doc(s, json::parse(json_param_poly(f)), f.to_string());
}

// Parameters with f^n(gamma) = f^m(gamma) for the single pair (n, m).
void run_roots(const Session& s) {
  auto fam = s.family();
  auto g = s.elem(s.gamma);
  int n = s.n_or(2), m = s.m_or(0);
  if (m >= n) throw charpdyn::ParseError("roots: need --mmax < --nmax");
  auto fn = param_poly(n, g, fam, s.caps);
  auto diff = m == 0 ? fn.minus_constant(g) : fn - param_poly(m, g, fam, s.caps);
  auto roots = rational_roots(diff, s.caps);
  std::string human = "found " + std::to_string(roots.size()) + " parameter(s)";
  for (const auto& r : roots) human += "\n  " + r.to_string();
  print_doc(s, json{{"parameters", param_list(roots)}}, human);
}

void run_periodic_params(const Session& s) {
  auto roots = periodic_params(s.elem(s.gamma), s.n_or(2), s.family(), s.caps);
  std::string human = "found " + std::to_string(roots.size()) + " parameter(s)";
  for (const auto& r : roots) human += "\n  " + r.to_string();
  print_doc(s, json{{"parameters", param_list(roots)}}, human);
}

void run_classify(const Session& s) {
  auto t = classify(s.elem(s.alpha), s.elem(s.beta), s.family());
  print_doc(s, json::parse(json_trichotomy(t)),
            std::string("cond1=") + (t.cond1 ? "true" : "false") +
                " cond2=" + (t.cond2 ? "true" : "false") +
                " cond3=" + (t.cond3 ? "true" : "false") +
                " verdict=" + (t.special() ? "special" : "generic"));
}

void run_verify(const Session& s) {
  auto rep = verify_equivalence_sampled(s.elem(s.alpha), s.elem(s.beta), s.family(), s.seed, s.caps);
  std::string human = "verdict=" + std::string(rep.classification.special() ? "special" : "generic") +
                      " sampled=" + std::to_string(rep.points.size()) +
                      " disagreements=" + std::to_string(rep.disagreements);
  for (const auto& pt : rep.points)
    if (!pt.agree) human += "\n  disagrees at lambda = " + pt.lambda.to_string();
  print_doc(s, json::parse(json_equivalence(rep)), human);
}

void run_scan(const Session& s) {
  auto fam = s.family();
  auto a = s.elem(s.alpha);
  auto b = s.beta.empty() ? a : s.elem(s.beta);
  auto rational = simultaneous_search(a, b, fam, s.n_or(3), s.m_or(2), s.caps);
  std::vector<FqElem> constants;
  if (b.is_constant()) constants = search_constant_params(a, fam, s.kmax, s.caps);
  auto cfield = constants.empty() ? s.field : constants.front().field();
  std::string human = "rational parameters: " + std::to_string(rational.size()) +
                      ", constant parameters: " + std::to_string(constants.size());
  for (const auto& r : rational) human += "\n  " + r.to_string();
  for (const auto& c : constants) human += "\n  " + c.to_string() + " (constant)";
  print_doc(s,
            json{{"rational", param_list(rational)},
                 {"constants", json::parse(json_constants(constants, cfield))}},
            human);
}

void run_audit(const Session& s) {
  auto tr = audit_proof_trace(s.elem(s.alpha), s.elem(s.beta), s.family(), s.max_iter, s.caps);
  std::string human = std::string("chain ") + (tr.chain_holds ? "holds" : "fails") + " over " +
                      std::to_string(tr.places.size()) + " large place(s)";
  for (const auto& pa : tr.places) {
    human += "\n  " + pa.v.to_string() + ": sizes_match=" + (pa.sizes_match ? "yes" : "no") +
             " weak=" + (pa.weak_bound_holds ? "yes" : "no") +
             " strict=" + (pa.strict_bound_holds ? "yes" : "no");
  }
  for (const auto& us : tr.unity_shifts) {
    human += "\n  unity shift at " + us.v.to_string() + ": ";
    if (us.beta_strictly_below)
      human += *us.beta_strictly_below ? "beta strictly below alpha" : "beta NOT below alpha";
    else
      human += us.gamma1 ? "incomplete" : "no unity translate exists";
  }
  print_doc(s, json::parse(json_audit(tr)), human);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact dynamics for x^d + lambda over F_q(t)"};
  app.require_subcommand(1);

  Session s;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", s.field_spec, "constant field, p^k or bare p")->required();
    sub->add_option("-d,--degree", s.d, "family degree d >= 2")->required();
    sub->add_flag("--json", s.emit_json, "emit a JSON document instead of text");
    sub->add_option("--max-iter", s.max_iter, "local-height iteration budget");
    return sub;
  };
  auto need = [&](CLI::App* sub, const char* flag, std::string& slot, const char* what) {
    sub->add_option(flag, slot, what)->required();
  };

  auto* c_height = add_common(app.add_subcommand("height", "global canonical height of gamma"));
  need(c_height, "--gamma", s.gamma, "starting point");
  need(c_height, "--lambda", s.lambda, "parameter");

  auto* c_local = add_common(app.add_subcommand("local-height", "local canonical height at a place"));
  need(c_local, "--gamma", s.gamma, "starting point");
  need(c_local, "--lambda", s.lambda, "parameter");
  need(c_local, "--place", s.place, "place: inf or an irreducible polynomial");

  auto* c_orbit = add_common(app.add_subcommand("orbit", "iterate gamma and decide the orbit"));
  need(c_orbit, "--gamma", s.gamma, "starting point");
  need(c_orbit, "--lambda", s.lambda, "parameter");
  c_orbit->add_option("--nmax", s.nmax, "number of iterates to print (default 10)");

  auto* c_pre = add_common(app.add_subcommand("preperiodic", "preperiodicity certificate"));
  need(c_pre, "--gamma", s.gamma, "starting point");
  need(c_pre, "--lambda", s.lambda, "parameter");

  auto* c_poly = add_common(app.add_subcommand("parampoly", "parameter polynomial of the n-th iterate"));
  need(c_poly, "--gamma", s.gamma, "starting point");
  c_poly->add_option("--nmax", s.nmax, "iterate index n >= 1 (default 2)");

  auto* c_roots = add_common(app.add_subcommand("roots", "parameters with f^n(gamma) = f^m(gamma)"));
  need(c_roots, "--gamma", s.gamma, "starting point");
  c_roots->add_option("--nmax", s.nmax, "collision step n (default 2)");
  c_roots->add_option("--mmax", s.mmax, "collision step m < n (default 0)");

  auto* c_per = add_common(app.add_subcommand("periodic-params", "parameters where gamma is n-periodic"));
  need(c_per, "--gamma", s.gamma, "starting point");
  c_per->add_option("--nmax", s.nmax, "period bound n (default 2)");

  auto* c_cls = add_common(app.add_subcommand("classify", "trichotomy conditions for a pair"));
  need(c_cls, "--alpha", s.alpha, "first point");
  need(c_cls, "--beta", s.beta, "second point");

  auto* c_ver = add_common(app.add_subcommand("verify", "sampled preperiodicity-equivalence check"));
  need(c_ver, "--alpha", s.alpha, "first point");
  need(c_ver, "--beta", s.beta, "second point");
  c_ver->add_option("--seed", s.seed, "sampling seed (default 1)");

  auto* c_scan = add_common(app.add_subcommand("scan", "simultaneous preperiodic-parameter search"));
  need(c_scan, "--alpha", s.alpha, "first point");
  c_scan->add_option("--beta", s.beta, "second point (default: alpha)");
  c_scan->add_option("--nmax", s.nmax, "collision depth (default 3)");
  c_scan->add_option("--mmax", s.mmax, "tail depth (default 2)");
  c_scan->add_option("--kmax", s.kmax, "constant-field extension bound (default 2)");

  auto* c_aud = add_common(app.add_subcommand("audit", "proof-trace audit for a pair"));
  need(c_aud, "--alpha", s.alpha, "first point");
  need(c_aud, "--beta", s.beta, "second point");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0, real parse errors exit 2
  }

  try {
    s.field = parse_field_spec(s.field_spec);
    s.caps = caps_from_env();
    if (c_height->parsed()) run_height(s);
    else if (c_local->parsed()) run_local_height(s);
    else if (c_orbit->parsed()) run_orbit(s);
    else if (c_pre->parsed()) run_preperiodic(s);
    else if (c_poly->parsed()) run_parampoly(s);
    else if (c_roots->parsed()) run_roots(s);
    else if (c_per->parsed()) run_periodic_params(s);
    else if (c_cls->parsed()) run_classify(s);
    else if (c_ver->parsed()) run_verify(s);
    else if (c_scan->parsed()) run_scan(s);
    else if (c_aud->parsed()) run_audit(s);
  } catch (const charpdyn::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
