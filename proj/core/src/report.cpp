#include "charpdyn/report.hpp"

#include <json.hpp>

namespace charpdyn {
namespace {

using nlohmann::json;

std::string field_spec(const FieldPtr& f) {
  return std::to_string(f->p()) + "^" + std::to_string(f->k());
}

json j_local(const LocalHeightResult& r) {
  if (r.is_exact()) return {{"kind", "exact"}, {"value", rat_string(r.value())}};
  return {{"kind", "bounded"}, {"upper", rat_string(r.upper())}, {"iterations", r.iterations()}};
}

json j_orbit(const OrbitResult& r) {
  if (r.is_preperiodic()) {
    const auto& c = r.certificate();
    return {{"kind", "preperiodic"}, {"tail", c.tail}, {"period", c.period}};
  }
  const auto& e = r.escape();
  return {{"kind", "escaping"},
          {"witness", e.witness.to_string()},
          {"step", e.step},
          {"size", rat_string(e.size.value)}};
}

json j_opt_local(const std::optional<LocalHeightResult>& r) {
  return r ? j_local(*r) : json(nullptr);
}

json j_trichotomy(const TrichotomyReport& t) {
  return {{"cond1", t.cond1},
          {"cond2", t.cond2},
          {"cond3", t.cond3},
          {"verdict", t.special() ? "special" : "generic"}};
}

}  // namespace

std::string json_local_height(const LocalHeightResult& r) { return j_local(r).dump(); }

std::string json_orbit(const OrbitResult& r) { return j_orbit(r).dump(); }

std::string json_global_height(const GlobalHeight& g) {
  json parts = json::array();
  for (const auto& [v, h] : g.parts) parts.push_back({{"place", v.to_string()}, {"height", j_local(h)}});
  return json{{"preperiodic", g.preperiodic}, {"exact", g.is_exact()},
              {"lower", rat_string(g.lower)},  {"upper", rat_string(g.upper())},
              {"places", std::move(parts)}}
      .dump();
}

std::string json_mandelbrot(const MandelbrotResult& m) {
  const char* verdict = m.verdict == Membership::Member       ? "member"
                        : m.verdict == Membership::NonMember ? "non-member"
                                                             : "unresolved";
  return json{{"verdict", verdict}, {"height", j_local(m.height)}}.dump();
}

std::string json_param_poly(const ParamPoly& f) {
  json cs = json::array();
  for (const auto& c : f.coeffs()) cs.push_back(c.to_string());
  return json{{"degree", f.degree()},
              {"monic", f.is_monic()},
              {"coefficients", std::move(cs)},
              {"text", f.to_string()}}
      .dump();
}

std::string json_values(const std::vector<RatFunc>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.to_string());
  return out.dump();
}

std::string json_trichotomy(const TrichotomyReport& t) { return j_trichotomy(t).dump(); }

std::string json_equivalence(const EquivalenceReport& e) {
  json points = json::array();
  for (const auto& pt : e.points)
    points.push_back({{"lambda", pt.lambda.to_string()},
                      {"alpha", j_orbit(pt.alpha_orbit)},
                      {"beta", j_orbit(pt.beta_orbit)},
                      {"agree", pt.agree}});
  return json{{"classification", j_trichotomy(e.classification)},
              {"points", std::move(points)},
              {"disagreements", e.disagreements},
              {"all_agree", e.all_agree()}}
      .dump();
}

std::string json_constants(const std::vector<FqElem>& cs, const FieldPtr& field) {
  json vals = json::array();
  for (const auto& c : cs) vals.push_back(c.to_string());
  return json{{"field", field_spec(field)}, {"values", std::move(vals)}}.dump();
}

std::string json_audit(const AuditTrace& a) {
  json places = json::array();
  for (const auto& pa : a.places) {
    json row = {{"place", pa.v.to_string()},
                {"w_alpha", rat_string(pa.w_alpha)},
                {"w_beta", rat_string(pa.w_beta)},
                {"w_eps", pa.w_eps ? json(rat_string(*pa.w_eps)) : json(nullptr)},
                {"sizes_match", pa.sizes_match},
                {"weak_bound_holds", pa.weak_bound_holds},
                {"strict_bound_holds", pa.strict_bound_holds},
                {"h_alpha_annihilating", j_local(pa.h_alpha_annihilating)},
                {"h_beta_annihilating", j_local(pa.h_beta_annihilating)},
                {"alpha_annihilating_matches", pa.alpha_annihilating_matches},
                {"h_alpha_fixing", j_local(pa.h_alpha_fixing)}};
    row["beta_annihilating_matches"] =
        pa.beta_annihilating_matches ? json(*pa.beta_annihilating_matches) : json(nullptr);
    places.push_back(std::move(row));
  }

  json shifts = json::array();
  for (const auto& us : a.unity_shifts) {
    json row = {{"place", us.v.to_string()},
                {"gamma0", us.gamma0.to_string()},
                {"gamma0_field", field_spec(us.gamma0.field())}};
    if (us.gamma1) {
      row["gamma1"] = us.gamma1->to_string();
      row["gamma1_field"] = field_spec(us.gamma1->field());
    } else {
      row["gamma1"] = nullptr;
    }
    row["shift_param"] = us.shift_param ? json(us.shift_param->to_string()) : json(nullptr);
    row["place_above"] = us.v_above ? json(us.v_above->to_string()) : json(nullptr);
    row["h_alpha"] = j_opt_local(us.h_alpha);
    row["h_beta"] = j_opt_local(us.h_beta);
    row["alpha_matches_closed_form"] =
        us.alpha_matches_closed_form ? json(*us.alpha_matches_closed_form) : json(nullptr);
    row["beta_strictly_below"] =
        us.beta_strictly_below ? json(*us.beta_strictly_below) : json(nullptr);
    shifts.push_back(std::move(row));
  }

  json large = json::array();
  for (const auto& v : a.large_places) large.push_back(v.to_string());

  return json{{"large_places", std::move(large)},
              {"eps", a.eps.to_string()},
              {"annihilating_param", a.annihilating_param.to_string()},
              {"fixing_param", a.fixing_param.to_string()},
              {"places", std::move(places)},
              {"unity_shifts", std::move(shifts)},
              {"chain_holds", a.chain_holds}}
      .dump();
}

}  // namespace charpdyn
