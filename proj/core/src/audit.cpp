#include "charpdyn/audit.hpp"

#include <stdexcept>

#include "charpdyn/errors.hpp"
#include "charpdyn/extension.hpp"

namespace charpdyn {

namespace {

// Certified strict comparison of two local height results: true/false when
// the certificates decide it, empty when a bracket is too wide to tell.
std::optional<bool> strictly_below(const LocalHeightResult& lo, const LocalHeightResult& hi) {
  if (lo.is_exact() && hi.is_exact()) return lo.value() < hi.value();
  if (!lo.is_exact() && hi.is_exact()) {
    if (lo.upper() < hi.value()) return true;
    return std::nullopt;  // the bracket straddles hi
  }
  if (lo.is_exact() && !hi.is_exact() && hi.upper() <= lo.value())
    return false;  // hi <= its upper <= lo
  return std::nullopt;
}

// The unity-translate diagnostic at one place where |eps|_v = |alpha|_v.
UnityShiftAudit run_unity_shift(const RatFunc& alpha, const RatFunc& beta, const RatFunc& eps,
                                const Place& v, const FamilyParams& fam, int max_iter,
                                const Caps& caps) {
  UnityShiftAudit out;
  out.v = v;
  out.gamma0 = residue_at(eps / alpha, v);
  out.gamma1 = find_unity_translate(out.gamma0, fam.d, caps);
  if (!out.gamma1) return out;  // d a power of p: the construction has no room

  const FieldPtr big = out.gamma1->field();
  const FieldEmbedding from_base(fam.field, big);
  const RatFunc a = from_base.lift(alpha);
  const RatFunc b = from_base.lift(beta);
  const RatFunc e = from_base.lift(eps);
  const FamilyParams fam_big = FamilyParams::make(big, fam.d);
  out.shift_param = RatFunc::constant(*out.gamma1) * a - a.pow(fam.d);

  // gamma0 was read off through one identification of the residue field;
  // the matching place above v is the one where eps - gamma0*alpha
  // genuinely drops below alpha. Lift gamma0 through its own tower to test.
  const FieldEmbedding from_res(out.gamma0.field(), big);
  const RatFunc drop = e - RatFunc::constant(from_res.lift(out.gamma0)) * a;
  for (const auto& w : places_above(v, from_base)) {
    if (!drop.is_zero() && log_size(drop, w).value >= log_size(a, w).value) continue;
    out.v_above = w;
    break;
  }
  if (!out.v_above) return out;  // defensive; the matching conjugate must exist

  out.h_alpha = local_canonical_height(a, *out.shift_param, *out.v_above, fam_big, max_iter, caps);
  out.h_beta = local_canonical_height(b, *out.shift_param, *out.v_above, fam_big, max_iter, caps);
  out.alpha_matches_closed_form =
      *out.h_alpha == LocalHeightResult::exact(log_size(a, *out.v_above).value / fam.d);
  out.beta_strictly_below = strictly_below(*out.h_beta, *out.h_alpha);
  return out;
}

}  // namespace

AuditTrace audit_proof_trace(const RatFunc& alpha, const RatFunc& beta, const FamilyParams& fam,
                             int max_iter, const Caps& caps) {
  if (!alpha.field()->same_as(*fam.field) || !beta.field()->same_as(*fam.field))
    throw FieldMismatch("audit_proof_trace: points are not over the family's constant field");
  if (alpha.is_constant() && beta.is_constant())
    throw std::invalid_argument("audit_proof_trace: both points constant, nothing to audit");
  if (alpha.is_zero()) throw std::invalid_argument("audit_proof_trace: alpha must be nonzero");

  AuditTrace trace;
  trace.eps = beta.pow(fam.d) - alpha.pow(fam.d);
  trace.annihilating_param = -alpha.pow(fam.d);
  trace.fixing_param = alpha - alpha.pow(fam.d);

  std::vector<RatFunc> nonzero{alpha};
  if (!beta.is_zero()) nonzero.push_back(beta);
  for (const auto& v : support(nonzero)) {
    const Rat wa = log_size(alpha, v).value;
    const Rat wb = beta.is_zero() ? Rat(0) : log_size(beta, v).value;
    if (wa <= 0 && wb <= 0) continue;
    trace.large_places.push_back(v);

    PlaceAudit pa;
    pa.v = v;
    pa.w_alpha = wa;
    pa.w_beta = wb;
    if (!trace.eps.is_zero()) pa.w_eps = log_size(trace.eps, v).value;
    pa.sizes_match = wa == wb && wa > 0;
    pa.weak_bound_holds = !pa.w_eps || *pa.w_eps <= wa;
    pa.strict_bound_holds = !pa.w_eps || *pa.w_eps < wa;

    pa.h_alpha_annihilating =
        local_canonical_height(alpha, trace.annihilating_param, v, fam, max_iter, caps);
    pa.h_beta_annihilating =
        local_canonical_height(beta, trace.annihilating_param, v, fam, max_iter, caps);
    pa.alpha_annihilating_matches =
        pa.h_alpha_annihilating == LocalHeightResult::exact(wa / fam.d);
    if (pa.w_eps && *pa.w_eps > wa)
      pa.beta_annihilating_matches =
          pa.h_beta_annihilating == LocalHeightResult::exact(*pa.w_eps / fam.d);

    pa.h_alpha_fixing = local_canonical_height(alpha, trace.fixing_param, v, fam, max_iter, caps);

    if (!pa.strict_bound_holds && pa.weak_bound_holds)
      trace.unity_shifts.push_back(
          run_unity_shift(alpha, beta, trace.eps, v, fam, max_iter, caps));

    trace.places.push_back(std::move(pa));
  }

  trace.chain_holds = !trace.places.empty();
  for (const auto& pa : trace.places)
    trace.chain_holds =
        trace.chain_holds && pa.sizes_match && pa.weak_bound_holds && pa.strict_bound_holds;
  return trace;
}

}  // namespace charpdyn
