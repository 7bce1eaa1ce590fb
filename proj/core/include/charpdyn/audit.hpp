#pragma once

#include <optional>
#include <vector>

#include "charpdyn/dynamics.hpp"

namespace charpdyn {

// Diagnostics at one place where the pair is large. Log-sizes are in units
// of log q; the three booleans record the expected inequality chain for a
// pair whose local heights agree everywhere: equal sizes above 1, the d-th
// power difference no larger than the points, and strictly smaller.
struct PlaceAudit {
  Place v;
  Rat w_alpha;
  Rat w_beta;
  std::optional<Rat> w_eps;  // log-size of beta^d - alpha^d; empty when it vanishes
  bool sizes_match = false;
  bool weak_bound_holds = false;
  bool strict_bound_holds = false;
  // Heights at the annihilating parameter -alpha^d, against their closed
  // forms: alpha's height must be w_alpha/d; beta's must be w_eps/d
  // whenever w_eps > w_alpha (checked only then).
  LocalHeightResult h_alpha_annihilating;
  LocalHeightResult h_beta_annihilating;
  bool alpha_annihilating_matches = false;
  std::optional<bool> beta_annihilating_matches;
  // Height at the fixing parameter alpha - alpha^d: exactly 0, always.
  LocalHeightResult h_alpha_fixing;
};

// The unity-translate construction, run at a place where the strict bound
// fails (sizes of eps and alpha agree). gamma0 is the residue of
// eps/alpha there; gamma1 translates it onto the d-th roots of unity, when
// d is not a pure power of p. Heights are computed at a place above v in
// the constant-field extension where gamma1 lives; the closed form pins
// alpha's height to log|alpha|/d while beta's must drop strictly below.
struct UnityShiftAudit {
  Place v;
  FqElem gamma0;
  std::optional<FqElem> gamma1;
  std::optional<RatFunc> shift_param;  // gamma1*alpha - alpha^d, over gamma1's field
  std::optional<Place> v_above;
  std::optional<LocalHeightResult> h_alpha;
  std::optional<LocalHeightResult> h_beta;
  std::optional<bool> alpha_matches_closed_form;
  std::optional<bool> beta_strictly_below;
};

struct AuditTrace {
  std::vector<Place> large_places;  // max(|alpha|_v, |beta|_v) > 1
  RatFunc eps;                      // beta^d - alpha^d
  RatFunc annihilating_param;       // -alpha^d
  RatFunc fixing_param;             // alpha - alpha^d
  std::vector<PlaceAudit> places;
  std::vector<UnityShiftAudit> unity_shifts;
  bool chain_holds = false;  // the full inequality chain at every large place
};

// Runs the height diagnostics above on a pair, at every large place.
// Rejects pairs with both points constant (no large places to audit) and a
// zero alpha (the auxiliary parameters are built from alpha).
AuditTrace audit_proof_trace(const RatFunc& alpha, const RatFunc& beta, const FamilyParams& fam,
                             int max_iter = 64, const Caps& caps = Caps{});

}  // namespace charpdyn
