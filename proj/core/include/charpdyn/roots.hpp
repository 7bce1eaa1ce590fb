#pragma once

#include <vector>

#include "charpdyn/param_poly.hpp"

namespace charpdyn {

// All roots in F_q(t) of F, which must be monic in lambda. Monicity forces
// every root, after clearing denominators, to be a polynomial in t of
// explicitly bounded degree; the finder samples t at enough constant-field
// points (extending the constant field if the base is too small), extracts
// finite-field roots per sample, interpolates every consistent choice, and
// keeps exactly the candidates that evaluate to zero. Results are sorted
// and exact; caps bound the extension degree and the number of
// interpolation tuples.
std::vector<RatFunc> rational_roots(const ParamPoly& F, const Caps& caps = Caps{});

// Parameters lambda in F_q(t) with f^n_lambda(gamma) = gamma: the rational
// roots of the n-th iterate polynomial minus gamma.
std::vector<RatFunc> periodic_params(const RatFunc& gamma, int n, const FamilyParams& fam,
                                     const Caps& caps = Caps{});

}  // namespace charpdyn
