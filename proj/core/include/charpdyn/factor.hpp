#pragma once

#include <vector>

#include "charpdyn/poly.hpp"

namespace charpdyn {

// Deterministic test via distinct-degree sieving: f (degree >= 1) is
// irreducible iff t^(q^deg) = t mod f and the degree/r Frobenius gcds are
// trivial for every prime r | deg.
bool is_irreducible(const PolyFq& f);

// The distinct monic irreducible factors of f (multiplicities dropped),
// sorted in the canonical polynomial order. f must be nonzero of degree >= 1
// ... constants yield an empty list. Equal-degree splitting uses a
// deterministically seeded generator, so results are reproducible.
std::vector<PolyFq> distinct_irreducible_factors(const PolyFq& f);

// Largest squarefree divisor (the radical), monic.
PolyFq radical(const PolyFq& f);

// Roots of f lying in its coefficient field, sorted.
std::vector<FqElem> field_roots(const PolyFq& f);

}  // namespace charpdyn
