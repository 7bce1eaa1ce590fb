#pragma once

#include <optional>
#include <vector>

#include "charpdyn/caps.hpp"
#include "charpdyn/places.hpp"
#include "charpdyn/poly.hpp"
#include "charpdyn/rat_func.hpp"

namespace charpdyn {

// Multiplicative order of p modulo n: the smallest m >= 1 with n | p^m - 1.
// Requires gcd(n, p) = 1; n = 1 gives 1.
int64_t splitting_degree(int64_t n, int64_t p);

// The embedding F_{p^k} -> F_{p^K} with k | K, fixed by sending the small
// power-basis generator to the canonically least root of the small modulus
// in the big field. lower() inverts it where defined.
class FieldEmbedding {
 public:
  FieldEmbedding(FieldPtr small, FieldPtr big);

  const FieldPtr& small() const { return small_; }
  const FieldPtr& big() const { return big_; }

  FqElem lift(const FqElem& x) const;
  std::optional<FqElem> lower(const FqElem& x) const;

  PolyFq lift(const PolyFq& f) const;
  std::optional<PolyFq> lower(const PolyFq& f) const;

  RatFunc lift(const RatFunc& x) const;
  std::optional<RatFunc> lower(const RatFunc& x) const;

 private:
  FieldPtr small_, big_;
  std::vector<FqElem> gen_powers_;  // images of 1, g, ..., g^(k-1)
  // Row-reduction transform T with T * [basis-image matrix] = [I_k; 0]:
  // lowering a big-field coordinate vector y is reading off the first k
  // entries of T*y and demanding the rest vanish. K rows of K residues.
  std::vector<int64_t> solve_;
};

// Places of the constant-field extension lying over v: infinity stays
// infinity, a finite pi splits into the irreducible factors of its lift.
std::vector<Place> places_above(const Place& v, const FieldEmbedding& emb);

// Reduction of a v-integral x at v. At infinity this is the leading
// coefficient ratio, an element of the base constant field; at a finite pi
// it is x mod pi, realized in F_{p^(k*deg pi)} by evaluating at the least
// root of pi there. Throws on ord_v(x) < 0.
FqElem residue_at(const RatFunc& x, const Place& v);

// A constant c in the smallest extension of a's field containing the
// prime-to-p d-th roots of unity, with (a + c)^d = 1 and c^d != 1; searched
// in enumeration order, nonzero candidates first. Empty when d is a power
// of p (no candidates exist). Requires a != 0. The returned element's field
// records the extension level used.
std::optional<FqElem> find_unity_translate(const FqElem& a, int64_t d, const Caps& caps = Caps{});

}  // namespace charpdyn
