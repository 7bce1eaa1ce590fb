#pragma once

#include <string>
#include <vector>

#include "charpdyn/rat_func.hpp"
#include "charpdyn/rational.hpp"

namespace charpdyn {

// A place of K = F_q(t): either a monic irreducible pi of F_q[t] or the
// place at infinity (degree 1). Places order with infinity first, then by
// (degree, canonical polynomial order).
class Place {
 public:
  Place() = default;  // detached; assign before use
  static Place infinity(const FieldPtr& f);
  static Place finite(PolyFq pi);  // pi monic irreducible (checked)

  bool is_infinity() const { return infinite_; }
  const PolyFq& pi() const;  // throws at infinity
  const FieldPtr& field() const { return field_; }
  int degree() const;

  bool operator==(const Place& o) const;
  bool operator!=(const Place& o) const { return !(*this == o); }
  bool operator<(const Place& o) const;

  size_t hash() const;
  std::string to_string() const;  // "inf" or the monic pi string

 private:
  Place(FieldPtr f, bool infinite, PolyFq pi);

  FieldPtr field_;
  bool infinite_ = true;
  PolyFq pi_;  // meaningful only for finite places
};

// Additive size log|x|_v in units of log q; an exact rational.
struct LogSize {
  Rat value;
  bool operator==(const LogSize& o) const { return value == o.value; }
};

// Valuation of nonzero x at v: multiplicity of pi in num minus den at a
// finite place, deg den - deg num at infinity. Throws on x = 0.
int64_t ord(const RatFunc& x, const Place& v);

// log|x|_v = -ord_v(x) * deg(v). Throws on x = 0.
LogSize log_size(const RatFunc& x, const Place& v);

// Places where some x has nonzero valuation, plus infinity (always
// included), sorted. Inputs must be nonzero.
std::vector<Place> support(const std::vector<RatFunc>& xs);

// sum_v deg(v) * ord_v(x) over the support; identically zero is the tested
// contract. Throws on x = 0.
Rat check_product_formula(const RatFunc& x);

// sum_v deg(v) * max(0, -ord_v(x)): the pole-counting height. Equals
// max(deg num, deg den) in reduced form; the tests compare both routes.
Rat weil_height(const RatFunc& x);

}  // namespace charpdyn
