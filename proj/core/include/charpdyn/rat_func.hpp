#pragma once

#include <string>

#include "charpdyn/poly.hpp"

namespace charpdyn {

// Element of K = F_q(t), kept in reduced form: gcd(num, den) = 1 and den
// monic. The zero element is 0/1. Values are immutable; all operations
// return fresh objects, so sharing across threads is safe.
class RatFunc {
 public:
  RatFunc() = default;  // detached; assign before use
  explicit RatFunc(PolyFq num);
  RatFunc(PolyFq num, PolyFq den);  // reduces; throws std::invalid_argument on den = 0

  static RatFunc zero(const FieldPtr& f);
  static RatFunc one(const FieldPtr& f);
  static RatFunc variable(const FieldPtr& f);  // t
  static RatFunc constant(const FqElem& c);
  static RatFunc from_int(const FieldPtr& f, int64_t n);

  const PolyFq& num() const { return num_; }
  const PolyFq& den() const { return den_; }
  const FieldPtr& field() const { return num_.field(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  // lies in the constant field F_q
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  // value as a constant-field element; throws if not constant
  FqElem constant_value() const;

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;  // throws on zero divisor
  RatFunc inverse() const;
  RatFunc pow(int64_t e) const;  // e >= 0

  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  // deterministic order for canonical output lists
  bool operator<(const RatFunc& o) const;

  size_t hash() const;
  std::string to_string() const;  // "num" or "(num)/(den)"

 private:
  void reduce();

  PolyFq num_;
  PolyFq den_;
};

}  // namespace charpdyn
