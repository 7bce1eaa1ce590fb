#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "charpdyn/finite_field.hpp"

namespace charpdyn {

// Dense univariate polynomial over F_q. Coefficients are stored as one flat
// residue buffer (k residues per coefficient) so ring operations stay
// allocation-light; FqElem views are materialized on demand.
//
// degree() of the zero polynomial is the sentinel -1.
class PolyFq {
 public:
  PolyFq() = default;  // detached; assign before use
  explicit PolyFq(FieldPtr field);  // zero
  PolyFq(FieldPtr field, const std::vector<FqElem>& coeffs);

  static PolyFq zero(const FieldPtr& f) { return PolyFq(f); }
  static PolyFq one(const FieldPtr& f);
  static PolyFq constant(const FqElem& c);
  static PolyFq variable(const FieldPtr& f);  // t
  // convenience for prime-subfield coefficients, index = degree
  static PolyFq from_ints(const FieldPtr& f, const std::vector<int64_t>& coeffs);

  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(n_) - 1; }
  bool is_zero() const { return n_ == 0; }
  bool is_one() const;
  bool is_constant() const { return n_ <= 1; }
  bool is_monic() const;

  FqElem coeff(int i) const;  // zero beyond the degree
  FqElem leading() const;     // throws on zero polynomial
  std::vector<FqElem> coeffs() const;

  FqElem eval(const FqElem& x) const;

  PolyFq operator+(const PolyFq& o) const;
  PolyFq operator-(const PolyFq& o) const;
  PolyFq operator-() const;
  PolyFq operator*(const PolyFq& o) const;
  PolyFq operator*(const FqElem& c) const;
  PolyFq pow(int64_t e) const;

  // division with remainder; throws std::invalid_argument on zero divisor
  std::pair<PolyFq, PolyFq> divmod(const PolyFq& divisor) const;
  PolyFq operator/(const PolyFq& o) const { return divmod(o).first; }
  PolyFq operator%(const PolyFq& o) const { return divmod(o).second; }

  PolyFq monic() const;  // scaled by the inverse of the leading coefficient
  PolyFq derivative() const;
  PolyFq shifted(int by) const;  // multiply by t^by (by >= 0)

  bool operator==(const PolyFq& o) const;
  bool operator!=(const PolyFq& o) const { return !(*this == o); }
  // deterministic order: by degree, then coefficients from the top
  bool operator<(const PolyFq& o) const;

  size_t hash() const;
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  PolyFq slice(size_t from, size_t to) const;  // coefficient window [from, to)
  static PolyFq mul_karatsuba(const PolyFq& a, const PolyFq& b);
  const int64_t* raw(size_t i) const { return res_.data() + i * static_cast<size_t>(k_); }
  int64_t* raw(size_t i) { return res_.data() + i * static_cast<size_t>(k_); }

  FieldPtr field_;
  int k_ = 0;
  size_t n_ = 0;                // number of stored coefficients (degree + 1)
  std::vector<int64_t> res_;   // n_ * k_ residues
};

PolyFq gcd(const PolyFq& a, const PolyFq& b);  // monic normal form (or zero)
PolyFq powmod(const PolyFq& base, const BigInt& e, const PolyFq& mod);

}  // namespace charpdyn
