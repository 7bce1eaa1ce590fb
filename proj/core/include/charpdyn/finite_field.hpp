#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "charpdyn/caps.hpp"
#include "charpdyn/rational.hpp"

namespace charpdyn {

class FqField;
using FieldPtr = std::shared_ptr<const FqField>;

// F_{p^k} presented as F_p[x]/(m) on the power basis 1, g, ..., g^(k-1),
// where m is the monic irreducible of degree k whose coefficient vector,
// read as a base-p integer, is smallest. The choice makes representations
// reproducible across runs and sessions.
//
// Fields are immutable; elements hold a shared pointer to their field and
// refuse arithmetic with elements of a structurally different field.
class FqField {
 public:
  static FieldPtr make(int64_t p, int k);

  int64_t p() const { return p_; }
  int k() const { return k_; }
  BigInt order() const;  // p^k
  const std::vector<int64_t>& modulus() const { return modulus_; }  // length k+1, monic

  bool same_as(const FqField& other) const;
  std::string spec_string() const;  // "p^k"

  // Kernels on raw residue vectors of length k (entries canonical in [0, p)).
  // mul_acc accumulates the plain convolution into acc[0..2k-2] with reduction
  // deferred; reduce folds an accumulator back to canonical length-k form.
  // Accumulator entries must stay below 2^62; callers adding many products
  // reduce in chunks (see PolyFq::operator*).
  void raw_add(const int64_t* a, const int64_t* b, int64_t* out) const;
  void raw_sub(const int64_t* a, const int64_t* b, int64_t* out) const;
  void raw_neg(const int64_t* a, int64_t* out) const;
  void raw_mul_acc(const int64_t* a, const int64_t* b, int64_t* acc) const;
  void raw_reduce(int64_t* acc, int64_t* out) const;

 private:
  FqField(int64_t p, int k, std::vector<int64_t> modulus);

  int64_t p_;
  int k_;
  std::vector<int64_t> modulus_;
};

class FqElem {
 public:
  FqElem() = default;  // detached; only assignment and destruction are valid
  FqElem(FieldPtr field, std::vector<int64_t> coeffs);

  static FqElem zero(const FieldPtr& f);
  static FqElem one(const FieldPtr& f);
  static FqElem from_int(const FieldPtr& f, int64_t n);  // n mod p, in the prime subfield
  static FqElem gen(const FieldPtr& f);                  // power-basis generator; requires k >= 2

  const FieldPtr& field() const { return field_; }
  const std::vector<int64_t>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool in_prime_field() const;
  // value of a prime-subfield element as a residue; throws otherwise
  int64_t as_int() const;

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator-() const;
  FqElem operator*(const FqElem& o) const;
  FqElem operator/(const FqElem& o) const;
  FqElem inverse() const;  // throws std::invalid_argument on zero
  FqElem pow(const BigInt& e) const;
  FqElem pow(int64_t e) const;
  FqElem frobenius() const;  // x -> x^p

  bool operator==(const FqElem& o) const;
  bool operator!=(const FqElem& o) const { return !(*this == o); }
  // deterministic order used for canonical search/report output
  bool operator<(const FqElem& o) const;

  size_t hash() const;
  std::string to_string() const;  // polynomial in g, e.g. "2*g+1"

 private:
  FieldPtr field_;
  std::vector<int64_t> coeffs_;  // length k, canonical residues
};

// d = s * p^ell with gcd(s, p) = 1. Requires d >= 2 and p prime.
struct DSplit {
  int64_t d;
  int64_t s;
  int ell;
};
DSplit decompose_d(int64_t d, int64_t p);

// #{x in F : x^d = 1} = gcd(d, p^k - 1); the enumeration-free closed form.
int64_t count_dth_roots_of_unity(int64_t d, const FqField& field);

// All p^k elements in a fixed order (coefficient tuples as base-p digits of
// 0, 1, 2, ...). Guarded by caps.enumeration.
std::vector<FqElem> enumerate_field(const FieldPtr& f, const Caps& caps = Caps{});

bool is_prime(int64_t n);

void require_same_field(const FqElem& a, const FqElem& b);

}  // namespace charpdyn
