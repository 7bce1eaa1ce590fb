#pragma once

#include <string>
#include <vector>

#include "charpdyn/dynamics.hpp"

namespace charpdyn {

// The n-th iterate of gamma under x -> x^d + lambda, expanded as a
// polynomial in the parameter lambda with coefficients in F_q(t). For
// n >= 1 it is monic of degree d^(n-1) and its constant term is
// gamma^(d^n); coefficients are polynomials in gamma of degree below d^n.
class ParamPoly {
 public:
  ParamPoly(FieldPtr field, std::vector<RatFunc> coeffs);  // index = power of lambda

  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 when zero
  RatFunc coeff(int i) const;  // zero beyond the degree
  const std::vector<RatFunc>& coeffs() const { return coeffs_; }
  bool is_monic() const;

  RatFunc eval(const RatFunc& lambda) const;

  ParamPoly operator-(const ParamPoly& o) const;
  ParamPoly minus_constant(const RatFunc& c) const;  // subtract c from the lambda^0 term

  bool operator==(const ParamPoly& o) const;
  bool operator!=(const ParamPoly& o) const { return !(*this == o); }
  std::string to_string() const;  // polynomial in "L"

 private:
  void trim();

  FieldPtr field_;
  std::vector<RatFunc> coeffs_;
};

// Exact expansion of the n-th iterate polynomial. Internally the iterate is
// carried over a common denominator den(gamma)^(d^n), so the whole
// computation is polynomial arithmetic; the prime-to-p part of each d-th
// power is a short multiplication chain and the p-part is a Frobenius
// relabeling. Guarded by caps.param_degree on d^(n-1).
ParamPoly param_poly(int n, const RatFunc& gamma, const FamilyParams& fam,
                     const Caps& caps = Caps{});

}  // namespace charpdyn
