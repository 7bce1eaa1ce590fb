#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "charpdyn/errors.hpp"
#include "charpdyn/parse.hpp"
#include "charpdyn/roots.hpp"
#include "test_util.hpp"

using namespace charpdyn;

namespace {

struct Setup {
  FieldPtr F;
  FamilyParams fam;

  Setup(int64_t p, int k, int64_t d) : F(FqField::make(p, k)), fam(FamilyParams::make(F, d)) {}

  RatFunc e(const std::string& s) const { return parse_element(s, F); }
};

RatFunc iterate(RatFunc x, const RatFunc& lam, const FamilyParams& fam, int n) {
  for (int i = 0; i < n; ++i) x = step(x, lam, fam);
  return x;
}

int64_t ipow(int64_t base, int exp) {
  int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::set<RatFunc> as_set(const std::vector<RatFunc>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_SUITE("param_poly") {

TEST_CASE("first iterate is linear in the parameter") {
  Setup s(3, 1, 2);
  ParamPoly p1 = param_poly(1, s.e("t"), s.fam);
  CHECK(p1.degree() == 1);
  CHECK(p1.is_monic());
  CHECK(p1.coeff(0) == s.e("t^2"));
  CHECK(p1.coeff(1) == s.e("1"));
  CHECK(p1.coeff(7) == s.e("0"));  // reading past the degree is allowed
  CHECK(p1.to_string() == "L + t^2");
}

TEST_CASE("second iterate for a quadratic family") {
  // (t^2 + L)^2 + L expands to L^2 + (2t^2+1)L + t^4
  Setup s(3, 1, 2);
  ParamPoly p2 = param_poly(2, s.e("t"), s.fam);
  CHECK(p2.degree() == 2);
  CHECK(p2.is_monic());
  CHECK(p2.coeff(0) == s.e("t^4"));
  CHECK(p2.coeff(1) == s.e("2*t^2+1"));
  CHECK(p2.coeff(2) == s.e("1"));
}

TEST_CASE("iterate polynomials are monic of degree d^(n-1) with constant term gamma^(d^n)") {
  for (int64_t d : {2, 3}) {
    Setup s(3, 1, d);
    for (const auto& gamma : {s.e("t"), s.e("(t+1)/t")}) {
      for (int n = 1; n <= 5; ++n) {
        ParamPoly pn = param_poly(n, gamma, s.fam);
        CAPTURE(d);
        CAPTURE(n);
        CHECK(pn.is_monic());
        CHECK(pn.degree() == ipow(d, n - 1));
        CHECK(pn.coeff(0) == gamma.pow(ipow(d, n)));
      }
    }
  }
}

TEST_CASE("additive closed form when d is a power of the characteristic") {
  // x -> x^d + lambda is additive for d = p^l, so the n-th iterate collapses
  // to gamma^(d^n) + lambda^(d^(n-1)) + ... + lambda^d + lambda
  Setup s(3, 1, 3);
  ParamPoly p3 = param_poly(3, s.e("t"), s.fam);
  CHECK(p3.degree() == 9);
  for (int i = 0; i <= 9; ++i) {
    if (i == 1 || i == 3 || i == 9)
      CHECK(p3.coeff(i) == s.e("1"));
    else if (i == 0)
      CHECK(p3.coeff(i) == s.e("t^27"));
    else
      CHECK(p3.coeff(i).is_zero());
  }

  Setup s2(2, 1, 4);
  ParamPoly q2 = param_poly(2, s2.e("t"), s2.fam);
  CHECK(q2.degree() == 4);
  CHECK(q2.coeff(0) == s2.e("t^16"));
  CHECK(q2.coeff(1) == s2.e("1"));
  CHECK(q2.coeff(2).is_zero());
  CHECK(q2.coeff(3).is_zero());
  CHECK(q2.coeff(4) == s2.e("1"));
}

TEST_CASE("evaluating the iterate polynomial tracks the orbit") {
  Setup s(3, 1, 2);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 8; ++trial) {
    auto gamma = testutil::random_rat_func(rng, s.F, 2);
    auto lam = testutil::random_rat_func(rng, s.F, 2);
    for (int n = 1; n <= 4; ++n) {
      ParamPoly pn = param_poly(n, gamma, s.fam);
      CHECK(pn.eval(lam) == iterate(gamma, lam, s.fam, n));
    }
  }
}

TEST_CASE("subtraction and constant shifts") {
  Setup s(3, 1, 2);
  ParamPoly p1 = param_poly(1, s.e("t"), s.fam);
  ParamPoly shifted = p1.minus_constant(s.e("t^2"));
  CHECK(shifted.degree() == 1);
  CHECK(shifted.coeff(0).is_zero());
  CHECK(shifted.coeff(1) == s.e("1"));

  ParamPoly diff = p1 - p1;  // trims to the zero polynomial
  CHECK(diff.degree() == -1);
  CHECK(diff.coeff(0).is_zero());

  Setup other(2, 1, 2);
  ParamPoly q1 = param_poly(1, other.e("t"), other.fam);
  CHECK_THROWS_AS(p1 - q1, FieldMismatch);
}

TEST_CASE("parameter-degree cap") {
  Setup s(3, 1, 2);
  Caps tight;
  tight.param_degree = 2;
  CHECK_NOTHROW(param_poly(2, s.e("t"), s.fam, tight));  // degree d^1 = 2 is allowed
  CHECK_THROWS_AS(param_poly(3, s.e("t"), s.fam, tight), CapExceeded);
  CHECK_THROWS_AS(param_poly(0, s.e("t"), s.fam), std::invalid_argument);
}

}  // TEST_SUITE("param_poly")

TEST_SUITE("roots") {

TEST_CASE("period-2 parameters for gamma = t over F_3") {
  // f^2_lambda(t) = t reduces to lambda^2 + (2t^2+1)lambda + t^4+2t = 0,
  // whose roots are 2t^2+t and 2t^2+2t+2 (checked by direct substitution)
  Setup s(3, 1, 2);
  auto params = periodic_params(s.e("t"), 2, s.fam);
  CHECK(as_set(params) == as_set({s.e("2*t^2+t"), s.e("2*t^2+2*t+2")}));
  for (const auto& lam : params) CHECK(iterate(s.e("t"), lam, s.fam, 2) == s.e("t"));
}

TEST_CASE("fixed-point parameters are a subset of the period-2 ones here") {
  Setup s(3, 1, 2);
  auto fixed = periodic_params(s.e("t"), 1, s.fam);
  REQUIRE(fixed.size() == 1);
  CHECK(fixed[0] == s.e("2*t^2+t"));
}

TEST_CASE("zero roots are reported") {
  Setup s(3, 1, 2);
  auto params = periodic_params(s.e("0"), 1, s.fam);
  REQUIRE(params.size() == 1);
  CHECK(params[0].is_zero());
}

TEST_CASE("non-polynomial basepoints give non-polynomial parameters") {
  // gamma = 1/t is fixed iff lambda = gamma - gamma^2 = (t-1)/t^2
  Setup s(3, 1, 2);
  auto params = periodic_params(s.e("1/t"), 1, s.fam);
  REQUIRE(params.size() == 1);
  CHECK(params[0] == s.e("(t+2)/t^2"));
  CHECK_FALSE(params[0].is_polynomial());
}

TEST_CASE("small base fields extend to get enough sample points") {
  // over F_2 the period-2 polynomial of t is lambda^2 + lambda + t^4 + t,
  // with roots t^2+t and t^2+t+1; the degree bound needs three distinct
  // sample values of t, so the search must pass through F_4
  Setup s(2, 1, 2);
  auto params = periodic_params(s.e("t"), 2, s.fam);
  CHECK(as_set(params) == as_set({s.e("t^2+t"), s.e("t^2+t+1")}));

  Caps no_ext;
  no_ext.ext_factor = 1;
  CHECK_THROWS_AS(periodic_params(s.e("t"), 2, s.fam, no_ext), CapExceeded);
}

TEST_CASE("agreement with exhaustive search over low-degree parameters") {
  Setup s(3, 1, 2);
  auto found = as_set(periodic_params(s.e("t"), 2, s.fam));
  std::set<RatFunc> brute;
  // every root is a polynomial of degree <= 2 here, so sweep all of them
  for (int64_t c0 = 0; c0 < 3; ++c0)
    for (int64_t c1 = 0; c1 < 3; ++c1)
      for (int64_t c2 = 0; c2 < 3; ++c2) {
        RatFunc lam(PolyFq::from_ints(s.F, {c0, c1, c2}));
        if (iterate(s.e("t"), lam, s.fam, 2) == s.e("t")) brute.insert(lam);
      }
  CHECK(found == brute);
}

TEST_CASE("returned roots always evaluate to zero") {
  Setup s(3, 1, 2);
  std::mt19937_64 rng(23);
  int verified = 0;
  for (int trial = 0; trial < 10; ++trial) {
    auto gamma = testutil::random_rat_func(rng, s.F, 2);
    ParamPoly F = param_poly(2, gamma, s.fam).minus_constant(gamma);
    for (const auto& root : rational_roots(F)) {
      CHECK(F.eval(root).is_zero());
      ++verified;
    }
  }
  CHECK(verified > 0);
}

TEST_CASE("input validation") {
  Setup s(3, 1, 2);
  ParamPoly not_monic(s.F, {s.e("t"), s.e("t")});
  CHECK_THROWS_AS(rational_roots(not_monic), std::invalid_argument);
  ParamPoly zero(s.F, {});
  CHECK_THROWS_AS(rational_roots(zero), std::invalid_argument);
  ParamPoly constant(s.F, {s.e("t")});
  CHECK(rational_roots(constant).empty());
}

}  // TEST_SUITE("roots")
