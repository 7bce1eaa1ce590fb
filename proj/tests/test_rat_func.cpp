#include <doctest.h>

#include "charpdyn/errors.hpp"
#include "charpdyn/parse.hpp"
#include "charpdyn/places.hpp"
#include "test_util.hpp"

using namespace charpdyn;

namespace {
RatFunc E(const std::string& s, const FieldPtr& f) { return parse_element(s, f); }
}  // namespace

TEST_SUITE_BEGIN("rat_func");

TEST_CASE("construction reduces and normalizes the denominator monic") {
  auto F3 = FqField::make(3, 1);
  auto x = RatFunc(PolyFq::from_ints(F3, {2, 0, 1}), PolyFq::from_ints(F3, {2, 1}));
  // (t^2+2)/(t+2) = ((t+2)(t+1))/(t+2) = t+1
  CHECK(x.is_polynomial());
  CHECK(x.num() == PolyFq::from_ints(F3, {1, 1}));
  // t/(2t+2): scaling the denominator monic moves 2^-1 = 2 into the numerator
  auto y = RatFunc(PolyFq::variable(F3), PolyFq::from_ints(F3, {2, 2}));
  CHECK(y.num() == PolyFq::from_ints(F3, {0, 2}));
  CHECK(y.den() == PolyFq::from_ints(F3, {1, 1}));
  CHECK_THROWS_AS(RatFunc(PolyFq::one(F3), PolyFq::zero(F3)), std::invalid_argument);
}

TEST_CASE("field arithmetic identities") {
  std::mt19937_64 rng(3001);
  auto F4 = FqField::make(2, 2);
  for (int i = 0; i < 40; ++i) {
    auto x = testutil::random_rat_func(rng, F4, 3);
    auto y = testutil::random_nonzero_rat_func(rng, F4, 3);
    CHECK(x + y - y == x);
    CHECK(x / y * y == x);
    CHECK(y * y.inverse() == RatFunc::one(F4));
    CHECK(x * (x + y) == x * x + x * y);
    CHECK((-x) + x == RatFunc::zero(F4));
  }
  CHECK_THROWS_AS(RatFunc::one(F4) / RatFunc::zero(F4), std::invalid_argument);
}

TEST_CASE("constants are recognized after reduction") {
  auto F3 = FqField::make(3, 1);
  CHECK(E("(t+1)/(t+1)", F3).is_constant());
  CHECK(E("2", F3).constant_value() == FqElem::from_int(F3, 2));
  CHECK_FALSE(E("t/(t+1)", F3).is_constant());
  CHECK_FALSE(E("1/t", F3).is_polynomial());
  CHECK_THROWS_AS(E("t", F3).constant_value(), std::invalid_argument);
}

TEST_CASE("valuations at finite places and infinity") {
  auto F3 = FqField::make(3, 1);
  auto x = E("t^2/(t+1)^3", F3);
  CHECK(ord(x, parse_place("t", F3)) == 2);
  CHECK(ord(x, parse_place("t+1", F3)) == -3);
  CHECK(ord(x, Place::infinity(F3)) == 1);  // deg den - deg num
  CHECK(log_size(x, parse_place("t", F3)).value == Rat(-2));
  CHECK(log_size(x, parse_place("t+1", F3)).value == Rat(3));
  CHECK(log_size(x, Place::infinity(F3)).value == Rat(-1));
  CHECK_THROWS_AS(ord(RatFunc::zero(F3), Place::infinity(F3)), std::invalid_argument);
}

TEST_CASE("log size scales with the place degree") {
  auto F3 = FqField::make(3, 1);
  auto v = parse_place("t^2+1", F3);
  CHECK(v.degree() == 2);
  CHECK(ord(E("1/(t^2+1)", F3), v) == -1);
  CHECK(log_size(E("1/(t^2+1)", F3), v).value == Rat(2));
  CHECK(weil_height(E("1/(t^2+1)", F3)) == Rat(2));
}

TEST_CASE("support is sorted with infinity first") {
  auto F3 = FqField::make(3, 1);
  auto s = support({E("t", F3), E("t+1", F3)});
  REQUIRE(s.size() == 3);
  CHECK(s[0].is_infinity());
  CHECK(s[1] == parse_place("t", F3));
  CHECK(s[2] == parse_place("t+1", F3));
  // constants still report the infinite place
  auto c = support({E("2", F3)});
  REQUIRE(c.size() == 1);
  CHECK(c[0].is_infinity());
}

TEST_CASE("product formula vanishes on 1000 random elements") {
  std::mt19937_64 rng(3002);
  for (auto [p, k] : {std::pair<int64_t, int>{3, 1}, {2, 2}}) {
    auto F = FqField::make(p, k);
    for (int i = 0; i < 500; ++i) {
      auto x = testutil::random_nonzero_rat_func(rng, F, 5);
      CHECK(check_product_formula(x) == Rat(0));
    }
  }
}

TEST_CASE("weil height equals max degree and equals its place sum") {
  auto F3 = FqField::make(3, 1);
  CHECK(weil_height(E("(t^3+1)/(t-1)", F3)) == Rat(3));
  CHECK(weil_height(E("t", F3)) == Rat(1));
  CHECK(weil_height(E("2", F3)) == Rat(0));

  std::mt19937_64 rng(3003);
  auto F4 = FqField::make(2, 2);
  for (int i = 0; i < 200; ++i) {
    auto x = testutil::random_nonzero_rat_func(rng, F4, 5);
    Rat from_places(0);
    for (const auto& v : support({x})) {
      int64_t o = ord(x, v);
      if (o < 0) from_places += Rat(-o * v.degree());
    }
    CHECK(weil_height(x) == from_places);
    CHECK(weil_height(x) == Rat(std::max(x.num().degree(), x.den().degree())));
  }
}

TEST_CASE("finite places require a monic irreducible") {
  auto F3 = FqField::make(3, 1);
  CHECK_THROWS_AS(Place::finite(PolyFq::from_ints(F3, {1, 2, 1})), std::invalid_argument);
  CHECK_THROWS_AS(Place::finite(PolyFq::one(F3)), std::invalid_argument);
  auto v = Place::finite(PolyFq::from_ints(F3, {1, 0, 1}));
  CHECK(v.degree() == 2);
  CHECK_FALSE(v.is_infinity());
  CHECK_THROWS_AS(Place::infinity(F3).pi(), std::invalid_argument);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("parse");

TEST_CASE("field specs") {
  CHECK(parse_field_spec("3^2")->same_as(*FqField::make(3, 2)));
  CHECK(parse_field_spec("7")->same_as(*FqField::make(7, 1)));
  CHECK_THROWS_AS(parse_field_spec("4^1"), ParseError);
  CHECK_THROWS_AS(parse_field_spec("3^0"), ParseError);
  CHECK_THROWS_AS(parse_field_spec(""), ParseError);
  CHECK_THROWS_AS(parse_field_spec("3^"), ParseError);
}

TEST_CASE("element grammar") {
  auto F3 = FqField::make(3, 1);
  auto t = RatFunc::variable(F3);
  auto one = RatFunc::one(F3);
  CHECK(E("t", F3) == t);
  CHECK(E("t - t^2", F3) == t - t * t);
  CHECK(E("(t+1)^3", F3) == t * t * t + one);  // freshman's dream
  CHECK(E("5", F3) == RatFunc::from_int(F3, 2));
  CHECK(E("t/t", F3) == one);
  CHECK(E("-t", F3) == -t);
  CHECK(E("--t", F3) == t);
  CHECK(E("1/t + 2", F3) == one / t + one + one);
  CHECK(E("2*t^3-1/(t-1)", F3) == E("(2*t^4-2*t^3-1)/(t-1)", F3));
}

TEST_CASE("generator needs an extension field") {
  auto F9 = FqField::make(3, 2);
  CHECK(E("g^2", F9) == RatFunc::from_int(F9, 2));
  CHECK_THROWS_AS(parse_element("g", FqField::make(3, 1)), ParseError);
}

TEST_CASE("malformed elements are rejected") {
  auto F3 = FqField::make(3, 1);
  CHECK_THROWS_AS(parse_element("t+", F3), ParseError);
  CHECK_THROWS_AS(parse_element("(t", F3), ParseError);
  CHECK_THROWS_AS(parse_element("^3", F3), ParseError);
  CHECK_THROWS_AS(parse_element("", F3), ParseError);
  CHECK_THROWS_AS(parse_element("t$", F3), ParseError);
  CHECK_THROWS_AS(parse_element("1/(t-t)", F3), ParseError);  // division by zero
}

TEST_CASE("printing round-trips through the parser") {
  std::mt19937_64 rng(3004);
  for (auto [p, k] : {std::pair<int64_t, int>{3, 1}, {2, 2}, {5, 1}}) {
    auto F = FqField::make(p, k);
    for (int i = 0; i < 100; ++i) {
      auto x = testutil::random_rat_func(rng, F, 4);
      CHECK(parse_element(x.to_string(), F) == x);
    }
  }
}

TEST_CASE("places parse, scale monic, and round-trip") {
  auto F3 = FqField::make(3, 1);
  CHECK(parse_place("inf", F3).is_infinity());
  CHECK(parse_place("t", F3) == Place::finite(PolyFq::variable(F3)));
  CHECK(parse_place("2*t+2", F3) == parse_place("t+1", F3));  // scaled monic
  CHECK(parse_place("t^2+1", F3).degree() == 2);
  CHECK_THROWS_AS(parse_place("t^2+2*t+1", F3), ParseError);  // (t+1)^2
  CHECK_THROWS_AS(parse_place("2", F3), ParseError);
  CHECK_THROWS_AS(parse_place("1/t", F3), ParseError);
  auto v = parse_place("t^2+1", F3);
  CHECK(parse_place(v.to_string(), F3) == v);
}

TEST_SUITE_END();
