#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace charpdyn {

// All height bookkeeping is exact: integers that can outgrow 64 bits
// (d^n denominators) and rationals built from them.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt big_pow(int64_t base, int64_t exp) {
  BigInt r = 1, b = base;
  for (; exp > 0; exp >>= 1, b *= b)
    if (exp & 1) r *= b;
  return r;
}

// Serialized form used everywhere: "num/den", denominator always shown.
inline std::string rat_string(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace charpdyn
