#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace facnum {

/// Exact signed integer used for every count and Möbius value.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational in lowest terms.
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// "n/d", or just "n" when the denominator is one.
inline std::string to_string(const BigRational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace facnum
