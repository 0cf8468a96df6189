#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hcolor {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned k) {
  BigInt out = 1;
  for (unsigned i = 2; i <= k; ++i) out *= i;
  return out;
}

inline BigInt power(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

/// Smallest integer >= p/q for q > 0.
inline BigInt ceil_div(const BigInt& p, const BigInt& q) {
  BigInt quotient = p / q;
  if (quotient * q < p) ++quotient;
  return quotient;
}

inline BigInt ceil(const Rational& x) {
  return ceil_div(boost::multiprecision::numerator(x), boost::multiprecision::denominator(x));
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& x) {
  const BigInt& den = boost::multiprecision::denominator(x);
  std::string out = boost::multiprecision::numerator(x).str();
  if (den != 1) out += "/" + den.str();
  return out;
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace hcolor
