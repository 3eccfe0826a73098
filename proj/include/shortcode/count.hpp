#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "shortcode/error.hpp"

namespace shortcode {

/// Codeword counts. 128 bits leaves room for the moment sums.
using Count = boost::multiprecision::checked_int128_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const Count& c) { return c.str(); }

inline Count parse_count(const std::string& s) {
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty count");
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw Error(ErrorCode::ParseError, "bad count '" + s + "'");
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw Error(ErrorCode::ParseError, "bad count '" + s + "'");
  }
  return Count(s);
}

inline Rational rational_pow(const Rational& base, long exponent) {
  Rational result = 1;
  Rational b = exponent < 0 ? Rational(1) / base : base;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  while (e) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1u;
  }
  return result;
}

/// Integer power p^e; negative exponents give exact fractions.
inline Rational pow_q(long base, long exponent) { return rational_pow(Rational(base), exponent); }

inline int neg_one_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

inline bool is_integral(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

inline Count to_count(const Rational& r, ErrorCode onFractional = ErrorCode::NonIntegralCount) {
  if (!is_integral(r)) throw Error(onFractional, "value " + r.str() + " is not an integer");
  return static_cast<Count>(boost::multiprecision::numerator(r));
}

}  // namespace shortcode
