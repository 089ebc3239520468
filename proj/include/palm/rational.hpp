#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace palm {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational arithmetic on arbitrary-precision integers. Values are kept
// in lowest terms with the sign on the numerator; comparison and equality are
// exact. cpp_rational maintains the canonical form on every operation.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rational_num(const Rational& r) {
  return boost::multiprecision::numerator(r);
}

inline BigInt rational_den(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

inline Rational make_rational(long long num, long long den) {
  return Rational(BigInt(num), BigInt(den));
}

inline const Rational& rational_min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}

inline bool is_integer(const Rational& r) { return rational_den(r) == 1; }

double to_double(const Rational& r);

std::string to_string(const Rational& r);

// Accepts "n", "n/d" and plain decimals such as "0.25" (converted exactly).
std::optional<Rational> parse_rational(const std::string& text);

}  // namespace palm
