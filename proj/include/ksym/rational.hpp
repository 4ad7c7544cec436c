#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ksym {

using BigInt = boost::multiprecision::cpp_int;
/// Always reduced, denominator positive.
using Rational = boost::multiprecision::cpp_rational;

inline Rational ratio(const BigInt& num, const BigInt& den) { return Rational(num, den); }

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);
/// Fixed-point decimal with `digits` fractional digits, rounded half away from zero.
std::string to_decimal(const Rational& r, int digits = 6);
double to_double(const Rational& r);

/// Nearest integer, ties away from zero.
BigInt round_nearest(const Rational& r);

}  // namespace ksym
