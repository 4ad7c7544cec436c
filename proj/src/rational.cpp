#include "ksym/rational.hpp"

namespace ksym {

std::string to_string(const Rational& r) {
  const BigInt den = denominator_of(r);
  if (den == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + den.str();
}

BigInt round_nearest(const Rational& r) {
  const BigInt num = numerator_of(r);
  const BigInt den = denominator_of(r);
  const BigInt twice = 2 * abs(num) + den;
  BigInt q = twice / (2 * den);
  return num < 0 ? BigInt(-q) : q;
}

std::string to_decimal(const Rational& r, int digits) {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const BigInt scaled = round_nearest(r * Rational(scale));
  const bool negative = scaled < 0;
  std::string s = BigInt(abs(scaled)).str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1) - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + s : s;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace ksym
