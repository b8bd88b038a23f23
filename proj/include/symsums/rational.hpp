#pragma once

#include <string>

#include "symsums/bigint.hpp"

namespace symsums {

/// Exact rational number, always stored reduced with positive denominator.
using Rational = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

inline bool scalar_eq(const Rational& a, const Rational& b) { return a == b; }
inline bool scalar_less(const Rational& a, const Rational& b) { return a < b; }

inline bool is_zero(const Rational& v) { return v.is_zero(); }

inline Rational pow_scalar(const Rational& base, unsigned m) {
  Rational result = 1;
  Rational b = base;
  for (unsigned e = m; e != 0; e >>= 1) {
    if (e & 1u) result *= b;
    if (e > 1) b *= b;
  }
  return result;
}

/// "n" for integers, "p/q" otherwise; round-trips through parsing.
inline std::string render(const Rational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

inline double to_double(const Rational& v) { return v.convert_to<double>(); }

} // namespace symsums
