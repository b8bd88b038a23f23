#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

namespace symsums {

inline constexpr double kDefaultTolerance = 1e-9;

/// Double-precision fallback domain for inputs with no exact representation.
/// Equality is relative: |u - v| <= tol * max(1, |u|, |v|). Arithmetic
/// propagates the larger tolerance of the two operands, so exact constants
/// (tolerance 0) never tighten a comparison.
struct Approx {
  double value = 0.0;
  double tolerance = 0.0;

  Approx() = default;
  explicit Approx(double v, double tol = 0.0) : value(v), tolerance(tol) {}

  friend Approx operator-(const Approx& a) { return Approx(-a.value, a.tolerance); }
  friend Approx operator+(const Approx& a, const Approx& b) {
    return Approx(a.value + b.value, std::max(a.tolerance, b.tolerance));
  }
  friend Approx operator-(const Approx& a, const Approx& b) {
    return Approx(a.value - b.value, std::max(a.tolerance, b.tolerance));
  }
  friend Approx operator*(const Approx& a, const Approx& b) {
    return Approx(a.value * b.value, std::max(a.tolerance, b.tolerance));
  }
};

inline bool scalar_eq(const Approx& a, const Approx& b) {
  const double tol = std::max(a.tolerance, b.tolerance);
  const double scale = std::max({1.0, std::fabs(a.value), std::fabs(b.value)});
  return std::fabs(a.value - b.value) <= tol * scale;
}

inline bool scalar_less(const Approx& a, const Approx& b) { return a.value < b.value; }

inline bool is_zero(const Approx& v) { return scalar_eq(v, Approx(0.0)); }

inline Approx pow_scalar(const Approx& base, unsigned m) {
  Approx result(1.0, base.tolerance);
  for (unsigned i = 0; i < m; ++i) result = result * base;
  return result;
}

inline std::string render(const Approx& v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v.value);
  (void)ec;
  return std::string(buf, ptr);
}

inline double to_double(const Approx& v) { return v.value; }

} // namespace symsums
