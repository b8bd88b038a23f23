#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace symsums {

namespace mp = boost::multiprecision;

/// Arbitrary-precision signed integer (expression templates off so that
/// arithmetic yields plain values, which generic code relies on).
using BigInt = mp::number<mp::cpp_int_backend<>, mp::et_off>;

/// Binomial coefficient C(n, k) by the multiplicative recurrence
/// C(n, k) = C(n, k-1) * (n - k + 1) / k; every intermediate is integral.
inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - i + 1;
    result /= i;
  }
  return result;
}

inline BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

} // namespace symsums
