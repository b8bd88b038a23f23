#pragma once

#include <random>
#include <string>
#include <vector>

#include "symsums/generator.hpp"
#include "symsums/scalar.hpp"

namespace testutil {

using namespace symsums;

inline Rational Q(const std::string& text) { return parse_rational(text); }
inline Surd SD(const std::string& text) { return parse_surd(text); }

inline std::vector<Rational> Qs(const std::vector<std::string>& texts) {
  std::vector<Rational> out;
  for (const auto& t : texts) out.push_back(Q(t));
  return out;
}

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int numer_bound = 9, int denom_bound = 6) {
  std::uniform_int_distribution<int> numer(-numer_bound, numer_bound);
  std::uniform_int_distribution<int> denom(1, denom_bound);
  return Rational(numer(rng), denom(rng));
}

inline std::vector<Rational> random_rationals(Rng& rng, std::size_t count) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_rational(rng));
  return out;
}

// Random valid base: the last right-hand term balances the sums.
inline BaseIdentity<Rational> random_base(Rng& rng, std::size_t width) {
  BaseIdentity<Rational> base;
  base.left = random_rationals(rng, width);
  base.right = random_rationals(rng, width - 1);
  const Rational balance = sum_scalars(base.left) - sum_scalars(base.right);
  base.right.push_back(balance);
  return base;
}

inline Surd random_surd(Rng& rng) {
  // ring Q[sqrt(2), sqrt(3)]
  std::map<Surd::Mask, Rational> coeffs;
  for (Surd::Mask mask = 0; mask < 4; ++mask) coeffs[mask] = random_rational(rng, 5, 3);
  return Surd({2, 3}, std::move(coeffs));
}

} // namespace testutil
