#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symsums/approx.hpp"
#include "symsums/bigint.hpp"
#include "symsums/errors.hpp"
#include "symsums/rational.hpp"
#include "symsums/surd.hpp"

namespace symsums {

struct ParseOptions {
  double tolerance = kDefaultTolerance; // approx domain only
};

// Defined in src/parse.cpp. The grammar is shared by CLI flags, JSON fields
// and CSV cells: signed decimal literal, fraction "p/q", or (surd/approx) a
// +/-/* expression over those and sqrt(m).
Rational parse_rational(std::string_view text);
Surd parse_surd(std::string_view text);
Approx parse_approx(std::string_view text, const ParseOptions& options = {});

template <typename S>
struct ScalarTraits; // specialized per domain below

template <>
struct ScalarTraits<Rational> {
  static constexpr const char* name = "rational";
  static constexpr bool exact = true;
  static Rational parse(std::string_view text, const ParseOptions& = {}) {
    return parse_rational(text);
  }
  static Rational from_integer(const BigInt& v) { return Rational(v); }
};

template <>
struct ScalarTraits<Surd> {
  static constexpr const char* name = "surd";
  static constexpr bool exact = true;
  static Surd parse(std::string_view text, const ParseOptions& = {}) {
    return parse_surd(text);
  }
  static Surd from_integer(const BigInt& v) { return Surd(Rational(v)); }
};

template <>
struct ScalarTraits<Approx> {
  static constexpr const char* name = "approx";
  static constexpr bool exact = false;
  static Approx parse(std::string_view text, const ParseOptions& options = {}) {
    return parse_approx(text, options);
  }
  static Approx from_integer(const BigInt& v) {
    return Approx(v.convert_to<double>());
  }
};

template <typename S>
concept ScalarDomain = requires(const S& a, const S& b, unsigned m) {
  { S() } -> std::convertible_to<S>;
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { scalar_eq(a, b) } -> std::convertible_to<bool>;
  { scalar_less(a, b) } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { pow_scalar(a, m) } -> std::convertible_to<S>;
  { render(a) } -> std::convertible_to<std::string>;
  { ScalarTraits<S>::name } -> std::convertible_to<const char*>;
};

template <ScalarDomain S>
S make_scalar(const BigInt& v) {
  return ScalarTraits<S>::from_integer(v);
}

template <ScalarDomain S>
S make_scalar(long long v) {
  return ScalarTraits<S>::from_integer(BigInt(v));
}

/// The value as an exact integer, when it is one.
inline std::optional<BigInt> as_integer(const Rational& v) {
  if (denominator(v) == 1) return numerator(v);
  return std::nullopt;
}
inline std::optional<BigInt> as_integer(const Surd& v) {
  const auto q = v.as_rational();
  if (!q) return std::nullopt;
  return as_integer(*q);
}
inline std::optional<BigInt> as_integer(const Approx& v) {
  const double rounded = std::nearbyint(v.value);
  if (scalar_eq(v, Approx(rounded))) return BigInt(static_cast<long long>(rounded));
  return std::nullopt;
}

/// Fixes a common ring across a batch of values. Only the surd domain has
/// work to do: every value is embedded in the union of all radicand sets.
template <ScalarDomain S>
void unify_scalars(std::span<S*> values) {
  if constexpr (std::same_as<S, Surd>) {
    std::vector<std::int64_t> all;
    for (const S* v : values) {
      std::vector<std::int64_t> merged;
      std::set_union(all.begin(), all.end(), v->radicands().begin(), v->radicands().end(),
                     std::back_inserter(merged));
      all = std::move(merged);
    }
    for (S* v : values) *v = v->embedded_in(all);
  } else {
    (void)values;
  }
}

template <ScalarDomain S>
S sum_scalars(std::span<const S> values) {
  S acc = make_scalar<S>(0);
  for (const S& v : values) acc = acc + v;
  return acc;
}

template <ScalarDomain S>
S sum_scalars(const std::vector<S>& values) {
  return sum_scalars(std::span<const S>(values));
}

/// Multiset equality under the domain's equality (O(n^2) pairwise matching;
/// tolerance equality in the approx domain makes sorting unreliable there).
template <ScalarDomain S>
bool multiset_equal(const std::vector<S>& a, const std::vector<S>& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const S& x : a) {
    bool matched = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && scalar_eq(x, b[j])) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

template <ScalarDomain S>
std::vector<S> sorted_scalars(std::vector<S> values) {
  std::sort(values.begin(), values.end(),
            [](const S& a, const S& b) { return scalar_less(a, b); });
  return values;
}

/// Distinct values of a sequence (first occurrence kept, order preserved).
template <ScalarDomain S>
std::vector<S> distinct_values(const std::vector<S>& values) {
  std::vector<S> out;
  for (const S& v : values) {
    bool seen = false;
    for (const S& u : out) {
      if (scalar_eq(u, v)) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(v);
  }
  return out;
}

template <ScalarDomain S>
std::vector<std::string> render_all(const std::vector<S>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const S& v : values) out.push_back(render(v));
  return out;
}

} // namespace symsums
