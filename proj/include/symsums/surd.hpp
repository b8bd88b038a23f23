#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symsums/errors.hpp"
#include "symsums/rational.hpp"

namespace symsums {

/// Element of the multi-quadratic ring Q[sqrt(r) : r in R] for a fixed set R
/// of distinct square-free integers > 1. A value is a rational combination of
/// the basis elements prod_{r in S} sqrt(r), one per subset S of R; subsets
/// are stored as bitmasks over the sorted radicand list, and absent masks
/// mean coefficient zero.
///
/// Products stay in the ring: sqrt-factors common to both operands square
/// into the integer prod_{r in (S and T)} r, the rest combine by symmetric
/// difference. The ring parameter R never grows implicitly: binary operations
/// accept operands whose radicand sets are equal or nested (the smaller side
/// embeds), and reject incomparable sets. Construction-time helpers
/// (unify_scalars) fix a common R up front as the union over all inputs.
class Surd {
public:
  using Mask = std::uint64_t;
  static constexpr std::size_t kMaxRadicands = 32;

  Surd() = default;

  explicit Surd(Rational value) {
    if (!value.is_zero()) coefficients_[0] = std::move(value);
  }

  /// sqrt(m) for square-free m > 1.
  static Surd sqrt_of(std::int64_t m) {
    check_radicand(m);
    Surd s;
    s.radicands_ = {m};
    s.coefficients_[1] = 1;
    return s;
  }

  Surd(std::vector<std::int64_t> radicands, std::map<Mask, Rational> coefficients)
      : radicands_(std::move(radicands)), coefficients_(std::move(coefficients)) {
    if (radicands_.size() > kMaxRadicands)
      throw DomainError("too many radicands (limit " + std::to_string(kMaxRadicands) + ")");
    for (std::size_t i = 0; i < radicands_.size(); ++i) {
      check_radicand(radicands_[i]);
      if (i > 0 && radicands_[i - 1] >= radicands_[i])
        throw DomainError("radicands must be strictly increasing");
    }
    const Mask all = full_mask(radicands_.size());
    for (const auto& [mask, coeff] : coefficients_) {
      (void)coeff;
      if ((mask & ~all) != 0) throw DomainError("coefficient mask outside the radicand set");
    }
    prune_zeros();
  }

  const std::vector<std::int64_t>& radicands() const { return radicands_; }
  const std::map<Mask, Rational>& coefficients() const { return coefficients_; }

  bool is_zero() const { return coefficients_.empty(); }

  /// The value as a Rational if its support is the empty subset only.
  std::optional<Rational> as_rational() const {
    if (coefficients_.empty()) return Rational(0);
    if (coefficients_.size() == 1 && coefficients_.begin()->first == 0)
      return coefficients_.begin()->second;
    return std::nullopt;
  }

  /// Re-roots the value in a superset ring (masks are remapped).
  Surd embedded_in(const std::vector<std::int64_t>& superset) const {
    if (superset == radicands_) return *this;
    if (!std::includes(superset.begin(), superset.end(), radicands_.begin(), radicands_.end()))
      throw DomainError("embedding target does not contain the value's radicands");
    Surd out;
    out.radicands_ = superset;
    if (out.radicands_.size() > kMaxRadicands)
      throw DomainError("too many radicands (limit " + std::to_string(kMaxRadicands) + ")");
    std::vector<unsigned> bit_of(radicands_.size());
    for (std::size_t i = 0; i < radicands_.size(); ++i) {
      const auto it = std::lower_bound(superset.begin(), superset.end(), radicands_[i]);
      bit_of[i] = static_cast<unsigned>(it - superset.begin());
    }
    for (const auto& [mask, coeff] : coefficients_) {
      Mask remapped = 0;
      for (std::size_t i = 0; i < radicands_.size(); ++i)
        if (mask & (Mask{1} << i)) remapped |= Mask{1} << bit_of[i];
      out.coefficients_[remapped] = coeff;
    }
    return out;
  }

  friend Surd operator-(const Surd& s) {
    Surd out = s;
    for (auto& [mask, coeff] : out.coefficients_) {
      (void)mask;
      coeff = -coeff;
    }
    return out;
  }

  friend Surd operator+(const Surd& a, const Surd& b) {
    auto [x, y] = aligned(a, b);
    for (const auto& [mask, coeff] : y.coefficients_) x.coefficients_[mask] += coeff;
    x.prune_zeros();
    return x;
  }

  friend Surd operator-(const Surd& a, const Surd& b) { return a + (-b); }

  friend Surd operator*(const Surd& a, const Surd& b) {
    auto [x, y] = aligned(a, b);
    Surd out;
    out.radicands_ = x.radicands_;
    for (const auto& [ma, ca] : x.coefficients_) {
      for (const auto& [mb, cb] : y.coefficients_) {
        Rational term = ca * cb;
        Mask common = ma & mb;
        if (common) {
          BigInt squared = 1;
          for (std::size_t i = 0; i < x.radicands_.size(); ++i)
            if (common & (Mask{1} << i)) squared *= x.radicands_[i];
          term *= Rational(squared);
        }
        out.coefficients_[ma ^ mb] += term;
      }
    }
    out.prune_zeros();
    return out;
  }

  /// Componentwise comparison through the union ring (read-only; neither
  /// operand changes, so the fixed-R rule is not violated).
  friend bool operator==(const Surd& a, const Surd& b) {
    if (a.radicands_ == b.radicands_) return a.coefficients_ == b.coefficients_;
    const auto common = union_radicands(a, b);
    return a.embedded_in(common).coefficients_ == b.embedded_in(common).coefficients_;
  }
  friend bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }

  static std::vector<std::int64_t> union_radicands(const Surd& a, const Surd& b) {
    std::vector<std::int64_t> out;
    std::set_union(a.radicands_.begin(), a.radicands_.end(), b.radicands_.begin(),
                   b.radicands_.end(), std::back_inserter(out));
    return out;
  }

  static bool is_square_free(std::int64_t m) {
    if (m <= 1) return false;
    for (std::int64_t p = 2; p * p <= m; ++p) {
      if (m % (p * p) == 0) return false;
    }
    return true;
  }

private:
  static void check_radicand(std::int64_t m) {
    if (m <= 1) throw DomainError("radicand must be an integer > 1, got " + std::to_string(m));
    if (!is_square_free(m))
      throw DomainError("radicand must be square-free, got " + std::to_string(m));
  }

  static Mask full_mask(std::size_t n) {
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  }

  // Operands must live in the same ring or nested rings; the smaller embeds.
  static std::pair<Surd, Surd> aligned(const Surd& a, const Surd& b) {
    if (a.radicands_ == b.radicands_) return {a, b};
    const auto& ra = a.radicands_;
    const auto& rb = b.radicands_;
    if (std::includes(ra.begin(), ra.end(), rb.begin(), rb.end()))
      return {a, b.embedded_in(ra)};
    if (std::includes(rb.begin(), rb.end(), ra.begin(), ra.end()))
      return {a.embedded_in(rb), b};
    throw DomainError("mixing values from different surd rings; fix a common ring first");
  }

  void prune_zeros() {
    for (auto it = coefficients_.begin(); it != coefficients_.end();) {
      if (it->second.is_zero())
        it = coefficients_.erase(it);
      else
        ++it;
    }
  }

  std::vector<std::int64_t> radicands_;
  std::map<Mask, Rational> coefficients_;
};

inline bool scalar_eq(const Surd& a, const Surd& b) { return a == b; }

inline bool is_zero(const Surd& v) { return v.is_zero(); }

inline Surd pow_scalar(const Surd& base, unsigned m) {
  Surd result{Rational(1)};
  Surd b = base;
  for (unsigned e = m; e != 0; e >>= 1) {
    if (e & 1u) result = result * b;
    if (e > 1) b = b * b;
  }
  return result;
}

inline std::string render(const Surd& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mask, coeff] : v.coefficients()) {
    const bool negative = coeff < 0;
    const Rational magnitude = negative ? Rational(-coeff) : coeff;
    std::string term;
    if (mask == 0) {
      term = render(magnitude);
    } else {
      std::string radicals;
      for (std::size_t i = 0; i < v.radicands().size(); ++i) {
        if (mask & (Surd::Mask{1} << i)) {
          if (!radicals.empty()) radicals += "*";
          radicals += "sqrt(" + std::to_string(v.radicands()[i]) + ")";
        }
      }
      term = (magnitude == 1) ? radicals : render(magnitude) + "*" + radicals;
    }
    if (first) {
      out = negative ? "-" + term : term;
      first = false;
    } else {
      out += negative ? "-" + term : "+" + term;
    }
  }
  return out;
}

/// Representational order: total, consistent with equality, not numeric.
inline bool scalar_less(const Surd& a, const Surd& b) { return render(a) < render(b); }

inline double to_double(const Surd& v) {
  double sum = 0.0;
  for (const auto& [mask, coeff] : v.coefficients()) {
    double factor = 1.0;
    for (std::size_t i = 0; i < v.radicands().size(); ++i)
      if (mask & (Surd::Mask{1} << i)) factor *= std::sqrt(static_cast<double>(v.radicands()[i]));
    sum += to_double(coeff) * factor;
  }
  return sum;
}

} // namespace symsums
