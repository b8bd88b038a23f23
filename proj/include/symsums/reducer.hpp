#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symsums/generator.hpp"
#include "symsums/verifier.hpp"

namespace symsums {

enum class RemovalReason { zero, cross_pair };

inline const char* to_string(RemovalReason reason) {
  return reason == RemovalReason::zero ? "zero" : "cross-pair";
}

template <ScalarDomain S>
struct RemovedEntry {
  S value;
  // zeros: total elements dropped (both sides); cross-pairs: occurrences
  // removed from each side.
  std::size_t count = 0;
  RemovalReason reason = RemovalReason::zero;
};

/// Power-sum identity left over after deleting zeros and/or values present on
/// both sides. Side lengths may differ and the symmetry of the source pair is
/// no longer visible in the record.
template <ScalarDomain S>
struct ReducedIdentity {
  std::vector<S> left, right;
  int max_power = 0;
  std::vector<RemovedEntry<S>> removed;
  SolutionPair<S> source;
};

struct ReduceOptions {
  bool remove_zeros = true;
  bool remove_cross_pairs = true;
};

namespace detail {

template <ScalarDomain S>
std::size_t erase_value(std::vector<S>& side, const S& value, std::size_t at_most) {
  std::size_t removed = 0;
  std::vector<S> kept;
  kept.reserve(side.size());
  for (S& v : side) {
    if (removed < at_most && scalar_eq(v, value))
      ++removed;
    else
      kept.push_back(std::move(v));
  }
  side = std::move(kept);
  return removed;
}

template <ScalarDomain S>
std::size_t count_value(const std::vector<S>& side, const S& value) {
  std::size_t n = 0;
  for (const S& v : side)
    if (scalar_eq(v, value)) ++n;
  return n;
}

// Zero removal is sound for powers >= 1 only; cardinality is not preserved.
// Cross-pair cancellation removes min(multiplicity) occurrences of each
// common value from both sides, earliest occurrences first, so the result is
// order-independent as a multiset and survivors keep their relative order.
template <ScalarDomain S>
void reduce_in_place(std::vector<S>& left, std::vector<S>& right, const ReduceOptions& options,
                     std::vector<RemovedEntry<S>>& removed) {
  if (options.remove_zeros) {
    const S zero = make_scalar<S>(0);
    const std::size_t dropped =
        erase_value(left, zero, left.size()) + erase_value(right, zero, right.size());
    if (dropped > 0) removed.push_back({zero, dropped, RemovalReason::zero});
  }
  if (options.remove_cross_pairs) {
    for (const S& v : distinct_values(left)) {
      if (is_zero(v) && options.remove_zeros) continue;
      const std::size_t pairs = std::min(count_value(left, v), count_value(right, v));
      if (pairs == 0) continue;
      erase_value(left, v, pairs);
      erase_value(right, v, pairs);
      removed.push_back({v, pairs, RemovalReason::cross_pair});
    }
  }
}

template <ScalarDomain S>
void check_still_identity(const std::vector<S>& left, const std::vector<S>& right,
                          int max_power) {
  const auto report = verify_lists(left, right, max_power);
  if (!report.pass)
    throw std::logic_error("reduction broke a power identity: this is a bug");
}

} // namespace detail

/// Reduction on bare sides; re-verifies all powers 1..max_power before
/// returning. Exposed so that reduced identities can be reduced again (the
/// operation is idempotent).
template <ScalarDomain S>
ReducedIdentity<S> reduce_values(std::vector<S> left, std::vector<S> right, int max_power,
                                 const ReduceOptions& options = {}) {
  ReducedIdentity<S> result;
  result.max_power = max_power;
  detail::reduce_in_place(left, right, options, result.removed);
  detail::check_still_identity(left, right, max_power);
  result.left = std::move(left);
  result.right = std::move(right);
  return result;
}

/// Full reduction of a verified pair. In the approx domain, cancellation uses
/// tolerance equality, which can cancel values that are only approximately
/// equal; exactness claims then no longer apply.
template <ScalarDomain S>
ReducedIdentity<S> reduce(const SolutionPair<S>& pair, const ReduceOptions& options = {}) {
  if (!verify_system(pair).pass)
    throw Error("reduce: the input pair fails verification");
  ReducedIdentity<S> result = reduce_values(pair.xs, pair.ys, pair.level, options);
  result.source = pair;
  return result;
}

/// Step-limited mode: removes exactly one occurrence of each listed value
/// from each side (each must be present on both), nothing else.
template <ScalarDomain S>
ReducedIdentity<S> reduce_listed(const SolutionPair<S>& pair, const std::vector<S>& values) {
  if (!verify_system(pair).pass)
    throw Error("reduce: the input pair fails verification");
  ReducedIdentity<S> result;
  result.max_power = pair.level;
  result.source = pair;
  result.left = pair.xs;
  result.right = pair.ys;
  for (const S& v : values) {
    if (detail::count_value(result.left, v) == 0 || detail::count_value(result.right, v) == 0)
      throw DomainError("value " + render(v) + " does not occur on both sides");
    detail::erase_value(result.left, v, 1);
    detail::erase_value(result.right, v, 1);
    result.removed.push_back({v, 1, RemovalReason::cross_pair});
  }
  detail::check_still_identity(result.left, result.right, result.max_power);
  return result;
}

} // namespace symsums
