#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "symsums/scalar.hpp"

namespace symsums {

/// Two equal-sum tuples of N >= 2 scalars; the seed of every construction.
template <ScalarDomain S>
struct BaseIdentity {
  std::vector<S> left;  // a_1 .. a_N
  std::vector<S> right; // c_1 .. c_N
};

/// The doubling construction at some level n: |xs| = |ys| = 2^(n-1) * N,
/// equal power sums for every power 1..n, and the same identities on
/// prefixes of length 2^(m-1) * N (the pyramid). Element order is canonical
/// and significant: each extension appends the shifted opposite side after
/// the existing elements, in their old order, which is exactly what makes
/// the prefix and block statements positional.
template <ScalarDomain S>
struct SolutionPair {
  BaseIdentity<S> base;
  std::vector<S> shifts; // k_1 .. k_n
  int level = 0;         // n
  std::vector<S> xs, ys;

  std::size_t base_width() const { return base.left.size(); } // N
};

inline constexpr int kDefaultMaxLevel = 24;

namespace detail {

template <ScalarDomain S>
void unify_base_and_shifts(BaseIdentity<S>& base, std::vector<S>& shifts,
                           std::vector<S>* xs = nullptr, std::vector<S>* ys = nullptr) {
  std::vector<S*> all;
  for (auto& v : base.left) all.push_back(&v);
  for (auto& v : base.right) all.push_back(&v);
  for (auto& v : shifts) all.push_back(&v);
  if (xs)
    for (auto& v : *xs) all.push_back(&v);
  if (ys)
    for (auto& v : *ys) all.push_back(&v);
  unify_scalars<S>(std::span<S*>(all));
}

template <ScalarDomain S>
void validate_base(const BaseIdentity<S>& base) {
  if (base.left.size() < 2 || base.left.size() != base.right.size())
    throw DomainError("base identity needs two sides of equal length N >= 2");
  const S left_sum = sum_scalars(base.left);
  const S right_sum = sum_scalars(base.right);
  if (!scalar_eq(left_sum, right_sum))
    throw BaseIdentityError(render(left_sum), render(right_sum));
}

} // namespace detail

/// Level-1 pair: both sides of the base, shifted by k_1.
template <ScalarDomain S>
SolutionPair<S> seed(BaseIdentity<S> base, S k1) {
  SolutionPair<S> pair;
  pair.base = std::move(base);
  pair.shifts = {std::move(k1)};
  detail::unify_base_and_shifts(pair.base, pair.shifts);
  detail::validate_base(pair.base);
  pair.level = 1;
  const S& k = pair.shifts.front();
  pair.xs.reserve(pair.base.left.size());
  pair.ys.reserve(pair.base.right.size());
  for (const S& a : pair.base.left) pair.xs.push_back(a + k);
  for (const S& c : pair.base.right) pair.ys.push_back(c + k);
  return pair;
}

/// One doubling step: xs' = xs ++ (ys + k), ys' = ys ++ (xs + k).
template <ScalarDomain S>
SolutionPair<S> extend(const SolutionPair<S>& pair, S k) {
  SolutionPair<S> next = pair;
  next.shifts.push_back(std::move(k));
  detail::unify_base_and_shifts(next.base, next.shifts, &next.xs, &next.ys);
  const S& kn = next.shifts.back();
  const std::size_t old_size = next.xs.size();
  next.xs.reserve(2 * old_size);
  next.ys.reserve(2 * old_size);
  for (std::size_t j = 0; j < old_size; ++j) next.xs.push_back(next.ys[j] + kn);
  for (std::size_t j = 0; j < old_size; ++j) next.ys.push_back(next.xs[j] + kn);
  ++next.level;
  return next;
}

/// seed with k_1, then extend with k_2 .. k_n in order.
template <ScalarDomain S>
SolutionPair<S> generate(BaseIdentity<S> base, std::vector<S> shifts,
                         int max_level = kDefaultMaxLevel) {
  if (shifts.empty()) throw DomainError("at least one shift value is required");
  const int n = static_cast<int>(shifts.size());
  if (n > max_level)
    throw LimitError("level " + std::to_string(n) + " exceeds the limit " +
                     std::to_string(max_level) + " (sizes grow as 2^(n-1)*N)");
  SolutionPair<S> pair = seed(std::move(base), shifts.front());
  for (int i = 1; i < n; ++i) pair = extend(pair, shifts[static_cast<std::size_t>(i)]);
  return pair;
}

/// Distinct-value-set equality of the two sides; guaranteed whenever some
/// k_i = 0 with i >= 2, because that extension appends each side to the other.
template <ScalarDomain S>
bool value_sets_equal(const SolutionPair<S>& pair) {
  const auto dx = distinct_values(pair.xs);
  const auto dy = distinct_values(pair.ys);
  return multiset_equal(dx, dy);
}

} // namespace symsums
