#pragma once

#include <bit>
#include <cstddef>
#include <vector>

#include "symsums/generator.hpp"
#include "symsums/report.hpp"
#include "symsums/scalar.hpp"
#include "symsums/verifier.hpp"

namespace symsums {

/// Inputs of the subset construction: four letters with a + b = c + d and n
/// free values k_1..k_n. Note the level convention: n subset values produce
/// sides of size 2^(n+1) satisfying powers 1..n+1, i.e. they correspond to
/// the doubling construction at level n+1 whose first shift is a pure
/// translation of the letters.
template <ScalarDomain S>
struct SubsetAssignment {
  S a, b, c, d;
  std::vector<S> ks;
};

template <ScalarDomain S>
struct SubsetPair {
  std::vector<S> xs, ys; // each of size 2^(n+1)
};

namespace detail {

template <ScalarDomain S>
std::vector<S> subset_sums(const std::vector<S>& ks) {
  const std::size_t n = ks.size();
  std::vector<S> sums(std::size_t{1} << n, make_scalar<S>(0));
  for (std::size_t mask = 1; mask < sums.size(); ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    sums[mask] = sums[mask & (mask - 1)] + ks[low];
  }
  return sums;
}

} // namespace detail

/// X takes a and b over even subsets and c and d over odd ones; Y the
/// complementary parities. Equal power sums hold for powers 1..n+1.
template <ScalarDomain S>
SubsetPair<S> subset_pair(SubsetAssignment<S> assignment) {
  if (assignment.ks.size() > 20)
    throw LimitError("subset construction limited to 20 values (sides grow as 2^(n+1))");
  {
    std::vector<S*> all = {&assignment.a, &assignment.b, &assignment.c, &assignment.d};
    for (auto& k : assignment.ks) all.push_back(&k);
    unify_scalars<S>(std::span<S*>(all));
  }
  const S ab = assignment.a + assignment.b;
  const S cd = assignment.c + assignment.d;
  if (!scalar_eq(ab, cd)) throw BaseIdentityError(render(ab), render(cd));

  const auto sums = detail::subset_sums(assignment.ks);
  SubsetPair<S> out;
  out.xs.reserve(2 * sums.size());
  out.ys.reserve(2 * sums.size());
  for (std::size_t mask = 0; mask < sums.size(); ++mask) {
    const bool even = std::popcount(mask) % 2 == 0;
    const S& sum = sums[mask];
    auto& even_side = even ? out.xs : out.ys; // receives a and b
    auto& odd_side = even ? out.ys : out.xs;  // receives c and d
    even_side.push_back(assignment.a + sum);
    even_side.push_back(assignment.b + sum);
    odd_side.push_back(assignment.c + sum);
    odd_side.push_back(assignment.d + sum);
  }
  return out;
}

/// Direct evaluation of the alternating sum
///   f(a,b) = sum_S (-1)^|S| [ (a + sum_S k)^m + (b + sum_S k)^m ]
/// over all 2^n subsets S of the k values.
template <ScalarDomain S>
S f_direct(const S& a, const S& b, unsigned m, const std::vector<S>& ks) {
  if (ks.size() > 20) throw LimitError("direct evaluation limited to 20 values");
  const auto sums = detail::subset_sums(ks);
  S total = make_scalar<S>(0);
  for (std::size_t mask = 0; mask < sums.size(); ++mask) {
    const S term =
        pow_scalar(S(a + sums[mask]), m) + pow_scalar(S(b + sums[mask]), m);
    total = std::popcount(mask) % 2 == 0 ? total + term : total - term;
  }
  return total;
}

/// Closed form of f for m <= n+1 with n = |ks|:
///   0                                      if m < n
///   2 * (-1)^n * n! * k_1...k_n            if m = n
///   (-1)^n * (n+1)! * k_1...k_n * (a+b+sum k)   if m = n+1
/// The m = n coefficient carries the factor 2 contributed by a^0 + b^0;
/// sanity check n = 1, m = 1: f = a - (a+k) + b - (b+k) = -2k.
template <ScalarDomain S>
S f_closed_form(const S& a, const S& b, unsigned m, const std::vector<S>& ks) {
  const auto n = static_cast<unsigned>(ks.size());
  if (m > n + 1)
    throw DomainError("the closed form is stated for m <= n+1 only");
  if (m < n) return make_scalar<S>(0);

  S k_product = make_scalar<S>(1);
  for (const S& k : ks) k_product = k_product * k;
  const BigInt sign = n % 2 == 0 ? 1 : -1;
  if (m == n) return make_scalar<S>(sign * 2 * factorial(n)) * k_product;

  S k_sum = make_scalar<S>(0);
  for (const S& k : ks) k_sum = k_sum + k;
  return make_scalar<S>(sign * factorial(n + 1)) * k_product * (a + b + k_sum);
}

/// The doubling construction and the subset construction describe the same
/// multisets: level-n generate(base, (k_1..k_n)) matches the subset pair with
/// letters translated by k_1 and subset values (k_2..k_n).
template <ScalarDomain S>
VerificationReport equivalence_check(const BaseIdentity<S>& base, const std::vector<S>& shifts,
                                     int max_level = kDefaultMaxLevel) {
  if (base.left.size() != 2)
    throw DomainError("the subset construction is stated for N = 2 bases only");
  if (shifts.empty()) throw DomainError("at least one shift value is required");

  const SolutionPair<S> pair = generate(base, shifts, max_level);
  SubsetAssignment<S> assignment;
  const S& k1 = pair.shifts.front();
  assignment.a = pair.base.left[0] + k1;
  assignment.b = pair.base.left[1] + k1;
  assignment.c = pair.base.right[0] + k1;
  assignment.d = pair.base.right[1] + k1;
  assignment.ks.assign(pair.shifts.begin() + 1, pair.shifts.end());
  const SubsetPair<S> subsets = subset_pair(std::move(assignment));

  VerificationReport report;
  report.kind = "equivalence";
  auto side = [&](const std::string& label, const std::vector<S>& generated,
                  const std::vector<S>& constructed) {
    CheckRecord rec;
    rec.power = 0;
    rec.range = label;
    rec.left = std::to_string(generated.size()) + " values";
    rec.right = std::to_string(constructed.size()) + " values";
    rec.pass = multiset_equal(generated, constructed);
    rec.residual = rec.pass ? "0" : "multiset mismatch";
    report.add(std::move(rec));
  };
  side("xs vs X", pair.xs, subsets.xs);
  side("ys vs Y", pair.ys, subsets.ys);
  return report;
}

} // namespace symsums
