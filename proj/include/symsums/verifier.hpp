#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "symsums/generator.hpp"
#include "symsums/report.hpp"
#include "symsums/scalar.hpp"

namespace symsums {

template <ScalarDomain S>
S power_sum(std::span<const S> values, unsigned m) {
  S acc = make_scalar<S>(0);
  for (const S& v : values) acc = acc + pow_scalar(v, m);
  return acc;
}

template <ScalarDomain S>
S power_sum(const std::vector<S>& values, unsigned m) {
  return power_sum(std::span<const S>(values), m);
}

namespace detail {

template <ScalarDomain S>
CheckRecord compare_sums(int power, std::string range, const S& left, const S& right) {
  CheckRecord rec;
  rec.power = power;
  rec.range = std::move(range);
  rec.left = render(left);
  rec.right = render(right);
  rec.residual = render(S(left - right));
  rec.pass = scalar_eq(left, right);
  return rec;
}

inline std::string span_label(std::size_t from, std::size_t to) {
  return "[" + std::to_string(from) + ".." + std::to_string(to) + "]";
}

} // namespace detail

/// Power-sum identities on two explicit value lists for powers 1..max_power.
/// This is the generic path used for systems loaded from files; sides may
/// have different lengths (reduced identities do).
template <ScalarDomain S>
VerificationReport verify_lists(const std::vector<S>& xs, const std::vector<S>& ys,
                                int max_power) {
  VerificationReport report;
  report.kind = "system";
  for (int m = 1; m <= max_power; ++m) {
    std::string range = xs.size() == ys.size()
                            ? "full" + detail::span_label(1, xs.size())
                            : "left" + detail::span_label(1, xs.size()) + " right" +
                                  detail::span_label(1, ys.size());
    report.add(detail::compare_sums(m, std::move(range),
                                    power_sum(xs, static_cast<unsigned>(m)),
                                    power_sum(ys, static_cast<unsigned>(m))));
  }
  return report;
}

/// Full-sequence identities for every power 1..n.
template <ScalarDomain S>
VerificationReport verify_system(const SolutionPair<S>& pair) {
  return verify_lists(pair.xs, pair.ys, pair.level);
}

/// Prefix identities: power m on the first 2^(m-1)*N elements of each side.
template <ScalarDomain S>
VerificationReport verify_pyramid(const SolutionPair<S>& pair) {
  VerificationReport report;
  report.kind = "pyramid";
  for (int m = 1; m <= pair.level; ++m) {
    const std::size_t theta = (std::size_t{1} << (m - 1)) * pair.base_width();
    std::span<const S> xs(pair.xs.data(), theta);
    std::span<const S> ys(pair.ys.data(), theta);
    report.add(detail::compare_sums(m, "prefix" + detail::span_label(1, theta),
                                    power_sum(xs, static_cast<unsigned>(m)),
                                    power_sum(ys, static_cast<unsigned>(m))));
  }
  return report;
}

/// Power-m identities on consecutive blocks of length 2^(m-1)*N at matching
/// positions, covering the whole sequence (full partition, no overrun).
template <ScalarDomain S>
VerificationReport verify_blocks(const SolutionPair<S>& pair, int m) {
  if (m < 1 || m > pair.level)
    throw DomainError("block power must lie in 1..n, got " + std::to_string(m));
  VerificationReport report;
  report.kind = "blocks";
  const std::size_t block = (std::size_t{1} << (m - 1)) * pair.base_width();
  const std::size_t count = pair.xs.size() / block;
  for (std::size_t p = 0; p < count; ++p) {
    std::span<const S> xs(pair.xs.data() + p * block, block);
    std::span<const S> ys(pair.ys.data() + p * block, block);
    report.add(detail::compare_sums(
        m, "block " + std::to_string(p) + detail::span_label(p * block + 1, (p + 1) * block),
        power_sum(xs, static_cast<unsigned>(m)), power_sum(ys, static_cast<unsigned>(m))));
  }
  return report;
}

/// verify_blocks for every power 1..n, merged into one report.
template <ScalarDomain S>
VerificationReport verify_blocks_all(const SolutionPair<S>& pair) {
  VerificationReport report;
  report.kind = "blocks";
  for (int m = 1; m <= pair.level; ++m)
    for (auto& rec : verify_blocks(pair, m).checks) report.add(std::move(rec));
  return report;
}

/// Running power sums Sx[l][t], Sy[l][t] over the level-l prefixes
/// (lengths 2^(l-1)*N) for all powers t = 0..n.
template <ScalarDomain S>
struct PowerSumTable {
  int level = 0;
  std::size_t base_width = 0;
  std::vector<std::vector<S>> sx, sy; // [level-1][power]

  const S& x_sum(int lvl, int power) const {
    return sx[static_cast<std::size_t>(lvl - 1)][static_cast<std::size_t>(power)];
  }
  const S& y_sum(int lvl, int power) const {
    return sy[static_cast<std::size_t>(lvl - 1)][static_cast<std::size_t>(power)];
  }
};

/// Builds the table level by level from the binomial recurrence
///   Sx[l][t] = Sx[l-1][t] + sum_{u=0}^{t} C(t,u) * k_l^(t-u) * Sy[l-1][u]
/// (and symmetrically for Sy); only the level-1 seed values are ever summed
/// directly, never the expanded sequences.
template <ScalarDomain S>
PowerSumTable<S> build_power_sum_table(const SolutionPair<S>& pair) {
  const int n = pair.level;
  PowerSumTable<S> table;
  table.level = n;
  table.base_width = pair.base_width();

  const std::size_t width = pair.base_width();
  std::vector<S> sx0, sy0;
  std::span<const S> xs1(pair.xs.data(), width);
  std::span<const S> ys1(pair.ys.data(), width);
  for (int t = 0; t <= n; ++t) {
    sx0.push_back(t == 0 ? make_scalar<S>(static_cast<long long>(width))
                         : power_sum(xs1, static_cast<unsigned>(t)));
    sy0.push_back(t == 0 ? make_scalar<S>(static_cast<long long>(width))
                         : power_sum(ys1, static_cast<unsigned>(t)));
  }
  table.sx.push_back(std::move(sx0));
  table.sy.push_back(std::move(sy0));

  for (int lvl = 2; lvl <= n; ++lvl) {
    const S& k = pair.shifts[static_cast<std::size_t>(lvl - 1)];
    const auto& px = table.sx.back();
    const auto& py = table.sy.back();
    std::vector<S> nx, ny;
    for (int t = 0; t <= n; ++t) {
      S cross_x = make_scalar<S>(0);
      S cross_y = make_scalar<S>(0);
      for (int u = 0; u <= t; ++u) {
        const S coeff = make_scalar<S>(binomial(static_cast<unsigned>(t),
                                                static_cast<unsigned>(u))) *
                        pow_scalar(k, static_cast<unsigned>(t - u));
        cross_x = cross_x + coeff * py[static_cast<std::size_t>(u)];
        cross_y = cross_y + coeff * px[static_cast<std::size_t>(u)];
      }
      nx.push_back(px[static_cast<std::size_t>(t)] + cross_x);
      ny.push_back(py[static_cast<std::size_t>(t)] + cross_y);
    }
    table.sx.push_back(std::move(nx));
    table.sy.push_back(std::move(ny));
  }
  return table;
}

/// Recursive table vs direct summation, at every level and power.
template <ScalarDomain S>
VerificationReport verify_power_sum_table(const SolutionPair<S>& pair) {
  VerificationReport report;
  report.kind = "recursive-vs-direct";
  const PowerSumTable<S> table = build_power_sum_table(pair);
  for (int lvl = 1; lvl <= pair.level; ++lvl) {
    const std::size_t prefix = (std::size_t{1} << (lvl - 1)) * pair.base_width();
    std::span<const S> xs(pair.xs.data(), prefix);
    std::span<const S> ys(pair.ys.data(), prefix);
    for (int t = 0; t <= pair.level; ++t) {
      const S direct_x = t == 0 ? make_scalar<S>(static_cast<long long>(prefix))
                                : power_sum(xs, static_cast<unsigned>(t));
      const S direct_y = t == 0 ? make_scalar<S>(static_cast<long long>(prefix))
                                : power_sum(ys, static_cast<unsigned>(t));
      report.add(detail::compare_sums(t, "x level " + std::to_string(lvl),
                                      table.x_sum(lvl, t), direct_x));
      report.add(detail::compare_sums(t, "y level " + std::to_string(lvl),
                                      table.y_sum(lvl, t), direct_y));
    }
  }
  return report;
}

/// First-power closed form for a two-term base:
///   M^1 = 2^(n-1) * (a + b + 2*k_1 + k_2 + ... + k_n),
/// plus the evenness corollary when the bracket is an integer and n >= 2
/// (for n = 1, M^1 equals the bracket itself and may be odd).
template <ScalarDomain S>
VerificationReport check_parity(const SolutionPair<S>& pair) {
  if (pair.base_width() != 2)
    throw DomainError("the first-power closed form is stated for N = 2 bases only");
  VerificationReport report;
  report.kind = "parity";

  S bracket = pair.base.left[0] + pair.base.left[1] + pair.shifts[0] + pair.shifts[0];
  for (std::size_t i = 1; i < pair.shifts.size(); ++i) bracket = bracket + pair.shifts[i];
  const S closed = make_scalar<S>(BigInt(1) << (pair.level - 1)) * bracket;
  const S direct = power_sum(pair.xs, 1);
  report.add(detail::compare_sums(1, "closed form", direct, closed));

  const auto bracket_int = as_integer(bracket);
  if (bracket_int && pair.level >= 2) {
    const auto m1 = as_integer(direct);
    CheckRecord rec;
    rec.power = 1;
    rec.range = "evenness";
    rec.left = m1 ? (*m1 % 2).str() : render(direct);
    rec.right = "0";
    rec.pass = m1.has_value() && *m1 % 2 == 0;
    rec.residual = rec.pass ? "0" : "1";
    report.add(std::move(rec));
  }
  return report;
}

/// Distinct-value-set equality of the two sides (guaranteed when some
/// k_i = 0, i >= 2). Vacuous when no such shift exists.
template <ScalarDomain S>
VerificationReport check_value_containment(const SolutionPair<S>& pair) {
  VerificationReport report;
  report.kind = "value-containment";
  bool applicable = false;
  for (std::size_t i = 1; i < pair.shifts.size(); ++i)
    if (is_zero(pair.shifts[i])) applicable = true;

  CheckRecord rec;
  rec.power = 0;
  if (!applicable) {
    rec.range = "no zero shift beyond k_1; nothing to check";
    rec.left = rec.right = "-";
    rec.residual = "0";
    rec.pass = true;
  } else {
    const auto dx = distinct_values(pair.xs);
    const auto dy = distinct_values(pair.ys);
    rec.range = "distinct value sets";
    rec.left = std::to_string(dx.size()) + " values";
    rec.right = std::to_string(dy.size()) + " values";
    rec.pass = multiset_equal(dx, dy);
    rec.residual = rec.pass ? "0" : "set mismatch";
  }
  report.add(std::move(rec));
  return report;
}

} // namespace symsums
