#include "symsums/prouhet.hpp"

#include <bit>
#include <stdexcept>

#include "symsums/bigint.hpp"
#include "symsums/errors.hpp"

namespace symsums {

bool thue_morse_bit(std::uint64_t position) {
  return std::popcount(position - 1) % 2 == 0;
}

std::vector<int> thue_morse(std::size_t length) {
  if (length < 1) throw DomainError("sequence length must be >= 1");
  std::vector<int> bits;
  bits.reserve(length);
  for (std::size_t i = 1; i <= length; ++i) bits.push_back(thue_morse_bit(i) ? 1 : 0);
  return bits;
}

ProuhetSplit prouhet_split(int n) {
  if (n < 1) throw DomainError("n must be >= 1");
  if (n > kDefaultMaxLevel)
    throw LimitError("n = " + std::to_string(n) + " exceeds the limit " +
                     std::to_string(kDefaultMaxLevel));
  ProuhetSplit split;
  split.n = n;
  const std::uint64_t length = std::uint64_t{1} << (n + 1);
  for (std::uint64_t i = 1; i <= length; ++i) {
    auto& group = thue_morse_bit(i) ? split.ones : split.zeros;
    group.push_back(static_cast<std::int64_t>(i));
  }

  for (int m = 1; m <= n; ++m) {
    BigInt left = 0, right = 0;
    for (auto v : split.ones) left += pow(BigInt(v), static_cast<unsigned>(m));
    for (auto v : split.zeros) right += pow(BigInt(v), static_cast<unsigned>(m));
    if (left != right)
      throw std::logic_error("Thue-Morse split failed a power identity: this is a bug");
  }
  return split;
}

std::pair<BaseIdentity<Rational>, std::vector<Rational>> prouhet_params(int n) {
  if (n < 1) throw DomainError("n must be >= 1");
  BaseIdentity<Rational> base;
  base.left = {Rational(1), Rational(4)};
  base.right = {Rational(2), Rational(3)};
  std::vector<Rational> shifts = {Rational(0)};
  for (int j = 2; j <= n; ++j) shifts.push_back(Rational(BigInt(1) << j));
  return {std::move(base), std::move(shifts)};
}

} // namespace symsums
