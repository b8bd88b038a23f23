#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "symsums/generator.hpp"
#include "symsums/rational.hpp"

namespace symsums {

/// 1-based Thue-Morse bit: position i carries 1 iff i-1 has even popcount.
bool thue_morse_bit(std::uint64_t position);

/// First `length` bits, 1-indexed (bits[0] is position 1).
std::vector<int> thue_morse(std::size_t length);

/// Partition of 1..2^(n+1) by Thue-Morse bits. Both groups have size 2^n and
/// equal power sums for every power 1..n (checked at construction).
struct ProuhetSplit {
  int n = 0;
  std::vector<std::int64_t> ones;  // positions with bit 1, ascending
  std::vector<std::int64_t> zeros; // positions with bit 0, ascending
};

ProuhetSplit prouhet_split(int n);

/// Generator parameters reproducing the split: base (1, 4 | 2, 3) and
/// shifts (0, 2^2, 2^3, ..., 2^n). Sorting the generated xs gives `ones`,
/// sorting ys gives `zeros`.
std::pair<BaseIdentity<Rational>, std::vector<Rational>> prouhet_params(int n);

} // namespace symsums
