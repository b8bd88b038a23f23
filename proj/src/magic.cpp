#include "symsums/magic.hpp"

#include "symsums/prouhet.hpp"

namespace symsums {

std::array<std::optional<int>, 16> thue_morse_half_square() {
  std::array<std::optional<int>, 16> boxes;
  for (int i = 1; i <= 16; ++i)
    if (!thue_morse_bit(static_cast<std::uint64_t>(i))) boxes[static_cast<std::size_t>(i - 1)] = i;
  return boxes;
}

MagicSquare<Rational> thue_morse_square() {
  const auto half = thue_morse_half_square();
  MagicSquare<Rational> square;
  for (int i = 1; i <= 16; ++i) {
    const auto idx = static_cast<std::size_t>(i - 1);
    const int value = half[idx] ? *half[idx] : 17 - i; // countdown pass
    square.entries[idx / 4][idx % 4] = Rational(value);
  }
  square.magic_sum = Rational(34);
  return square;
}

} // namespace symsums
