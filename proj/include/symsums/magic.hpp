#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "symsums/report.hpp"
#include "symsums/scalar.hpp"

namespace symsums {

/// 4x4 grid whose row, column and main-diagonal sums all equal magic_sum.
template <ScalarDomain S>
struct MagicSquare {
  std::array<std::array<S, 4>, 4> entries;
  S magic_sum;
};

/// Thue-Morse fill of a 4x4 square: counting boxes 1..16 in row-major order,
/// a box whose position carries bit 0 receives its own position number; the
/// rest are filled by the countdown 16..1 run over the same boxes (box i gets
/// 17 - i). The magic sum is 34.
MagicSquare<Rational> thue_morse_square();

/// The intermediate state after the first counting pass only: bit-0 boxes
/// hold their position, the rest are empty. Row-major, 0-indexed.
std::array<std::optional<int>, 16> thue_morse_half_square();

/// The fully parametric square over any a + b = c + d and any k1, k2:
///   d+k1+k2  a        b        c+k1+k2
///   c+k1     b+k2     a+k2     d+k1
///   c+k2     b+k1     a+k1     d+k2
///   d        a+k1+k2  b+k1+k2  c
/// with magic sum 2*(a+b+k1+k2). Entries need not be distinct.
template <ScalarDomain S>
MagicSquare<S> parametric_square(S a, S b, S c, S d, S k1, S k2) {
  {
    std::array<S*, 6> params = {&a, &b, &c, &d, &k1, &k2};
    unify_scalars<S>(std::span<S*>(params.data(), params.size()));
  }
  const S left = a + b;
  const S right = c + d;
  if (!scalar_eq(left, right)) throw BaseIdentityError(render(left), render(right));

  MagicSquare<S> square{
      {{{d + k1 + k2, a, b, c + k1 + k2},
        {c + k1, b + k2, a + k2, d + k1},
        {c + k2, b + k1, a + k1, d + k2},
        {d, a + k1 + k2, b + k1 + k2, c}}},
      (a + b + k1 + k2) + (a + b + k1 + k2)};
  return square;
}

/// Checks all four rows, four columns and both main diagonals against the
/// claimed magic sum.
template <ScalarDomain S>
VerificationReport verify_magic(const MagicSquare<S>& square) {
  VerificationReport report;
  report.kind = "magic";
  auto line = [&](const std::string& label, const S& sum) {
    CheckRecord rec;
    rec.power = 1;
    rec.range = label;
    rec.left = render(sum);
    rec.right = render(square.magic_sum);
    rec.residual = render(S(sum - square.magic_sum));
    rec.pass = scalar_eq(sum, square.magic_sum);
    report.add(std::move(rec));
  };
  for (std::size_t r = 0; r < 4; ++r) {
    S sum = square.entries[r][0];
    for (std::size_t c = 1; c < 4; ++c) sum = sum + square.entries[r][c];
    line("row " + std::to_string(r + 1), sum);
  }
  for (std::size_t c = 0; c < 4; ++c) {
    S sum = square.entries[0][c];
    for (std::size_t r = 1; r < 4; ++r) sum = sum + square.entries[r][c];
    line("column " + std::to_string(c + 1), sum);
  }
  {
    S sum = square.entries[0][0];
    for (std::size_t i = 1; i < 4; ++i) sum = sum + square.entries[i][i];
    line("diagonal main", sum);
  }
  {
    S sum = square.entries[0][3];
    for (std::size_t i = 1; i < 4; ++i) sum = sum + square.entries[i][3 - i];
    line("diagonal anti", sum);
  }
  return report;
}

/// Parameters (a, b, c, d, k1, k2) whose parametric square reproduces
/// thue_morse_square entry by entry; matching the classical grid against the
/// template forces this assignment.
inline std::array<Rational, 6> classical_square_parameters() {
  return {Rational(2), Rational(3), Rational(1), Rational(4), Rational(4), Rational(8)};
}

/// The parameters of the Prouhet split (base 1,4 | 2,3 with shifts 4, 8).
/// They generate the same sixteen values but with the two sides' roles
/// exchanged, so the resulting square is not the classical fill entrywise.
inline std::array<Rational, 6> prouhet_square_parameters() {
  return {Rational(1), Rational(4), Rational(2), Rational(3), Rational(4), Rational(8)};
}

/// Optional check: some parameter combinations repeat entries.
template <ScalarDomain S>
bool distinct_entries(const MagicSquare<S>& square) {
  std::vector<S> flat;
  for (const auto& row : square.entries)
    for (const S& v : row) flat.push_back(v);
  return distinct_values(flat).size() == flat.size();
}

} // namespace symsums
