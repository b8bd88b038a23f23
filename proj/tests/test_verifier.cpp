#include <doctest.h>

#include "symsums/verifier.hpp"
#include "testutil.hpp"

using namespace symsums;
using testutil::Q;
using testutil::Qs;

namespace {

SolutionPair<Rational> decimal_pair() { // levels (0, 1, -0.5) over -1+2.1 = 3.4-2.3
  return generate(BaseIdentity<Rational>{Qs({"-1", "2.1"}), Qs({"3.4", "-2.3"})},
                  Qs({"0", "1", "-0.5"}));
}

SolutionPair<Rational> integer_pair() { // levels (0, 1, -2, 3) over 1+3 = 2+2
  return generate(BaseIdentity<Rational>{Qs({"1", "3"}), Qs({"2", "2"})},
                  Qs({"0", "1", "-2", "3"}));
}

SolutionPair<Rational> three_term_pair() { // 1+3+7 = 2+4+5, shifts (0, -1, 1.3, -2.5)
  return generate(BaseIdentity<Rational>{Qs({"1", "3", "7"}), Qs({"2", "4", "5"})},
                  Qs({"0", "-1", "1.3", "-2.5"}));
}

std::vector<std::string> left_sums(const VerificationReport& report) {
  std::vector<std::string> out;
  for (const auto& rec : report.checks) out.push_back(rec.left);
  return out;
}

} // namespace

TEST_SUITE("verifier") {

TEST_CASE("power sums are exact") {
  const auto pair = decimal_pair();
  CHECK(power_sum(pair.xs, 3) == Q("111.136"));
  CHECK(power_sum(pair.xs, 1) == Q("6.4"));
  const std::vector<Rational> zeros(5, Rational(0));
  CHECK(power_sum(zeros, 7) == Rational(0));
  CHECK(power_sum(three_term_pair().xs, 4) == Q("9712.6972"));
}

TEST_CASE("the full system check reports the expected sums") {
  const auto report = verify_system(integer_pair());
  CHECK(report.pass);
  CHECK(report.kind == "system");
  CHECK(left_sums(report) == std::vector<std::string>{"48", "208", "1008", "5320"});
  for (const auto& rec : report.checks) {
    CHECK(rec.residual == "0");
    CHECK(rec.left == rec.right);
  }

  const auto decimal_report = verify_system(decimal_pair());
  CHECK(decimal_report.pass);
  CHECK(left_sums(decimal_report) ==
        std::vector<std::string>{"32/5", "1243/25", "13892/125"}); // 6.4, 49.72, 111.136
  CHECK(Q("49.72") == Q("1243/25"));

  const auto wide_report = verify_system(three_term_pair());
  CHECK(wide_report.pass);
  CHECK(power_sum(three_term_pair().xs, 1) == Q("61.6"));
  CHECK(power_sum(three_term_pair().xs, 2) == Q("305.08"));
  CHECK(power_sum(three_term_pair().xs, 3) == Q("1599.724"));
}

TEST_CASE("the pyramid check works on doubling prefixes") {
  const auto report = verify_pyramid(decimal_pair());
  CHECK(report.pass);
  CHECK(left_sums(report) ==
        std::vector<std::string>{"11/10", "1323/50", "13892/125"}); // 1.1, 26.46, 111.136

  const auto integer_report = verify_pyramid(integer_pair());
  CHECK(integer_report.pass);
  CHECK(left_sums(integer_report) == std::vector<std::string>{"4", "28", "90", "5320"});

  // any level-1 pair passes by the base identity
  const auto level1 = seed(BaseIdentity<Rational>{Qs({"5", "7"}), Qs({"2", "10"})}, Q("3"));
  CHECK(verify_pyramid(level1).pass);
}

TEST_CASE("level-2 system sums of the decimal example") {
  const auto pair = generate(BaseIdentity<Rational>{Qs({"-1", "2.1"}), Qs({"3.4", "-2.3"})},
                             Qs({"0", "1"}));
  const auto report = verify_system(pair);
  CHECK(report.pass);
  CHECK(left_sums(report) == std::vector<std::string>{"21/5", "1323/50"}); // 4.2, 26.46
}

TEST_CASE("block checks partition the whole sequence") {
  // power-2 block over indices 7..12 of the three-term pair sums to 144.54
  // on both sides (direct summation of the squared entries)
  const auto wide = three_term_pair();
  const auto block_report = verify_blocks(wide, 2);
  CHECK(block_report.pass);
  REQUIRE(block_report.checks.size() == 4); // 24 elements in blocks of 6
  CHECK(block_report.checks[1].range == "block 1[7..12]");
  CHECK(block_report.checks[1].left == render(Q("144.54")));
  CHECK(block_report.checks[1].right == render(Q("144.54")));

  // m = n is a single block and coincides with the system check at power n
  const auto pair = integer_pair();
  const auto top = verify_blocks(pair, 4);
  REQUIRE(top.checks.size() == 1);
  CHECK(top.checks[0].left == "5320");
  CHECK(top.pass);

  // m = 1 partitions the integer pair into eight equal-sum blocks of two
  const auto bottom = verify_blocks(pair, 1);
  REQUIRE(bottom.checks.size() == 8);
  CHECK(bottom.pass);
  for (std::size_t p = 0; p < 8; ++p) {
    const Rational direct =
        pair.xs[2 * p] + pair.xs[2 * p + 1] - pair.ys[2 * p] - pair.ys[2 * p + 1];
    CHECK(direct == 0);
  }

  CHECK(verify_blocks_all(pair).pass);
  CHECK_THROWS_AS((void)verify_blocks(pair, 0), DomainError);
  CHECK_THROWS_AS((void)verify_blocks(pair, 5), DomainError);
}

TEST_CASE("the recursive table matches direct summation") {
  const auto pair = integer_pair();
  const auto table = build_power_sum_table(pair);
  CHECK(table.x_sum(4, 1) == Rational(48));
  CHECK(table.x_sum(4, 2) == Rational(208));
  CHECK(table.x_sum(4, 3) == Rational(1008));
  CHECK(table.x_sum(4, 4) == Rational(5320));
  for (int lvl = 1; lvl <= 4; ++lvl)
    CHECK(table.x_sum(lvl, 0) == Rational(BigInt(1) << (lvl - 1)) * 2);

  const auto decimal_table = build_power_sum_table(decimal_pair());
  CHECK(decimal_table.x_sum(3, 3) == Q("111.136"));

  CHECK(verify_power_sum_table(pair).pass);
  CHECK(verify_power_sum_table(three_term_pair()).pass);
}

TEST_CASE("recursive table on random systems, with the levelwise identity") {
  testutil::Rng rng(606060);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t width = 2 + trial % 3;
    const int levels = 1 + static_cast<int>(rng() % 10);
    const auto pair =
        generate(testutil::random_base(rng, width),
                 testutil::random_rationals(rng, static_cast<std::size_t>(levels)));
    CHECK(verify_power_sum_table(pair).pass);
    const auto table = build_power_sum_table(pair);
    for (int lvl = 1; lvl <= levels; ++lvl)
      for (int t = 0; t <= lvl; ++t) CHECK(table.x_sum(lvl, t) == table.y_sum(lvl, t));
  }
}

TEST_CASE("the first-power closed form and its evenness corollary") {
  const auto integer_report = check_parity(integer_pair());
  CHECK(integer_report.pass);
  REQUIRE(integer_report.checks.size() == 2); // bracket 6 is an integer
  CHECK(integer_report.checks[0].left == "48");
  CHECK(integer_report.checks[0].right == "48");
  CHECK(integer_report.checks[1].range == "evenness");

  const auto decimal_report = check_parity(decimal_pair());
  CHECK(decimal_report.pass);
  REQUIRE(decimal_report.checks.size() == 1); // bracket 1.6 is not an integer
  CHECK(decimal_report.checks[0].left == "32/5"); // 6.4

  // a + b = 0 and all shifts zero: first-power sum 0, even
  const auto zero_pair = generate(BaseIdentity<Rational>{Qs({"1", "-1"}), Qs({"2", "-2"})},
                                  Qs({"0", "0"}));
  const auto zero_report = check_parity(zero_pair);
  CHECK(zero_report.pass);
  CHECK(zero_report.checks[0].left == "0");

  CHECK_THROWS_AS((void)check_parity(three_term_pair()), DomainError);
}

TEST_CASE("closed form on random two-term systems") {
  testutil::Rng rng(101010);
  for (int trial = 0; trial < 12; ++trial) {
    const int levels = 1 + static_cast<int>(rng() % 10);
    const auto pair =
        generate(testutil::random_base(rng, 2),
                 testutil::random_rationals(rng, static_cast<std::size_t>(levels)));
    CHECK(check_parity(pair).pass);
  }
}

TEST_CASE("value containment is vacuous without a zero shift") {
  const auto pair = generate(BaseIdentity<Rational>{Qs({"1", "3"}), Qs({"2", "2"})},
                             Qs({"5", "1", "-2"}));
  const auto report = check_value_containment(pair);
  CHECK(report.pass);
  CHECK(report.checks[0].range.find("nothing to check") != std::string::npos);

  const auto zero_shift_pair = generate(
      BaseIdentity<Rational>{Qs({"1", "3"}), Qs({"2", "2"})}, Qs({"5", "0", "-2"}));
  const auto applicable = check_value_containment(zero_shift_pair);
  CHECK(applicable.pass);
  CHECK(applicable.checks[0].range == "distinct value sets");
}

TEST_CASE("corrupting any element is caught") {
  const auto pair = integer_pair();
  testutil::Rng rng(31415);
  for (int trial = 0; trial < 6; ++trial) {
    auto corrupted = pair;
    const std::size_t index = rng() % corrupted.xs.size();
    corrupted.xs[index] += Rational(1 + static_cast<int>(rng() % 5), 3);
    const auto report = verify_system(corrupted);
    CHECK_FALSE(report.pass);
    CHECK_FALSE(report.checks.front().pass); // power 1 always breaks
    CHECK_FALSE(report.checks.back().pass);  // generic deltas break power n too
  }
}

TEST_CASE("approx systems verify within tolerance and report residuals") {
  ParseOptions options;
  BaseIdentity<Approx> base{{parse_approx("-1", options), parse_approx("2.1", options)},
                            {parse_approx("3.4", options), parse_approx("-2.3", options)}};
  const auto pair = generate(
      base, std::vector<Approx>{parse_approx("0", options), parse_approx("1", options),
                                parse_approx("-0.5", options)});
  const auto report = verify_system(pair);
  CHECK(report.pass);

  auto corrupted = pair;
  corrupted.xs[2] = corrupted.xs[2] + Approx(0.25);
  CHECK_FALSE(verify_system(corrupted).pass);
}

} // TEST_SUITE
