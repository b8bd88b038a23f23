#include <doctest.h>

#include "symsums/appendix.hpp"
#include "symsums/prouhet.hpp"
#include "testutil.hpp"

using namespace symsums;
using testutil::Q;
using testutil::Qs;

TEST_SUITE("appendix") {

TEST_CASE("no subset values leaves the bare letters") {
  SubsetAssignment<Rational> assignment{Q("1"), Q("9"), Q("4"), Q("6"), {}};
  const auto pair = subset_pair(assignment);
  CHECK(pair.xs == Qs({"1", "9"}));
  CHECK(pair.ys == Qs({"4", "6"}));
}

TEST_CASE("one subset value swaps letters between the sides") {
  SubsetAssignment<Rational> assignment{Q("1"), Q("9"), Q("4"), Q("6"), Qs({"5"})};
  const auto pair = subset_pair(assignment);
  CHECK(multiset_equal(pair.xs, Qs({"1", "9", "9", "11"})));  // a, b, c+5, d+5
  CHECK(multiset_equal(pair.ys, Qs({"4", "6", "6", "14"})));  // c, d, a+5, b+5
  CHECK(verify_lists(pair.xs, pair.ys, 2).pass);
}

TEST_CASE("power-of-two subset values reproduce the integer split") {
  SubsetAssignment<Rational> assignment{Q("1"), Q("4"), Q("2"), Q("3"), Qs({"4", "8"})};
  const auto pair = subset_pair(assignment);
  const auto sorted = sorted_scalars(pair.xs);
  const auto split = prouhet_split(3);
  REQUIRE(sorted.size() == split.ones.size());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    CHECK(sorted[i] == Rational(split.ones[i]));
}

TEST_CASE("a base violation is rejected") {
  SubsetAssignment<Rational> bad{Q("1"), Q("2"), Q("3"), Q("4"), Qs({"1"})};
  CHECK_THROWS_AS((void)subset_pair(bad), BaseIdentityError);
}

TEST_CASE("subset sides satisfy powers 1..n+1 on random input") {
  testutil::Rng rng(987654);
  for (int trial = 0; trial < 12; ++trial) {
    SubsetAssignment<Rational> assignment;
    assignment.a = testutil::random_rational(rng);
    assignment.b = testutil::random_rational(rng);
    assignment.c = testutil::random_rational(rng);
    assignment.d = assignment.a + assignment.b - assignment.c;
    assignment.ks = testutil::random_rationals(rng, 1 + rng() % 7); // n <= 8 overall
    const auto pair = subset_pair(assignment);
    CHECK(pair.xs.size() == std::size_t{2} << assignment.ks.size());
    const auto report =
        verify_lists(pair.xs, pair.ys, static_cast<int>(assignment.ks.size()) + 1);
    CHECK(report.pass);
  }
}

TEST_CASE("the alternating sum at fixed small cases") {
  // n = 2, k = (1, 2): brute force over the four subsets gives
  //   m=1: 0
  //   m=2: a^2+b^2 -(a+1)^2-(b+1)^2 -(a+2)^2-(b+2)^2 +(a+3)^2+(b+3)^2 = 8
  const std::vector<Rational> ks = Qs({"1", "2"});
  CHECK(f_direct(Q("5"), Q("7"), 1, ks) == Rational(0));
  CHECK(f_direct(Q("-3"), Q("1/2"), 1, ks) == Rational(0));
  CHECK(f_direct(Q("5"), Q("7"), 2, ks) == Rational(8));
  CHECK(f_closed_form(Q("5"), Q("7"), 2, ks) == Rational(8));

  // n = 1, m = 2: a^2+b^2 - (a+k)^2 - (b+k)^2 = -2k(a+b+k)
  const Rational a = Q("2.5"), b = Q("-4"), k = Q("3");
  CHECK(f_direct(a, b, 2, {k}) == Rational(-2) * k * (a + b + k));
  CHECK(f_closed_form(a, b, 2, {k}) == Rational(-2) * k * (a + b + k));

  // n = 0: the empty subset only, so f = a^m + b^m
  CHECK(f_direct(a, b, 0, {}) == Rational(2));
  CHECK(f_closed_form(a, b, 0, {}) == Rational(2));
  CHECK(f_direct(a, b, 1, {}) == a + b);
  CHECK(f_closed_form(a, b, 1, {}) == a + b);

  CHECK_THROWS_AS((void)f_closed_form(a, b, 4, ks), DomainError); // m > n+1
}

TEST_CASE("direct evaluation equals the closed form everywhere it is stated") {
  testutil::Rng rng(111213);
  for (int trial = 0; trial < 40; ++trial) {
    const Rational a = testutil::random_rational(rng);
    const Rational b = testutil::random_rational(rng);
    const auto ks = testutil::random_rationals(rng, 1 + rng() % 6);
    for (unsigned m = 0; m <= ks.size() + 1; ++m)
      CHECK(f_direct(a, b, m, ks) == f_closed_form(a, b, m, ks));
  }
}

TEST_CASE("the alternating sum is symmetric in its two letters") {
  testutil::Rng rng(555);
  for (int trial = 0; trial < 20; ++trial) {
    const Rational a = testutil::random_rational(rng);
    const Rational b = testutil::random_rational(rng);
    const auto ks = testutil::random_rationals(rng, 1 + rng() % 4);
    const unsigned m = static_cast<unsigned>(rng() % (ks.size() + 2));
    CHECK(f_direct(a, b, m, ks) == f_direct(b, a, m, ks));
  }
}

TEST_CASE("equivalence with the generator on the worked examples") {
  // decimal data: base (-1, 2.1 | 3.4, -2.3), shifts (0, 1, -0.5)
  const auto decimal = equivalence_check(
      BaseIdentity<Rational>{Qs({"-1", "2.1"}), Qs({"3.4", "-2.3"})}, Qs({"0", "1", "-0.5"}));
  CHECK(decimal.pass);

  // power-of-two shifts: both constructions give the split of 1..16
  const auto split_case = equivalence_check(
      BaseIdentity<Rational>{Qs({"1", "4"}), Qs({"2", "3"})}, Qs({"0", "4", "8"}));
  CHECK(split_case.pass);

  // single shift: the subset side is just the translated letters
  const auto trivial = equivalence_check(
      BaseIdentity<Rational>{Qs({"1", "3"}), Qs({"2", "2"})}, Qs({"7"}));
  CHECK(trivial.pass);
}

TEST_CASE("equivalence on random inputs") {
  testutil::Rng rng(20242024);
  for (int trial = 0; trial < 15; ++trial) {
    const auto base = testutil::random_base(rng, 2);
    const auto shifts = testutil::random_rationals(rng, 1 + rng() % 8);
    CHECK(equivalence_check(base, shifts).pass);
  }
}

TEST_CASE("equivalence in the surd domain") {
  BaseIdentity<Surd> base{{Surd(Rational(0)), Surd(Rational(6))},
                          {Surd(Rational(1)), Surd(Rational(5))}};
  const std::vector<Surd> shifts = {Surd::sqrt_of(2), Surd::sqrt_of(3)};
  CHECK(equivalence_check(base, shifts).pass);
}

TEST_CASE("wide bases are refused") {
  BaseIdentity<Rational> wide{Qs({"1", "3", "7"}), Qs({"2", "4", "5"})};
  CHECK_THROWS_AS((void)equivalence_check(wide, Qs({"0", "1"})), DomainError);
}

} // TEST_SUITE
