#include "kacspec/number.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kacspec;

TEST(Number, ParseIntegerAcceptsSignsAndLargeValues) {
  EXPECT_EQ(parse_integer("-12"), Integer(-12));
  EXPECT_EQ(parse_integer("+7"), Integer(7));
  EXPECT_EQ(to_decimal(parse_integer("123456789012345678901234567890")), "123456789012345678901234567890");
}

TEST(Number, ParseIntegerRejectsGarbage) {
  EXPECT_THROW(parse_integer(""), std::invalid_argument);
  EXPECT_THROW(parse_integer("-"), std::invalid_argument);
  EXPECT_THROW(parse_integer("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_integer("12a"), std::invalid_argument);
}

TEST(Number, FractionStringsAreReduced) {
  EXPECT_EQ(to_fraction(Rational(4, 2)), "2");
  EXPECT_EQ(to_fraction(Rational(-3, 6)), "-1/2");
  // Built from Integers: the (int, int) constructor of gmp_rational misreads a negative denominator.
  EXPECT_EQ(to_fraction(Rational(Integer(3), Integer(-9))), "-1/3");
  EXPECT_EQ(parse_rational("-2/4"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("5"), Rational(5));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
}

TEST(Number, FractionStringRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> num(-1'000'000'000'000LL, 1'000'000'000'000LL);
  std::uniform_int_distribution<long long> den(1, 1'000'000'000LL);
  for (int i = 0; i < 500; ++i) {
    const Rational q(Integer(num(rng)), Integer(den(rng)));
    EXPECT_EQ(parse_rational(to_fraction(q)), q);
  }
}

TEST(Number, BinomialMatchesPascal) {
  std::vector<std::vector<Integer>> pascal(40);
  for (std::size_t n = 0; n < pascal.size(); ++n) {
    pascal[n].assign(n + 1, Integer(1));
    for (std::size_t k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
  }
  for (std::int64_t n = 0; n < 40; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), pascal[n][k]);
  }
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(5, 6), 0);
}
