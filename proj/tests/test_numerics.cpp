#include <gtest/gtest.h>

#include <random>

#include "lcelab/rational.hpp"
#include "lcelab/natural_set.hpp"
#include "oracles.hpp"

using namespace lcelab;

TEST(DyadicLength, Examples) {
  EXPECT_EQ(dyadic_length(make_rational(5, 8)), 3u);
  EXPECT_EQ(dyadic_length(make_rational(1, 2)), 1u);
  EXPECT_EQ(dyadic_length(Rational(0)), 0u);
}

TEST(DyadicLength, RejectsNonDyadicAndOutOfRange) {
  EXPECT_THROW(dyadic_length(make_rational(1, 3)), DomainError);
  EXPECT_THROW(dyadic_length(Rational(1)), DomainError);
  EXPECT_THROW(dyadic_length(make_rational(-1, 2)), DomainError);
}

TEST(Truncate, Examples) {
  auto t = truncate(make_rational(2, 3), 4);
  EXPECT_EQ(t.bits, "1010");
  EXPECT_EQ(t.value(), make_rational(5, 8));
  EXPECT_EQ(truncate(make_rational(1, 2), 1).bits, "1");
  EXPECT_EQ(truncate(make_rational(3, 7), 0).bits, "");
  EXPECT_EQ(truncate(make_rational(3, 7), 0).value(), 0);
}

TEST(Truncate, MatchesLongDivision) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const long long den = 1 + static_cast<long long>(rng() % 1000);
    const long long num = static_cast<long long>(rng() % den);
    const Rational x = make_rational(num, den);
    const std::uint64_t n = rng() % 70;
    const auto t = truncate(x, n);
    ASSERT_EQ(t.bits, oracle::binary_digits(x, n)) << to_string(x) << " n=" << n;
    ASSERT_EQ(t.value(), oracle::value_of(t.bits));
    ASSERT_GE(x - t.value(), 0);
    ASSERT_LT(x - t.value(), pow2(-static_cast<std::int64_t>(n)));
  }
}

TEST(Truncate, RoundTripsDyadicLength) {
  for (long long k = 1; k < 256; ++k) {
    const Rational q = make_rational(k, 256);
    EXPECT_EQ(truncate(q, dyadic_length(q)).value(), q);
    EXPECT_EQ(truncate(q, dyadic_length(q)).bits.back(), '1');
  }
}

TEST(Truncate, Monotone) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Rational x = make_rational(static_cast<long long>(rng() % 997), 997);
    Rational y = make_rational(static_cast<long long>(rng() % 991), 991);
    if (y < x) std::swap(x, y);
    const std::uint64_t n = rng() % 40;
    ASSERT_LE(truncate(x, n).value(), truncate(y, n).value());
  }
}

TEST(DyadicString, Canonical) {
  DyadicString s{"101000"};
  EXPECT_EQ(s.canonical().bits, "101");
  EXPECT_EQ(s.canonical().value(), s.value());
  EXPECT_EQ(DyadicString{"000"}.canonical().bits, "");
}

TEST(RealFromSet, Examples) {
  EXPECT_EQ(real_from_set(sets::evens(), 4), make_rational(5, 8));
  EXPECT_EQ(real_from_set([](std::uint64_t) { return false; }, 10), 0);
  EXPECT_EQ(real_from_set(sets::naturals(), 3), make_rational(7, 8));
}

TEST(RealFromSet, NondecreasingWithinTailBound) {
  for (const auto& set : {sets::evens(), sets::squares(), sets::powers_of_two(), sets::odds()}) {
    Rational prev = 0;
    for (std::uint64_t n = 0; n < 80; ++n) {
      const Rational cur = real_from_set(set, n);
      ASSERT_GE(cur, prev) << set.name();
      ASSERT_LE(real_from_set(set, n + 1), cur + pow2(-static_cast<std::int64_t>(n))) << set.name();
      prev = cur;
    }
  }
}

TEST(RealFromSet, ConvergesToBinaryValue) {
  for (const auto& set : {sets::evens(), sets::odds(), sets::naturals(), sets::explicit_set({1, 4}, 9)}) {
    const Rational limit = *set.binary_value();
    for (std::uint64_t n = 0; n < 60; ++n) {
      const Rational gap = limit - real_from_set(set, n);
      ASSERT_GT(gap, 0) << set.name();
      ASSERT_LE(gap, pow2(-static_cast<std::int64_t>(n))) << set.name();
    }
  }
}

TEST(RationalText, ParseAndFormat) {
  EXPECT_EQ(parse_rational("6/8"), make_rational(3, 4));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_EQ(to_string(make_rational(3, 4)), "3/4");
  EXPECT_EQ(to_string(Rational(5)), "5");
  EXPECT_THROW(parse_rational("0.5"), ConfigError);
  EXPECT_THROW(parse_rational("1/0"), ConfigError);
  EXPECT_THROW(parse_rational("1/-2"), ConfigError);
}

TEST(CeilLog2, Exact) {
  EXPECT_EQ(ceil_log2(Rational(12)), 4);
  EXPECT_EQ(ceil_log2(Rational(8)), 3);
  EXPECT_EQ(ceil_log2(Rational(3)), 2);
  EXPECT_EQ(ceil_log2(Rational(1)), 0);
  EXPECT_EQ(ceil_log2(make_rational(1, 2)), -1);
  EXPECT_EQ(ceil_log2(make_rational(3, 8)), -1);
  EXPECT_EQ(ceil_log2(make_rational(5, 2)), 2);
  EXPECT_THROW(ceil_log2(Rational(0)), DomainError);
  for (long long v = 1; v < 2000; ++v) {
    const auto k = ceil_log2(Rational(v));
    ASSERT_GE(pow2(k), Rational(v));
    ASSERT_LT(pow2(k - 1), Rational(v));
  }
}
