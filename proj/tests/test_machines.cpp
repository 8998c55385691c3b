#include <gtest/gtest.h>

#include <random>

#include "lcelab/gallery.hpp"
#include "lcelab/uniformize.hpp"
#include "oracles.hpp"

using namespace lcelab;

namespace {

Rational r(long long n, long long d = 1) { return make_rational(n, d); }

PrefixMachine toy() { return PrefixMachine("B", {{"0", "1"}, {"10", "10"}, {"11", "101"}}); }

std::vector<std::string> codes_of(const PrefixMachine& m) {
  std::vector<std::string> out;
  for (const auto& e : m.entries()) out.push_back(e.code);
  return out;
}

/// Kraft sum by counting codes per length.
Rational kraft_by_length(const PrefixMachine& m) {
  std::map<std::size_t, long long> per_length;
  for (const auto& e : m.entries()) ++per_length[e.code.size()];
  Rational total = 0;
  for (auto [len, count] : per_length) total += Rational(count) / Rational(Integer(1) << static_cast<unsigned>(len));
  return total;
}

/// B with codes 1^n 0 printing beta|n for n = 1..levels.
PrefixMachine unary_machine(const Rational& beta, std::size_t levels) {
  std::vector<PrefixMachine::Entry> entries;
  for (std::size_t n = 1; n <= levels; ++n) entries.push_back({std::string(n, '1') + "0", truncate(beta, n).bits});
  return PrefixMachine("unary", std::move(entries));
}

}  // namespace

TEST(PrefixMachine, RejectsPrefixViolations) {
  try {
    PrefixMachine bad("bad", {{"0", "1"}, {"01", "1"}});
    FAIL();
  } catch (const InvariantError& e) {
    EXPECT_STREQ(e.what(), "prefix violation (0, 01)");
  }
  EXPECT_THROW(PrefixMachine("bad", {{"", "1"}, {"1", "1"}}), InvariantError);
  EXPECT_THROW(PrefixMachine("dup", {{"1", "1"}, {"1", "0"}}), ConfigError);
  EXPECT_THROW(PrefixMachine("alpha", {{"2", "1"}}), ConfigError);
  EXPECT_NO_THROW(PrefixMachine("one", {{"", "1"}}));
}

TEST(PrefixMachine, ValidatorAgreesWithQuadraticCheck) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    std::set<std::string> codes;
    const int k = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < k; ++i) codes.insert(bits_of(rng() % 16, 1 + rng() % 4));
    std::vector<std::string> list(codes.begin(), codes.end());
    std::vector<PrefixMachine::Entry> entries;
    for (const auto& c : list) entries.push_back({c, "1"});
    bool accepted = true;
    try {
      PrefixMachine m("r", entries);
    } catch (const InvariantError&) {
      accepted = false;
    }
    ASSERT_EQ(accepted, oracle::prefix_free(list));
  }
}

TEST(Measure, Examples) {
  EXPECT_EQ(measure(toy()), 1);
  EXPECT_EQ(measure(PrefixMachine("empty", {})), 0);
  EXPECT_EQ(measure(PrefixMachine("half", {{"0", ""}})), r(1, 2));
}

TEST(Complexity, Examples) {
  EXPECT_EQ(complexity(toy(), "10"), 2u);
  EXPECT_FALSE(complexity(toy(), "0").has_value());
  PrefixMachine twice("twice", {{"0", "11"}, {"100", "11"}});
  EXPECT_EQ(complexity(twice, "11"), 1u);
}

TEST(Uniformize, ToyMachineExample) {
  const auto a = uniformize(toy(), witnesses::identity(r(1)), r(1));
  EXPECT_EQ(a.pad_length(), 1u);
  EXPECT_EQ(a.size(), 6u);
  EXPECT_EQ(*a.run("110"), "101");
  EXPECT_EQ(*a.run("111"), "110");
  EXPECT_EQ(*a.run("00"), "1");
  EXPECT_EQ(*a.run("01"), "1");  // 1 + 1 overflows one bit: saturated
  EXPECT_EQ(*a.run("100"), "10");
  EXPECT_EQ(*a.run("101"), "11");
  EXPECT_EQ(measure(a), measure(toy()));
  EXPECT_TRUE(oracle::prefix_free(codes_of(a)));
}

TEST(Uniformize, ConstantZeroWitness) {
  const auto b = unary_machine(r(2, 3), 6);
  const auto a = uniformize(b, witnesses::constant(r(0), r(3)), r(3));  // L = 2
  EXPECT_EQ(a.pad_length(), 2u);
  for (const auto& e : b.entries()) {
    const std::size_t n = e.output.size();
    for (std::uint64_t w = 0; w < 4; ++w) {
      const std::string expect = w < (std::uint64_t{1} << n) ? bits_of(w, n) : std::string(n, '1');
      ASSERT_EQ(*a.run(e.code + bits_of(w, 2)), expect);
    }
  }
}

TEST(Uniformize, DropPolicyLosesMeasure) {
  const auto a = uniformize(toy(), witnesses::identity(r(1)), r(1), OverflowPolicy::drop);
  EXPECT_EQ(a.size(), 5u);
  EXPECT_LT(measure(a), measure(toy()));
}

TEST(Uniformize, ConstructionErrorsPerCode) {
  try {
    uniformize(toy(), witnesses::affine(r(1, 2), r(1), r(1)), r(1));
    FAIL();
  } catch (const ConstructionError& e) {
    // 1/2 + 0.sigma >= 1 for sigma = 1, 10, 101.
    ASSERT_EQ(e.failures().size(), 3u);
    EXPECT_EQ(e.failures()[0].code, "0");
  }
}

TEST(Uniformize, PrefixFreeAndMeasurePreservingOnRandomMachines) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    // Random prefix-free code: leaves of a random binary tree.
    std::vector<std::string> frontier{""}, leaves;
    while (!frontier.empty()) {
      std::string c = frontier.back();
      frontier.pop_back();
      if (c.size() < 6 && rng() % 3 != 0) {
        frontier.push_back(c + "0");
        frontier.push_back(c + "1");
      } else if (rng() % 4 != 0) {
        leaves.push_back(c);
      }
    }
    std::vector<PrefixMachine::Entry> entries;
    for (const auto& c : leaves) entries.push_back({c, bits_of(rng() % 64, 6)});
    const PrefixMachine b("rand", entries);
    for (const auto& c : {r(1), r(3, 2), r(3), r(7)}) {
      const auto a = uniformize(b, witnesses::linear(r(1, 2), c), c);
      ASSERT_TRUE(oracle::prefix_free(codes_of(a)));
      ASSERT_EQ(measure(a), measure(b));
      ASSERT_EQ(kraft_by_length(a), kraft_by_length(b));
      ASSERT_LE(measure(a), 1);
      ASSERT_EQ(a.size(), b.size() << pad_length_for(c));
    }
  }
}

TEST(PadLength, CeilLogOfCPlusOne) {
  EXPECT_EQ(pad_length_for(r(1)), 1u);
  EXPECT_EQ(pad_length_for(r(3, 2)), 2u);
  EXPECT_EQ(pad_length_for(r(3)), 2u);
  EXPECT_EQ(pad_length_for(r(7, 2)), 3u);
  EXPECT_EQ(pad_length_for(r(1, 4)), 1u);
  EXPECT_THROW(pad_length_for(r(0)), ConfigError);
}

TEST(CheckUsch, IdentityUniformization) {
  const auto x = reals::set_real(sets::evens());
  const auto a = uniformize(toy(), witnesses::identity(r(1)), r(1));
  const auto rep = check_usch(a, toy(), x, x, 1, 10);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.lengths_checked, 3u);
  EXPECT_FALSE(check_usch(a, toy(), x, x, 0, 10).passed());
}

TEST(CheckUsch, SameMachineConstantZero) {
  const auto x = reals::set_real(sets::evens());
  EXPECT_TRUE(check_usch(toy(), toy(), x, x, 0, 10).passed());
}

TEST(CheckUsch, MissingCodesFail) {
  const auto x = reals::set_real(sets::evens());
  PrefixMachine a("a", {{"0", "1"}, {"10", "10"}});
  const auto rep = check_usch(a, toy(), x, x, 5, 10);
  ASSERT_FALSE(rep.passed());
  EXPECT_EQ(rep.first_failure->n, 3u);
  EXPECT_FALSE(rep.first_failure->k_a.has_value());
}

TEST(CheckUsch, ComplexityTransferForScalingWitness) {
  // alpha = beta / 2 via f(q) = q/2, c = 3/2, L = 2.
  for (const auto& beta : {reals::set_real(sets::evens()), reals::set_real(sets::odds()), reals::geometric(r(5, 7))}) {
    const auto alpha = reals::scaled(beta, r(1, 2));
    const auto w = scaling_witness(r(1, 2), ScalingDirection::forward);
    const auto b = unary_machine(Oracle::limit(beta), 32);
    std::vector<Rational> samples;
    for (std::size_t n = 1; n <= 32; ++n) samples.push_back(truncate(Oracle::limit(beta), n).value());
    ASSERT_TRUE(check_witness(alpha, beta, w, samples).passed());
    const auto a = uniformize(b, w, w.constant);
    const auto rep = check_usch(a, b, alpha, beta, pad_length_for(w.constant), 32);
    EXPECT_TRUE(rep.passed()) << beta.name();
    EXPECT_EQ(rep.lengths_checked, 32u);
  }
}
