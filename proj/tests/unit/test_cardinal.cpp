#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "efx/cardinal.hpp"
#include "oracle.hpp"

using namespace efx;

namespace {
LevelValue L(int e) { return LevelValue::lambda_power(e); }
}  // namespace

TEST(LevelValue, Ordering) {
  EXPECT_LT(LevelValue::zero(), L(63));
  EXPECT_LT(L(6), L(5));
  EXPECT_EQ(L(3), L(3));
  EXPECT_EQ(LevelValue(), LevelValue::zero());
  EXPECT_EQ(L(0).to_string(), "1");
  EXPECT_EQ(L(4).to_string(), "lambda^4");
  EXPECT_EQ(LevelValue::zero().to_string(), "0");
  EXPECT_THROW(L(-1), std::invalid_argument);
  for (int a = 0; a < 20; ++a)
    for (int b = 0; b < 20; ++b) EXPECT_EQ(L(a) < L(b), L(a).order_key() < L(b).order_key());
}

TEST(SubadditiveValue, Examples) {
  const auto& p = OrdinalProfile::builtin();
  EXPECT_TRUE(subadditive_value(0, Bundle{}, p).is_zero());
  EXPECT_EQ(subadditive_value(0, Bundle{0, 1, 2}, p), L(0));
  EXPECT_EQ(subadditive_value(0, Bundle{5}, p), L(6));
  const auto& v = SubadditiveProfile::builtin();
  for (int i = 0; i < kAgents; ++i)
    for (int m = 1; m < kBundles; ++m) {
      const Bundle s(static_cast<std::uint8_t>(m));
      EXPECT_EQ(v(i, s), L(7 - p(i, s)));
    }
}

TEST(ApproxFactor, Parsing) {
  EXPECT_EQ(ApproxFactor::parse("9/10"), ApproxFactor::rational(9, 10));
  EXPECT_EQ(ApproxFactor::parse("0.9"), ApproxFactor::rational(9, 10));
  EXPECT_EQ(ApproxFactor::parse("1"), ApproxFactor::rational(1, 1));
  EXPECT_EQ(ApproxFactor::parse("2/4"), ApproxFactor::rational(1, 2));
  EXPECT_EQ(ApproxFactor::parse("lambda"), ApproxFactor::lambda_power(1));
  EXPECT_EQ(ApproxFactor::parse("lambda^(1/2)"), ApproxFactor::lambda_power(Rational(1, 2)));
  EXPECT_EQ(ApproxFactor::parse("lambda^0.5"), ApproxFactor::lambda_power(Rational(1, 2)));
  EXPECT_EQ(ApproxFactor::parse("lambda^(1/2)").to_string(), "lambda^(1/2)");
  EXPECT_EQ(ApproxFactor::parse("lambda^2").to_string(), "lambda^2");
  EXPECT_EQ(ApproxFactor::parse("0.95").to_string(), "19/20");
  for (const char* bad : {"", "abc", "3/2", "0", "-1/2", "1/0", "lambda^-1", "lambda^", "0.5.5", "1.01"})
    EXPECT_THROW(ApproxFactor::parse(bad), std::invalid_argument) << bad;
}

TEST(ApproxFactor, ExceedsLambda) {
  EXPECT_TRUE(ApproxFactor::rational(9, 10).exceeds_lambda());
  EXPECT_TRUE(ApproxFactor::rational(891, 1000).exceeds_lambda());
  EXPECT_FALSE(ApproxFactor::rational(89, 100).exceeds_lambda());
  EXPECT_FALSE(ApproxFactor::rational(1, 2).exceeds_lambda());
  EXPECT_FALSE(ApproxFactor::lambda_power(1).exceeds_lambda());
  EXPECT_TRUE(ApproxFactor::lambda_power(Rational(99, 100)).exceeds_lambda());
  EXPECT_TRUE(ApproxFactor::lambda_power(0).exceeds_lambda());
  // (9/10)^6 = 531441/10^6 > 1/2
  EXPECT_GT(Rational(531441, 1000000), Rational(1, 2));
}

TEST(CompareScaled, Examples) {
  EXPECT_TRUE(compare_scaled(L(6), ApproxFactor::lambda_power(1), L(5)));
  EXPECT_FALSE(compare_scaled(L(6), ApproxFactor::rational(9, 10), L(4)));
  EXPECT_TRUE(compare_scaled(L(3), ApproxFactor::rational(1, 1), L(3)));
  EXPECT_TRUE(compare_scaled(LevelValue::zero(), ApproxFactor::rational(1, 2), LevelValue::zero()));
  EXPECT_FALSE(compare_scaled(LevelValue::zero(), ApproxFactor::rational(1, 2), L(6)));
  EXPECT_TRUE(compare_scaled(L(6), ApproxFactor::rational(1, 2), LevelValue::zero()));
  // λ^6 = 1/2 exactly, from either side.
  EXPECT_TRUE(compare_scaled(L(6), ApproxFactor::rational(1, 2), L(0)));
  EXPECT_FALSE(compare_scaled(L(7), ApproxFactor::rational(1, 2), L(0)));
  EXPECT_TRUE(compare_scaled(L(0), ApproxFactor::rational(1, 1), L(1)));
  EXPECT_FALSE(compare_scaled(L(1), ApproxFactor::rational(1, 1), L(0)));
}

TEST(CompareScaled, AgreesWithFloatingPointAwayFromTies) {
  const double lambda = std::pow(2.0, -1.0 / 6.0);
  for (int p = 0; p <= 7; ++p)
    for (int q = 0; q <= 7; ++q)
      for (int num = 1; num <= 20; ++num) {
        const double a = std::pow(lambda, p), b = std::pow(lambda, q), alpha = num / 20.0;
        if (std::abs(a - alpha * b) < 1e-9) continue;
        EXPECT_EQ(compare_scaled(L(p), ApproxFactor::rational(num, 20), L(q)), a >= alpha * b)
            << p << " " << q << " " << num;
      }
}

TEST(CompareScaled, ConsistentWithLevelSumOnRepresentableAlphas) {
  // α = 1/2 = λ^6 in both forms; a >= α b  <=>  a - λ^(q+6) >= 0.
  for (int p = 0; p <= 12; ++p)
    for (int q = 0; q <= 12; ++q) {
      const bool rational = compare_scaled(L(p), ApproxFactor::rational(1, 2), L(q));
      const bool power = compare_scaled(L(p), ApproxFactor::lambda_power(6), L(q));
      const std::array<LevelValue, 1> lhs = {L(p)};
      const bool sum = level_sum_compare(lhs, L(q + 6)) >= 0;
      EXPECT_EQ(rational, power);
      EXPECT_EQ(rational, sum);
    }
}

TEST(LevelSumCompare, Examples) {
  const std::array<LevelValue, 2> halves = {L(6), L(6)};
  EXPECT_EQ(level_sum_compare(halves, L(0)), std::strong_ordering::equal);
  EXPECT_EQ(level_sum_compare(halves, L(1)), std::strong_ordering::greater);
  const std::array<LevelValue, 2> mixed = {L(3), L(5)};
  EXPECT_EQ(level_sum_compare(mixed, L(2)), std::strong_ordering::greater);
  const std::array<LevelValue, 2> zeros = {LevelValue::zero(), LevelValue::zero()};
  EXPECT_EQ(level_sum_compare(zeros, LevelValue::zero()), std::strong_ordering::equal);
  const std::array<LevelValue, 1> one = {L(1)};
  EXPECT_EQ(level_sum_compare(one, L(0)), std::strong_ordering::less);
}

TEST(LevelSumCompare, AgreesWithFloatingPointAwayFromTies) {
  const double lambda = std::pow(2.0, -1.0 / 6.0);
  for (int a = 0; a <= 13; ++a)
    for (int b = 0; b <= 13; ++b)
      for (int c = 0; c <= 13; ++c) {
        const double diff = std::pow(lambda, a) + std::pow(lambda, b) - std::pow(lambda, c);
        if (std::abs(diff) < 1e-12) continue;
        const std::array<LevelValue, 2> xs = {L(a), L(b)};
        EXPECT_EQ(level_sum_compare(xs, L(c)), diff > 0 ? std::strong_ordering::greater : std::strong_ordering::less);
      }
}

TEST(AlgebraicValue, ReductionAndSign) {
  EXPECT_EQ(AlgebraicValue::from_level(L(6)), AlgebraicValue::from_rational(Rational(1, 2)));
  EXPECT_EQ(AlgebraicValue::from_level(L(7)), AlgebraicValue::from_level(L(1)) - AlgebraicValue::from_level(L(7)));
  EXPECT_TRUE((AlgebraicValue::from_level(L(6)) - AlgebraicValue::from_rational(Rational(1, 2))).is_zero());
  EXPECT_EQ((AlgebraicValue::from_level(L(1)) - AlgebraicValue::from_rational(Rational(89, 100))).sign(), 1);
  EXPECT_EQ((AlgebraicValue::from_level(L(1)) - AlgebraicValue::from_rational(Rational(891, 1000))).sign(), -1);
  // λ - 0.8908987181 > 0 and λ - 0.8908987182 < 0 need fine refinement.
  EXPECT_EQ((AlgebraicValue::from_level(L(1)) - AlgebraicValue::from_rational(Rational(8908987181, 10000000000))).sign(), 1);
  EXPECT_EQ((AlgebraicValue::from_level(L(1)) - AlgebraicValue::from_rational(Rational(8908987182, 10000000000))).sign(), -1);
  EXPECT_EQ(AlgebraicValue().sign(), 0);
}

TEST(Coverage, Examples) {
  EXPECT_EQ(coverage_value(0, Bundle{}), 0u);
  EXPECT_EQ(coverage_value(0, Bundle{0, 1}), 36u);
  EXPECT_EQ(coverage_value(0, Bundle{6}), 21u);
  EXPECT_EQ(coverage_value(0, Bundle::all()), 49u);
  const auto& atoms = builtin_coverage_atoms();
  ASSERT_EQ(atoms.size(), 11u);
  std::uint32_t total = 0;
  for (const auto& a : atoms) total += a.weight;
  EXPECT_EQ(total, 49u);
}

TEST(Coverage, MatchesOracleAndRelabeling) {
  const auto& u = CoverageProfile::builtin();
  const auto sigma = GoodPermutation::sigma();
  for (int i = 0; i < kAgents; ++i) {
    EXPECT_EQ(u.valuation(i).total_weight(), 49u);
    for (int m = 0; m < kBundles; ++m) {
      const Bundle s(static_cast<std::uint8_t>(m));
      ASSERT_EQ(u(i, s), static_cast<std::uint32_t>(oracle::coverage(i, oracle::from_mask(m))));
      EXPECT_EQ(u(i, s), u(0, sigma.power(i)(s)));
      EXPECT_EQ(u.valuation(i).evaluate(s), u(i, s));
    }
  }
}

TEST(Coverage, StrictRankSeparation) {
  const auto& p = OrdinalProfile::builtin();
  for (int s = 0; s < kBundles; ++s)
    for (int t = 0; t < kBundles; ++t) {
      const Bundle a(static_cast<std::uint8_t>(s)), b(static_cast<std::uint8_t>(t));
      if (p(0, a) > p(0, b)) ASSERT_GT(coverage_value(0, a), coverage_value(0, b));
    }
}

TEST(Subadditive, OneRankGap) {
  const auto& v = SubadditiveProfile::builtin();
  const auto& p = OrdinalProfile::builtin();
  const auto above_lambda = ApproxFactor::rational(9, 10);
  for (int i = 0; i < kAgents; ++i)
    for (int s = 1; s < kBundles; ++s)
      for (int t = 1; t < kBundles; ++t) {
        const Bundle a(static_cast<std::uint8_t>(s)), b(static_cast<std::uint8_t>(t));
        if (p(i, b) <= p(i, a)) continue;
        // v(S) <= λ v(T), so v(S) >= α v(T) fails for any α > λ.
        const std::array<LevelValue, 1> lhs = {v(i, a)};
        EXPECT_TRUE(level_sum_compare(lhs, L(v(i, b).exponent() + 1)) <= 0);
        EXPECT_FALSE(compare_scaled(v(i, a), above_lambda, v(i, b)));
      }
}

TEST(SupportValueTable, Rows) {
  const auto rows = support_value_table();
  auto find = [&](const std::string& word) {
    for (const auto& r : rows)
      if (r.support.word() == word) return r;
    return SupportRow{};
  };
  EXPECT_EQ(find("BC").rank, 5);
  EXPECT_EQ(find("BC").value, 46u);
  EXPECT_EQ(find("∅").rank, 0);
  EXPECT_EQ(find("∅").value, 0u);
  EXPECT_EQ(find("ABCxy").rank, 7);
  EXPECT_EQ(find("ABCxy").value, 49u);
  EXPECT_EQ(find("AB").bundles, 9);
  int total = 0;
  for (const auto& r : rows) total += r.bundles;
  EXPECT_EQ(total, 256);
}

TEST(LambdaDecimal, RoundsTowardZero) {
  EXPECT_EQ(lambda_power_decimal(Rational(1), 10), "0.8908987181");
  EXPECT_EQ(lambda_power_decimal(Rational(0), 10), "1.0000000000");
  EXPECT_EQ(lambda_power_decimal(Rational(6), 10), "0.5000000000");
  EXPECT_EQ(lambda_power_decimal(Rational(2), 4), "0.7937");
  EXPECT_EQ(lambda_power_floor_decimal(Rational(1), 3), BigInt(890));
}
