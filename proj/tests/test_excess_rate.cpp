#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gic/excess_rate.hpp"

using namespace gic;

// Reference constants below were evaluated with mpmath at 30 digits.

TEST(CornerTotal, HalfGainAt100) {
  const auto t = corner_total_bounds(ChannelParams::symmetric(100, 0.5));
  EXPECT_NEAR(t.lower, 3.61920236966253945327145064224, 1e-12);
  EXPECT_NEAR(t.upper, 3.64641598994552736942455636036, 1e-12);
}

TEST(CornerTotal, SymmetricSandwich) {
  for (double p : {1.0, 10.0, 1e3, 1e6}) {
    for (double a : {0.01, 0.3, 0.99}) {
      const auto t = corner_total_bounds(ChannelParams::symmetric(p, a));
      EXPECT_GE(t.lower, 0.5 * std::log2(1 + p));
      EXPECT_LE(t.upper, 0.5 * std::log2(1 + 2 * p) + 1e-12);
    }
  }
}

TEST(CornerTotal, OrderedOnRandomChannels) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> lp(-1, 5), ga(0.001, 0.999);
  for (int i = 0; i < 3000; ++i) {
    const ChannelParams ch(std::pow(10, lp(rng)), std::pow(10, lp(rng)), ga(rng), ga(rng));
    const auto t = corner_total_bounds(ch);
    EXPECT_LE(t.lower, t.upper + 1e-12);
  }
}

TEST(DeltaUpperSimple, Values) {
  const auto b = delta_upper_simple(100, 0.5);
  EXPECT_NEAR(b.value, 0.492893070390149573731927079366, 1e-12);
  EXPECT_EQ(b.active_term, "ratio");
  EXPECT_EQ(delta_upper_simple(100, 1.0).value, 0.0);
  EXPECT_NEAR(delta_upper_simple(1e9, 0.25).value, 1.0, 1e-3);
}

TEST(DeltaUpperSimple, AgreesWithGeneralForm) {
  for (double p : {3.0, 100.0, 1e5}) {
    for (double a : {0.02, 0.4, 0.8}) {
      EXPECT_NEAR(delta_upper_simple(p, a).value,
                  delta_upper_general(ChannelParams::symmetric(p, a)).value, 1e-10);
    }
  }
}

TEST(DeltaUpperSimple, ContinuousAtUnitGain) {
  for (double p : {10.0, 1e4}) {
    EXPECT_LT(delta_upper_simple(p, 1 - 1e-9).value, 1e-6);
  }
}

TEST(DeltaLowerSimple, Values) {
  EXPECT_NEAR(delta_lower_simple_raw(100, 0.5), -0.244223921606196257735557553272, 1e-12);
  const auto b = delta_lower_simple(100, 0.5);
  EXPECT_EQ(b.value, 0.0);
  EXPECT_TRUE(b.valid);
  EXPECT_FALSE(delta_lower_simple(2, 0.5).valid);
  EXPECT_NEAR(delta_lower_simple_raw(1e9, 0.25), 0.16096403359380897160602216343, 1e-9);
  EXPECT_NEAR(delta_lower_simple_raw(1e9, 0.25), 0.1610, 1e-3);
}

TEST(DeltaLowerSimple, GeneralFormAgreesAndFlagsAsymmetry) {
  const auto ch = ChannelParams::symmetric(1e6, 0.01);
  EXPECT_NEAR(delta_lower_general(ch).value, delta_lower_simple(1e6, 0.01).value, 1e-10);
  EXPECT_FALSE(delta_lower_general({1e6, 5e5, 0.01, 0.02}).valid);
}

TEST(DeltaAsymptotic, Values) {
  EXPECT_EQ(delta_asymptotic_bounds(1.0).upper, 0.0);
  const auto q = delta_asymptotic_bounds(0.25);
  EXPECT_NEAR(q.upper, 1.0, 1e-15);
  EXPECT_NEAR(q.lower, 0.5 * std::log2(5.0) - 1, 1e-15);
  EXPECT_THROW(delta_asymptotic_bounds(0.0), DomainError);
}

TEST(DeltaAsymptotic, GapAtMostOneBit) {
  for (int k = 1; k <= 99; ++k) {
    const double a = k / 100.0;
    const double raw_lower = 0.5 * std::log2(1 + 1 / a) - 1;
    EXPECT_LE(delta_asymptotic_bounds(a).upper - raw_lower, 1.0 + 1e-15);
  }
}

TEST(DeltaImproved, NonMonotoneAnchorsAt500) {
  const double up = delta_upper_improved(500, 0.045).value;
  const double lo = delta_lower_improved(500, 0.110).value;
  EXPECT_NEAR(up, 0.578, 0.01);
  EXPECT_NEAR(lo, 0.620, 0.01);
  EXPECT_LT(up, lo);
}

TEST(DeltaImproved, SubclassBound) {
  const double sub = delta_tin_subclass_bound(20, 0.05);
  EXPECT_NEAR(sub, 1.22971580931864862809968152336, 1e-12);
  EXPECT_LE(delta_upper_improved(20, 0.05).value, sub + 1e-12);
}

TEST(DeltaImproved, TighterThanSimple) {
  for (double p : {5.0, 50.0, 500.0}) {
    for (double a : {0.05, 0.2, 0.5, 0.9}) {
      const auto r = delta_bounds_improved(p, a);
      EXPECT_LE(r.upper_improved.value, r.upper_simple.value);
      EXPECT_GE(r.lower_improved.value, r.lower_simple.value);
      EXPECT_LE(r.lower_improved.value, r.upper_improved.value);
      EXPECT_GE(r.lower_improved.value, 0.0);
    }
  }
}

TEST(DeltaImproved, ZeroAtUnitGain) {
  const auto r = delta_bounds_improved(50, 1.0);
  EXPECT_EQ(r.upper_simple.value, 0.0);
  EXPECT_EQ(r.lower_simple.value, 0.0);
  EXPECT_EQ(r.upper_improved.value, 0.0);
  EXPECT_EQ(r.lower_improved.value, 0.0);
  EXPECT_EQ(r.asymptotic_upper, 0.0);
}
