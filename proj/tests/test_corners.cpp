#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gic/corners.hpp"
#include "gic/regions.hpp"

using namespace gic;

// Reference constants below were evaluated with mpmath at 30 digits.

TEST(WeakCorners, HalfGainAt100) {
  const auto cb = weak_corner_bounds(ChannelParams::symmetric(100, 0.5));
  EXPECT_NEAR(cb.corner_at_c1.lo, 0.29009662828664208468562108549, 1e-12);
  EXPECT_NEAR(cb.corner_at_c1.hi, 0.317310248569630000838726803619, 1e-12);
  EXPECT_EQ(cb.active_at_c1, CornerTerm::ETW);
  EXPECT_DOUBLE_EQ(cb.corner_at_c2.lo, cb.corner_at_c1.lo);
  EXPECT_DOUBLE_EQ(cb.corner_at_c2.hi, cb.corner_at_c1.hi);
}

TEST(WeakCorners, HalfGainAt1000) {
  const auto cb = weak_corner_bounds(ChannelParams::symmetric(1000, 0.5));
  EXPECT_NEAR(cb.corner_at_c1.lo, 0.292241001392347447091330373317, 1e-12);
  EXPECT_NEAR(cb.corner_at_c1.hi, 0.295109174762621763177458328196, 1e-12);
  EXPECT_NEAR(cb.corner_at_c1.lo, 0.2925, 5e-4);
  EXPECT_NEAR(cb.corner_at_c1.hi, 0.295, 1e-3);
}

TEST(WeakCorners, IntervalCollapsesAtHighSnr) {
  const auto cb = weak_corner_bounds(ChannelParams::symmetric(1e6, 0.5));
  const double w = cb.corner_at_c1.hi - cb.corner_at_c1.lo;
  EXPECT_NEAR(w, 2.88537276953361526255999611033e-6, 1e-12);
  EXPECT_LE(w, 1e-3);
}

TEST(WeakCorners, KramerActiveAtTenthGain) {
  const auto cb = weak_corner_bounds(ChannelParams::symmetric(100, 0.1));
  EXPECT_EQ(cb.active_at_c1, CornerTerm::Kramer);
  EXPECT_NEAR(cb.corner_at_c1.hi, 0.496420104213566938605678419613, 1e-12);
}

TEST(WeakCorners, IntervalInvariantsOnRandomChannels) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> lp(-1, 5), ga(0.001, 0.999);
  for (int i = 0; i < 3000; ++i) {
    const ChannelParams ch(std::pow(10, lp(rng)), std::pow(10, lp(rng)), ga(rng), ga(rng));
    const auto cb = weak_corner_bounds(ch);
    const auto star = conjectured_corner_rates(ch);
    EXPECT_LE(cb.corner_at_c1.lo, cb.corner_at_c1.hi);
    EXPECT_LE(cb.corner_at_c2.lo, cb.corner_at_c2.hi);
    EXPECT_EQ(cb.corner_at_c1.lo, star.r2);
    EXPECT_EQ(cb.corner_at_c2.lo, star.r1);
    EXPECT_LE(cb.corner_at_c1.hi, single_user_capacity(ch.p2()));
    EXPECT_LE(cb.corner_at_c2.hi, single_user_capacity(ch.p1()));
  }
}

TEST(WeakCorners, RejectsNonWeak) {
  EXPECT_THROW(weak_corner_bounds({1, 1, 2, 0.5}), RegimeError);
}

TEST(RateTradeoff, SmallSlackHalfGain) {
  const auto b = rate_tradeoff_bound(ChannelParams::symmetric(100, 0.5), 0.01, 1);
  EXPECT_NEAR(b.value, 0.337310248569630000838726803619, 1e-12);
  EXPECT_EQ(b.active_term, "ETW");
}

TEST(RateTradeoff, TenthGainActiveTermDependsOnSlack) {
  const auto ch = ChannelParams::symmetric(100, 0.1);
  // At eps = 1e-3 the Kramer slope (1 + 101/10) outweighs its 0.006 head start.
  const auto b3 = rate_tradeoff_bound(ch, 1e-3, 1);
  EXPECT_EQ(b3.active_term, "ETW");
  EXPECT_NEAR(b3.value, 0.504621852857574141196018289843, 1e-12);
  const auto b4 = rate_tradeoff_bound(ch, 1e-4, 1);
  EXPECT_EQ(b4.active_term, "Kramer");
  EXPECT_NEAR(b4.value, 0.497530104213566938605678419613, 1e-12);
}

TEST(RateTradeoff, ConvergesToCornerAndIsMonotone) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> lp(-1, 4), ga(0.01, 0.99);
  for (int i = 0; i < 200; ++i) {
    const ChannelParams ch(std::pow(10, lp(rng)), std::pow(10, lp(rng)), ga(rng), ga(rng));
    const auto cb = weak_corner_bounds(ch);
    for (int user : {1, 2}) {
      const double hi = user == 1 ? cb.corner_at_c1.hi : cb.corner_at_c2.hi;
      double prev = INFINITY;
      for (double eps = 0.1; eps > 1e-9; eps /= 3) {
        const double v = rate_tradeoff_bound(ch, eps, user).value;
        EXPECT_GE(v, hi);
        EXPECT_LE(v, prev);
        prev = v;
      }
      // Convergence is linear in eps with the Kramer slope, which can be large.
      const double pa = user == 1 ? ch.p1() : ch.p2(), pb = user == 1 ? ch.p2() : ch.p1();
      const double gain = user == 1 ? ch.a21() : ch.a12();
      double last = 0.1;
      while (last / 3 > 1e-9) last /= 3;
      EXPECT_LE(prev - hi, (2 + (1 + pa) / (gain * pb)) * last + 1e-12);
    }
  }
}

TEST(RateTradeoff, RejectsBadInput) {
  const auto ch = ChannelParams::symmetric(100, 0.5);
  EXPECT_THROW(rate_tradeoff_bound(ch, 0.0, 1), DomainError);
  EXPECT_THROW(rate_tradeoff_bound(ch, 0.1, 3), DomainError);
  EXPECT_THROW(rate_tradeoff_bound({1, 1, 0, 0.5}, 0.1, 1), RegimeError);
}

TEST(SymmetricCornerUpper, TenthGainAt100) {
  const auto s = symmetric_corner_upper(100, 0.1);
  EXPECT_EQ(s.bound.active_term, "Kramer");
  EXPECT_NEAR(s.bound.value, 0.4964, 5e-5);
  EXPECT_NEAR(s.etw_term, 0.5026, 5e-5);
  EXPECT_NEAR(s.etw_term, 0.502621852857574141196018289843, 1e-12);
}

TEST(SymmetricCornerUpper, HalfGainAt100) {
  const auto s = symmetric_corner_upper(100, 0.5);
  EXPECT_EQ(s.bound.active_term, "ETW");
  EXPECT_NEAR(s.bound.value, 0.317310248569630000838726803619, 1e-12);
}

TEST(SymmetricCornerUpper, NearUnitGainKramerWins) {
  for (double p : {1.0, 100.0, 1e4}) {
    EXPECT_EQ(symmetric_corner_upper(p, 0.9999).bound.active_term, "Kramer");
  }
}

TEST(SymmetricCornerUpper, FlipsExactlyAtThreshold) {
  for (double a : {0.05, 0.1, 0.2, 0.5, 0.8}) {
    const double t = etw_kramer_threshold(a);
    const auto below = symmetric_corner_upper(t * (1 - 1e-6), a);
    const auto above = symmetric_corner_upper(t * (1 + 1e-6), a);
    EXPECT_EQ(below.bound.active_term, "Kramer");
    EXPECT_EQ(above.bound.active_term, "ETW");
    EXPECT_LT(below.kramer_term, below.etw_term);
    EXPECT_LT(above.etw_term, above.kramer_term);
  }
}

TEST(Threshold, Values) {
  EXPECT_NEAR(etw_kramer_threshold(0.2), 27.7254248593736856025573354296, 1e-9);
  EXPECT_NEAR(etw_kramer_threshold(0.1), 102.33080254051604061112374601, 1e-9);
  // The closed form at a = 1/2 is 4 + 2 sqrt(5).
  EXPECT_NEAR(etw_kramer_threshold(0.5), 4 + 2 * std::sqrt(5.0), 1e-12);
  EXPECT_THROW(etw_kramer_threshold(0.0), DomainError);
  EXPECT_THROW(etw_kramer_threshold(1.0), DomainError);
}

TEST(Threshold, DivergesAtBothEnds) {
  EXPECT_GT(etw_kramer_threshold(1e-3), 1e4);
  EXPECT_GT(etw_kramer_threshold(1 - 1e-4), 1e4);
  // Growth near a = 1 is only ~2/(1-a).
  EXPECT_NEAR(etw_kramer_threshold(1 - 1e-3), 2001.50212787874690420315545036, 1e-6);
}

TEST(MixedCorners, BranchOne) {
  const auto m = mixed_corner_report({10, 10, 2, 0.5}, 0.0);
  EXPECT_TRUE(m.branch_one);
  EXPECT_FALSE(m.mirrored);
  EXPECT_NEAR(m.sum_rate_corner.value, 0.707518749639421909273130528026, 1e-12);
  EXPECT_TRUE(m.other_corner.valid);
  EXPECT_NEAR(m.other_corner.value, 0.5 * std::log2(1 + 10.0 / 11.0), 1e-12);
}

TEST(MixedCorners, BranchTwo) {
  const ChannelParams ch(10, 10, 1, 0.9);
  const auto m = mixed_corner_report(ch, 0.0);
  EXPECT_FALSE(m.branch_one);
  EXPECT_DOUBLE_EQ(m.sum_rate_corner.value, conjectured_corner_rates(ch).r2);
}

TEST(MixedCorners, BranchOneStrictlyBelowConjecture) {
  for (double p1 : {1.0, 5.0, 50.0}) {
    for (double a12 : {1.5, 3.0, 10.0}) {
      for (double a21 : {0.5, 0.8, 0.95}) {
        const ChannelParams ch(p1, 7.0, a12, a21);
        if (classify(ch).kind != RegimeKind::Mixed) continue;
        const auto m = mixed_corner_report(ch, 0.01);
        if (!m.branch_one) continue;
        EXPECT_LT(m.sum_rate_corner.value, conjectured_corner_rates(ch).r2 + 0.01);
      }
    }
  }
}

TEST(MixedCorners, MirroredInputSwapsRoles) {
  const auto m = mixed_corner_report({10, 10, 0.5, 2}, 0.0);
  EXPECT_TRUE(m.mirrored);
  EXPECT_NEAR(m.sum_rate_corner.value, 0.707518749639421909273130528026, 1e-12);
}

TEST(MixedCorners, SlackMarksOtherEntryAsymptotic) {
  const auto m = mixed_corner_report({10, 10, 2, 0.5}, 0.05);
  EXPECT_FALSE(m.other_corner.valid);
  EXPECT_NEAR(m.sum_rate_corner.value, 0.707518749639421909273130528026 + 0.05, 1e-12);
}

TEST(MixedCorners, RejectsNonMixed) {
  EXPECT_THROW(mixed_corner_report(ChannelParams::symmetric(1, 0.5), 0.0), RegimeError);
}

TEST(OneSided, HalfGainAt100) {
  const auto os = one_sided_corner_bounds(100, 100, 0.5);
  EXPECT_NEAR(os.exact_corner.r1, 3.32910574137589736858582955675, 1e-12);
  EXPECT_NEAR(os.exact_corner.r2, 0.782989698676791658417548164856, 1e-12);
  EXPECT_NEAR(os.r1_at_c2.lo, 0.29009662828664208468562108549, 1e-12);
  EXPECT_NEAR(os.r1_at_c2.hi, 0.496420104213566938605678419613, 1e-12);
}

TEST(OneSided, TightAsGainApproachesOne) {
  const auto os = one_sided_corner_bounds(100, 30, 1 - 1e-9);
  EXPECT_NEAR(os.r1_at_c2.lo, os.r1_at_c2.hi, 1e-8);
  EXPECT_THROW(one_sided_corner_bounds(1, 1, 1.0), DomainError);
}

TEST(OneSided, ExactCornerInsideNearlyOneSidedEtwRegion) {
  for (double a : {0.1, 0.5, 0.9}) {
    const auto os = one_sided_corner_bounds(100, 40, a);
    // The tiny second gain moves 2R1+R2 by about a12 * P2 * log2(e) / 2.
    const auto r = etw_region({100, 40, 1e-6, a});
    EXPECT_TRUE(r.contains(os.exact_corner, 1e-4));
  }
}
