#include "gic/excess_rate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gic {

using detail::half_log2;

namespace {

void require_symmetric_closed(double p, double a, const char* op) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError(std::string(op) + ": p must be finite and > 0");
  if (!(a >= kMinWeakGain && a <= 1.0)) {
    throw RegimeError(std::string(op) + ": requires 0 < a <= 1");
  }
}

BoundValue zero_at_unit_gain(const char* term) {
  return {0.0, true, term, "a = 1: capacity region is the MAC intersection"};
}

}  // namespace

CornerTotal corner_total_bounds(const ChannelParams& params) {
  require_weak(params, "corner_total_bounds");
  const double p1 = params.p1(), p2 = params.p2(), a12 = params.a12(), a21 = params.a21();
  const double l1 = std::log2(1 + p2 + a21 * p1), l2 = std::log2(1 + p1 + a12 * p2);
  const double prod = (1 + a21 * p1) * (1 + a12 * p2);
  const double u1 = l1 + std::log2(1 + p1 / prod);
  const double u2 = l2 + std::log2(1 + p2 / prod);
  return {0.5 * std::max(l1, l2), 0.5 * std::min(std::max(u1, u2), std::log2(1 + p1 + p2))};
}

BoundValue delta_upper_simple(double p, double a) {
  require_symmetric_closed(p, a, "delta_upper_simple");
  if (a == 1.0) return zero_at_unit_gain("ratio");
  const double ap = a * p, q = 1 + ap;
  const double ratio = std::log2((1 + p) / q);
  const double mixed = std::log2(1 + p / (q * q) + ap * (p + q * q) / (q * (1 + (a + 1) * p)));
  const bool first = ratio <= mixed;
  return {std::max(0.0, 0.5 * std::min(ratio, mixed)), true, first ? "ratio" : "mixed",
          "closed-form upper bound on Delta"};
}

double delta_lower_simple_raw(double p, double a) {
  require_symmetric_closed(p, a, "delta_lower_simple");
  const double ap = a * p, q = 1 + ap, l = std::log2(1 + (a + 1) * p);
  const double sum_lo = std::min(l + std::log2(1 + p / q), 2 * std::log2(1 + ap + p / q));
  const double corner_hi = std::min(l + std::log2(1 + p / (q * q)), std::log2(1 + 2 * p));
  return 0.5 * (sum_lo - corner_hi) - 1.0;
}

BoundValue delta_lower_simple(double p, double a) {
  const double raw = delta_lower_simple_raw(p, a);
  const bool valid = lemma1_certificate(p).valid;
  if (a == 1.0) return {0.0, valid, "clamped", "a = 1"};
  return {std::max(0.0, raw), valid, raw > 0.0 ? "raw" : "clamped",
          valid ? "closed-form lower bound on Delta" : "p below the quartic root; not certified"};
}

BoundValue delta_upper_general(const ChannelParams& params) {
  const auto sum = etw_sum_upper(params);
  const auto totals = corner_total_bounds(params);
  return {std::max(0.0, sum.value - totals.lower), true, sum.active_term,
          "closed-form upper bound on Delta"};
}

BoundValue delta_lower_general(const ChannelParams& params) {
  const auto sum = hk_sum_lower_half_bit(params);
  const auto totals = corner_total_bounds(params);
  return {std::max(0.0, sum.value - totals.upper), sum.valid, sum.active_term, sum.note};
}

double delta_tin_subclass_bound(double p, double a) {
  const double q = 1 + a * p;
  return half_log2(1 / q + p / (q * q));
}

AsymptoticDelta delta_asymptotic_bounds(double a) {
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("delta_asymptotic_bounds: a must lie in (0,1]");
  return {half_log2(1 / a), std::max(0.0, half_log2(1 + 1 / a) - 1)};
}

BoundValue delta_upper_improved(double p, double a, const GridSpec& etkin_grid) {
  require_symmetric_closed(p, a, "delta_upper_improved");
  if (a == 1.0) return zero_at_unit_gain("simple");
  const auto ch = ChannelParams::symmetric(p, a);
  const double ctl = corner_total_bounds(ch).lower;
  const auto etkin = etkin_sum_upper(p, a, etkin_grid);
  std::vector<BoundValue> cands{
      {etkin.value - ctl, true, "etkin", ""},
      {kramer_sum_upper(p, a).value - ctl, true, "kramer", ""},
      {etw_sum_upper(ch).value - ctl, true, "etw", ""},
      {delta_upper_simple(p, a).value, true, "simple", ""},
  };
  if (tin_subclass(p, a).in_subclass) {
    cands.push_back({delta_tin_subclass_bound(p, a), true, "tin", ""});
  }
  auto best = min_bound(cands);
  best.value = std::max(0.0, best.value);
  best.note = "improved upper bound on Delta";
  return best;
}

BoundValue delta_lower_improved(double p, double a, const GridSpec& hk_grid) {
  require_symmetric_closed(p, a, "delta_lower_improved");
  if (a == 1.0) return {0.0, true, "simple", "a = 1"};
  const auto ch = ChannelParams::symmetric(p, a);
  const double ctu = corner_total_bounds(ch).upper;
  const auto hb = hk_sum_lower_half_bit(ch);
  const auto simple = delta_lower_simple(p, a);
  const std::vector<BoundValue> cands{
      {hk_sum_lower_optimized(p, a, hk_grid).value - ctu, true, "hk", ""},
      {hb.value - ctu, hb.valid, "half_bit", ""},
      {simple.value, simple.valid, "simple", ""},
  };
  auto best = max_bound(cands);
  best.value = std::max(0.0, best.value);
  best.note = "improved lower bound on Delta";
  return best;
}

DeltaReport delta_bounds_improved(double p, double a, const GridSpec& hk_grid,
                                  const GridSpec& etkin_grid) {
  require_symmetric_closed(p, a, "delta_bounds_improved");
  DeltaReport r;
  r.upper_simple = delta_upper_simple(p, a);
  r.lower_simple = delta_lower_simple(p, a);
  r.upper_improved = delta_upper_improved(p, a, etkin_grid);
  r.lower_improved = delta_lower_improved(p, a, hk_grid);
  const auto asym = delta_asymptotic_bounds(a);
  r.asymptotic_upper = asym.upper;
  r.asymptotic_lower = asym.lower;
  if (a < 1.0) {
    const auto totals = corner_total_bounds(ChannelParams::symmetric(p, a));
    r.corner_total_lower = totals.lower;
    r.corner_total_upper = totals.upper;
  } else {
    r.corner_total_lower = r.corner_total_upper = half_log2(1 + 2 * p);
  }
  return r;
}

}  // namespace gic
