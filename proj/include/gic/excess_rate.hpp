#pragma once

// Bounds on Delta: the sum capacity minus the largest total rate attained at
// a corner point of the capacity region.

#include "gic/bound_value.hpp"
#include "gic/channel.hpp"
#include "gic/optimizer.hpp"
#include "gic/sum_rate.hpp"

namespace gic {

/// Bounds on the maximal R1 + R2 over the two corner points.
struct CornerTotal {
  double lower;
  double upper;
};

CornerTotal corner_total_bounds(const ChannelParams& params);

/// Symmetric closed forms accept a in (0,1]; a = 1 gives exactly 0.
BoundValue delta_upper_simple(double p, double a);
BoundValue delta_lower_simple(double p, double a);  // clamped at 0
double delta_lower_simple_raw(double p, double a);  // unclamped, no validity check

/// General (asymmetric) closed forms. The lower side is reported with
/// valid = false unless the channel is symmetric and certified.
BoundValue delta_upper_general(const ChannelParams& params);
BoundValue delta_lower_general(const ChannelParams& params);

/// 0.5 log2(1/(1+ap) + p/(1+ap)^2); only meaningful inside the TIN subclass.
double delta_tin_subclass_bound(double p, double a);

struct AsymptoticDelta {
  double upper;  // 0.5 log2(1/a)
  double lower;  // max{0, 0.5 log2(1+1/a) - 1}
};

AsymptoticDelta delta_asymptotic_bounds(double a);

/// min{etkin, kramer, etw, tin if exact} - corner total lower, then min-ed with
/// the simple bound (and the subclass bound), clamped at 0.
BoundValue delta_upper_improved(double p, double a, const GridSpec& etkin_grid = etkin_default_grid());

/// max{HK optimum, half-bit (if valid)} - corner total upper, then max-ed with
/// the simple bound, clamped at 0.
BoundValue delta_lower_improved(double p, double a, const GridSpec& hk_grid = {});

struct DeltaReport {
  BoundValue upper_simple;
  BoundValue lower_simple;
  BoundValue upper_improved;
  BoundValue lower_improved;
  double corner_total_lower = 0.0;
  double corner_total_upper = 0.0;
  double asymptotic_upper = 0.0;
  double asymptotic_lower = 0.0;
};

DeltaReport delta_bounds_improved(double p, double a, const GridSpec& hk_grid = {},
                                  const GridSpec& etkin_grid = etkin_default_grid());

}  // namespace gic
