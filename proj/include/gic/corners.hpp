#pragma once

// Interval bounds on the unknown corner points of the capacity region.

#include <string_view>

#include "gic/bound_value.hpp"
#include "gic/channel.hpp"

namespace gic {

enum class CornerTerm { ETW, Kramer };

std::string_view to_string(CornerTerm term);

struct RateInterval {
  double lo;
  double hi;
};

struct CornerBounds {
  RateInterval corner_at_c1;  // R2 when R1 = C1
  RateInterval corner_at_c2;  // R1 when R2 = C2
  CornerTerm active_at_c1;
  CornerTerm active_at_c2;
};

/// Weak channels only. Ties between the two upper terms are tagged Kramer.
CornerBounds weak_corner_bounds(const ChannelParams& params);

/// Upper bound on the other user's rate once `constrained_user` (1 or 2)
/// transmits at rate >= C - epsilon. Requires epsilon > 0.
BoundValue rate_tradeoff_bound(const ChannelParams& params, double epsilon, int constrained_user);

struct SymmetricCornerUpper {
  BoundValue bound;
  double etw_term;
  double kramer_term;
};

/// Upper bound on the unknown corner rate R_c of a symmetric weak channel.
/// active_term is ETW exactly when p > etw_kramer_threshold(a).
SymmetricCornerUpper symmetric_corner_upper(double p, double a);

/// SNR above which the ETW corner bound beats Kramer's, for a in (0,1).
double etw_kramer_threshold(double a);

struct MixedCornerReport {
  /// Bound on the weak-side user's partner: R2 when R1 >= C1 - eps for
  /// a12 >= 1 > a21 (mirrored channels swap the roles).
  BoundValue sum_rate_corner;
  /// Bound on R1 when R2 >= C2 - eps (mirrored: R2 when R1 >= C1 - eps),
  /// reported at its eps -> 0 limit.
  BoundValue other_corner;
  bool branch_one;  // 1 - a12 < (a12 a21 - 1) P1 in the a12 >= 1 orientation
  bool mirrored;    // input had a21 >= 1 > a12
};

MixedCornerReport mixed_corner_report(const ChannelParams& params, double epsilon);

struct OneSidedCorners {
  RatePair exact_corner;       // (C1, 0.5 log2(1 + P2/(1 + a P1)))
  RateInterval r1_at_c2;       // bounds on R1 at the corner (R1, C2)
};

/// One-sided channel with a12 = 0 and a21 = a in (0,1).
OneSidedCorners one_sided_corner_bounds(double p1, double p2, double a);

}  // namespace gic
