#pragma once

// Upper and lower bounds on the sum capacity of a weak interference channel.
// The optimization-based bounds are stated for the symmetric channel
// (P1 = P2 = p, a12 = a21 = a).

#include <optional>

#include "gic/bound_value.hpp"
#include "gic/channel.hpp"
#include "gic/optimizer.hpp"

namespace gic {

/// 0.5 * min of the three ETW sum terms; active_term is "term1".."term3".
BoundValue etw_sum_upper(const ChannelParams& params);

/// 0.5 * min of the three Telatar-Tse sum constraints, minus one bit. Valid
/// only for symmetric channels with p at or above the quartic root.
BoundValue hk_sum_lower_half_bit(const ChannelParams& params);

struct Lemma1Certificate {
  bool valid;
  double quartic_value;  // p^4 + p^3 - 6p^2 - 7p - 2
};

Lemma1Certificate lemma1_certificate(double p);

/// 0.5 log2(1+p) - (1/6)[log2(1+p+ap) + log2(1+p/(1+ap)) + log2(1+ap+p/(1+ap))]
/// for a in [0,1]. Positive on (0,1] iff the symmetric sum constraint binds.
double lemma1_f(double p, double a);

/// Han-Kobayashi power/time split: private fractions u, v in [0,1] and the
/// sharing parameter t in [0, 1/2].
struct HkSplit {
  double u;
  double v;
  double t;
};

/// The three-parameter HK sum rate rho(p, a, u, v, t).
double hk_rho(double p, double a, HkSplit split);

/// max rho over the split box. argopt = {u, v, t}.
OptimizationResult hk_sum_lower_optimized(double p, double a, const GridSpec& grid = {});

struct EtkinParams {
  double alpha;  // [-1, 1]
  double sigma;  // [0, 1/sqrt(a)]
  int sign;      // +1 or -1, picks the root for rho
};

/// Etkin's two-term expression; nullopt when the point is infeasible.
std::optional<double> etkin_objective(double p, double a, EtkinParams params);

inline GridSpec etkin_default_grid() {
  GridSpec g;
  g.points_per_axis = 61;
  return g;
}

/// min over (alpha, sigma) for both signs. argopt = {alpha, sigma, sign}.
OptimizationResult etkin_sum_upper(double p, double a, const GridSpec& grid = etkin_default_grid());

/// Kramer's closed-form symmetric sum bound, a in (0,1].
BoundValue kramer_sum_upper(double p, double a);

/// log2(1 + p/(1+ap)): both users treat interference as noise.
double tin_sum_rate(double p, double a);

struct TinSubclass {
  bool in_subclass;
  double p_cap;  // (sqrt(a) - 2a)/(2a^2), 0 when a >= 1/4
  std::optional<BoundValue> exact_sum;
};

TinSubclass tin_subclass(double p, double a);

struct SumBounds {
  BoundValue upper;
  BoundValue lower;
  BoundValue etw;
  BoundValue kramer;
  BoundValue half_bit;
  OptimizationResult etkin;
  OptimizationResult hk;
  TinSubclass tin;
};

/// upper = min{etw, etkin, kramer}, replaced by the exact TIN value inside the
/// subclass; lower = max{half-bit (if valid), HK optimum, TIN}.
SumBounds best_sum_bounds(double p, double a, const GridSpec& hk_grid = {},
                          const GridSpec& etkin_grid = etkin_default_grid());

/// Throws unless p > 0 finite and 0 < a < 1 (kMinWeakGain <= a).
void require_symmetric_weak(double p, double a, const char* op);

}  // namespace gic
