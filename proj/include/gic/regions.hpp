#pragma once

// Outer bounds on the capacity region of a weak interference channel,
// represented as finite lists of half-planes c1*R1 + c2*R2 <= bound on the
// non-negative quadrant.

#include <string>
#include <vector>

#include "gic/bound_value.hpp"
#include "gic/channel.hpp"

namespace gic {

inline constexpr double kDefaultMembershipTol = 1e-9;

struct LinearRateConstraint {
  double c1;
  double c2;
  double bound;
  std::string tag;
};

class RateRegion {
 public:
  RateRegion() = default;
  /// Throws DomainError if a constraint has c1 + c2 <= 0 or a negative
  /// coefficient.
  explicit RateRegion(std::vector<LinearRateConstraint> constraints);

  const std::vector<LinearRateConstraint>& constraints() const { return constraints_; }

  /// Constraint with the given tag; throws std::out_of_range if absent.
  const LinearRateConstraint& at(const std::string& tag) const;

  bool contains(RatePair point, double tol = kDefaultMembershipTol) const;

  /// Vertices of the polygon (including the origin), counter-clockwise.
  std::vector<RatePair> vertices() const;

  /// Outer boundary from (0, R2max) to (R1max, 0), ordered by increasing r1.
  std::vector<RatePair> boundary() const;

  /// max of w1*R1 + w2*R2 over the region, by vertex enumeration.
  double max_weighted(double w1, double w2) const;

 private:
  std::vector<LinearRateConstraint> constraints_;
};

bool region_contains(const RateRegion& region, RatePair point,
                     double tol = kDefaultMembershipTol);

/// Etkin-Tse-Wang outer bound: R1, R2, three sum-rate constraints, 2R1+R2 and
/// R1+2R2. The 2R1+R2 constraint uses the (1+P1)/(1+a21 P1) middle term.
RateRegion etw_region(const ChannelParams& params);

/// Telatar-Tse outer region R_o whose (-1/2, -1/2) shift lies inside the
/// Han-Kobayashi region. Its 2R1+R2 middle term is log(1 + P1/(1+a21 P1)).
RateRegion telatar_tse_region(const ChannelParams& params);

/// Power split of Kramer's degraded-broadcast outer bound K1.
struct KramerRegionParams {
  double beta;
  double p_prime;  // P2 + P1/a21
};

/// beta range [P2/((1+P1)P'), P2/P'] for K1.
struct BetaRange {
  double lo;
  double hi;
  double p_prime;
};

BetaRange kramer_beta_range(const ChannelParams& params);

/// Corner of the K1 box at a given split; throws DomainError if beta lies
/// outside its legal range.
RatePair kramer_k1_corner(const ChannelParams& params, KramerRegionParams split);

/// Largest R2 allowed by K1 at the given R1, from the analytic inversion of
/// the R1 constraint. Returns a negative value when r1 exceeds C1.
double kramer_r2_max(const ChannelParams& params, double r1);

/// Membership in K = K1 ∩ K2 using the analytic per-rate bound.
bool kramer_contains(const ChannelParams& params, RatePair point,
                     double tol = kDefaultMembershipTol);

/// K1 boundary traced over a uniform beta grid, ordered by increasing r1.
std::vector<RatePair> kramer_boundary(const ChannelParams& params, int points = 1001);

struct KramerCornerBound {
  BoundValue bound;   // 0.5 log2(1 + P2/(1+P1)) + delta(eps)
  double delta;       // delta(eps)
  double linear_cap;  // (1 + (1+P1)/(a21 P2)) * eps, strict upper bound on delta for eps > 0
  double beta;        // split solving R1 = C1 - eps
};

/// Upper bound on R2 from K1 once R1 >= C1 - epsilon.
KramerCornerBound kramer_r2_at_r1(const ChannelParams& params, double epsilon);

/// CSV rows "tag,c1,c2,bound" with a header line.
std::string region_to_csv(const RateRegion& region);

/// CSV rows "r1,r2" with a header line.
std::string polyline_to_csv(const std::vector<RatePair>& points);

}  // namespace gic
