#include "gic/corners.hpp"

#include <cmath>
#include <string>

namespace gic {

using detail::half_log2;

std::string_view to_string(CornerTerm term) {
  return term == CornerTerm::ETW ? "ETW" : "Kramer";
}

namespace {

struct OneCorner {
  RateInterval interval;
  CornerTerm active;
};

// R2 range at R1 = C1; the R1 range follows by swapping the users.
OneCorner corner_r2_given_c1(const ChannelParams& params) {
  const double p1 = params.p1(), p2 = params.p2();
  const double lo = conjectured_corner_rates(params).r2;
  const double etw = lo + half_log2(1 + p2 / ((1 + params.a21() * p1) * (1 + params.a12() * p2)));
  const double kramer = half_log2(1 + p2 / (1 + p1));
  if (etw < kramer) return {{lo, etw}, CornerTerm::ETW};
  return {{lo, kramer}, CornerTerm::Kramer};
}

}  // namespace

CornerBounds weak_corner_bounds(const ChannelParams& params) {
  require_weak(params, "weak_corner_bounds");
  const auto at_c1 = corner_r2_given_c1(params);
  const auto at_c2 = corner_r2_given_c1(params.swapped());
  return {at_c1.interval, at_c2.interval, at_c1.active, at_c2.active};
}

BoundValue rate_tradeoff_bound(const ChannelParams& params, double epsilon, int constrained_user) {
  require_weak(params, "rate_tradeoff_bound");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw DomainError("rate_tradeoff_bound: epsilon must be finite and > 0");
  }
  if (constrained_user != 1 && constrained_user != 2) {
    throw DomainError("rate_tradeoff_bound: constrained_user must be 1 or 2");
  }
  // Orient so that user 1 is the one held near its single-user capacity.
  const ChannelParams ch = constrained_user == 1 ? params : params.swapped();
  const double p1 = ch.p1(), p2 = ch.p2();
  const double etw = conjectured_corner_rates(ch).r2 +
                     half_log2(1 + p2 / ((1 + ch.a21() * p1) * (1 + ch.a12() * p2))) +
                     2 * epsilon;
  const double kramer = half_log2(1 + p2 / (1 + p1)) + (1 + (1 + p1) / (ch.a21() * p2)) * epsilon;

  const std::string note = constrained_user == 1 ? "R2 bound given R1 >= C1 - eps"
                                                 : "R1 bound given R2 >= C2 - eps";
  if (etw < kramer) return {etw, true, "ETW", note};
  return {kramer, true, "Kramer", note};
}

double etw_kramer_threshold(double a) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("etw_kramer_threshold: a must lie in (0,1)");
  return (2 * a * a - a + 1 + std::sqrt(5 * a * a - 2 * a + 1)) / (2 * a * a * (1 - a));
}

SymmetricCornerUpper symmetric_corner_upper(double p, double a) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("symmetric_corner_upper: p must be > 0");
  if (!(a > 0.0 && a < 1.0)) throw DomainError("symmetric_corner_upper: a must lie in (0,1)");
  const double etw = half_log2(1 + a * p / (1 + p)) + half_log2(1 + p / ((1 + a * p) * (1 + a * p)));
  const double kramer = half_log2(1 + p / (1 + p));
  const bool etw_active = p > etw_kramer_threshold(a);
  SymmetricCornerUpper out;
  out.etw_term = etw;
  out.kramer_term = kramer;
  out.bound = {std::min(etw, kramer), true, etw_active ? "ETW" : "Kramer",
               "upper bound on the unknown corner rate"};
  return out;
}

MixedCornerReport mixed_corner_report(const ChannelParams& params, double epsilon) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw DomainError("mixed_corner_report: epsilon must be finite and >= 0");
  }
  const auto kind = classify(params).kind;
  if (kind != RegimeKind::Mixed && kind != RegimeKind::Degraded) {
    throw RegimeError("mixed_corner_report: requires a mixed channel, got " +
                      std::string(to_string(kind)));
  }
  const bool mirrored = params.a12() < 1.0;
  const ChannelParams ch = mirrored ? params.swapped() : params;
  const double p1 = ch.p1(), p2 = ch.p2(), a12 = ch.a12(), a21 = ch.a21();
  const std::string u1 = mirrored ? "2" : "1";
  const std::string u2 = mirrored ? "1" : "2";

  MixedCornerReport out;
  out.mirrored = mirrored;
  out.branch_one = (1 - a12) < (a12 * a21 - 1) * p1;
  const std::string cond = "R" + u2 + " bound given R" + u1 + " >= C" + u1 + " - eps";
  if (out.branch_one) {
    out.sum_rate_corner = {half_log2(1 + p2 / (1 + a21 * p1)) + epsilon, true, "branch1",
                           cond + "; strictly smaller than conjecture"};
  } else {
    out.sum_rate_corner = {conjectured_corner_rates(ch).r2 + epsilon, true, "branch2",
                           cond + "; coincides with conjecture"};
  }
  out.other_corner = {half_log2(1 + p1 / (1 + p2)), epsilon == 0.0, "Kramer",
                      "R" + u1 + " bound given R" + u2 + " >= C" + u2 +
                          " - eps; asymptotic in eps (delta(eps) omitted)"};
  return out;
}

OneSidedCorners one_sided_corner_bounds(double p1, double p2, double a) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("one_sided_corner_bounds: a must lie in (0,1)");
  if (!(p1 > 0.0) || !(p2 > 0.0) || !std::isfinite(p1) || !std::isfinite(p2)) {
    throw DomainError("one_sided_corner_bounds: powers must be finite and > 0");
  }
  OneSidedCorners out;
  out.exact_corner = {single_user_capacity(p1), half_log2(1 + p2 / (1 + a * p1))};
  out.r1_at_c2 = {half_log2(1 + a * p1 / (1 + p2)), half_log2(1 + p1 / (1 + p2))};
  return out;
}

}  // namespace gic
