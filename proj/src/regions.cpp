#include "gic/regions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "gic/csv.hpp"

namespace gic {

using detail::half_log2;

RateRegion::RateRegion(std::vector<LinearRateConstraint> constraints)
    : constraints_(std::move(constraints)) {
  for (const auto& c : constraints_) {
    if (c.c1 < 0.0 || c.c2 < 0.0 || !(c.c1 + c.c2 > 0.0)) {
      throw DomainError("rate constraint '" + c.tag + "' needs c1, c2 >= 0 and c1 + c2 > 0");
    }
    if (!std::isfinite(c.bound)) {
      throw DomainError("rate constraint '" + c.tag + "' has a non-finite bound");
    }
  }
}

const LinearRateConstraint& RateRegion::at(const std::string& tag) const {
  auto it = std::find_if(constraints_.begin(), constraints_.end(),
                         [&](const auto& c) { return c.tag == tag; });
  if (it == constraints_.end()) throw std::out_of_range("no constraint tagged " + tag);
  return *it;
}

bool RateRegion::contains(RatePair point, double tol) const {
  if (point.r1 < -tol || point.r2 < -tol) return false;
  return std::all_of(constraints_.begin(), constraints_.end(), [&](const auto& c) {
    return c.c1 * point.r1 + c.c2 * point.r2 <= c.bound + tol;
  });
}

namespace {

// Sutherland-Hodgman step: keep the part of a convex polygon with c.x <= b.
std::vector<RatePair> clip(const std::vector<RatePair>& poly, const LinearRateConstraint& c) {
  std::vector<RatePair> out;
  if (poly.empty()) return out;
  auto side = [&](RatePair p) { return c.c1 * p.r1 + c.c2 * p.r2 - c.bound; };
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const RatePair cur = poly[i];
    const RatePair nxt = poly[(i + 1) % poly.size()];
    const double sc = side(cur);
    const double sn = side(nxt);
    if (sc <= 0.0) out.push_back(cur);
    if ((sc < 0.0 && sn > 0.0) || (sc > 0.0 && sn < 0.0)) {
      const double t = sc / (sc - sn);
      out.push_back({cur.r1 + t * (nxt.r1 - cur.r1), cur.r2 + t * (nxt.r2 - cur.r2)});
    }
  }
  return out;
}

bool near(RatePair a, RatePair b) {
  return std::abs(a.r1 - b.r1) <= 1e-12 && std::abs(a.r2 - b.r2) <= 1e-12;
}

}  // namespace

std::vector<RatePair> RateRegion::vertices() const {
  double extent = 1.0;
  for (const auto& c : constraints_) {
    const double cmin = std::min(c.c1 > 0 ? c.c1 : c.c2, c.c2 > 0 ? c.c2 : c.c1);
    extent = std::max(extent, 1.0 + std::abs(c.bound) / cmin);
  }
  std::vector<RatePair> poly{{0.0, 0.0}, {extent, 0.0}, {extent, extent}, {0.0, extent}};
  for (const auto& c : constraints_) poly = clip(poly, c);

  std::vector<RatePair> out;
  for (const auto& p : poly) {
    if (out.empty() || !near(out.back(), p)) out.push_back(p);
  }
  while (out.size() > 1 && near(out.front(), out.back())) out.pop_back();
  return out;
}

std::vector<RatePair> RateRegion::boundary() const {
  std::vector<RatePair> pts;
  for (const auto& v : vertices()) {
    if (v.r1 == 0.0 && v.r2 == 0.0) continue;
    pts.push_back(v);
  }
  std::sort(pts.begin(), pts.end(), [](RatePair a, RatePair b) {
    return a.r1 < b.r1 || (a.r1 == b.r1 && a.r2 > b.r2);
  });
  return pts;
}

double RateRegion::max_weighted(double w1, double w2) const {
  double best = 0.0;
  for (const auto& v : vertices()) best = std::max(best, w1 * v.r1 + w2 * v.r2);
  return best;
}

bool region_contains(const RateRegion& region, RatePair point, double tol) {
  return region.contains(point, tol);
}

RateRegion etw_region(const ChannelParams& params) {
  require_weak(params, "etw_region");
  const double p1 = params.p1(), p2 = params.p2();
  const double a12 = params.a12(), a21 = params.a21();

  const double sum1 = half_log2(1 + p1) + half_log2(1 + p2 / (1 + a21 * p1));
  const double sum2 = half_log2(1 + p2) + half_log2(1 + p1 / (1 + a12 * p2));
  const double cross1 = half_log2(1 + a12 * p2 + p1 / (1 + a21 * p1));
  const double cross2 = half_log2(1 + a21 * p1 + p2 / (1 + a12 * p2));
  const double two_r1 = half_log2(1 + p1 + a12 * p2) + half_log2((1 + p1) / (1 + a21 * p1)) + cross2;
  const double two_r2 = half_log2(1 + p2 + a21 * p1) + half_log2((1 + p2) / (1 + a12 * p2)) + cross1;

  return RateRegion({
      {1, 0, single_user_capacity(p1), "etw.r1"},
      {0, 1, single_user_capacity(p2), "etw.r2"},
      {1, 1, sum1, "etw.sum1"},
      {1, 1, sum2, "etw.sum2"},
      {1, 1, cross1 + cross2, "etw.sum3"},
      {2, 1, two_r1, "etw.2r1+r2"},
      {1, 2, two_r2, "etw.r1+2r2"},
  });
}

RateRegion telatar_tse_region(const ChannelParams& params) {
  require_weak(params, "telatar_tse_region");
  const double p1 = params.p1(), p2 = params.p2();
  const double a12 = params.a12(), a21 = params.a21();

  const double mac1 = half_log2(1 + p1 + a12 * p2);
  const double mac2 = half_log2(1 + p2 + a21 * p1);
  const double priv1 = half_log2(1 + p1 / (1 + a21 * p1));
  const double priv2 = half_log2(1 + p2 / (1 + a12 * p2));
  const double cross1 = half_log2(1 + a12 * p2 + p1 / (1 + a21 * p1));
  const double cross2 = half_log2(1 + a21 * p1 + p2 / (1 + a12 * p2));

  return RateRegion({
      {1, 0, single_user_capacity(p1), "tt.r1"},
      {0, 1, single_user_capacity(p2), "tt.r2"},
      {1, 1, mac1 + priv2, "tt.sum1"},
      {1, 1, mac2 + priv1, "tt.sum2"},
      {1, 1, cross1 + cross2, "tt.sum3"},
      {2, 1, mac1 + priv1 + cross2, "tt.2r1+r2"},
      {1, 2, mac2 + priv2 + cross1, "tt.r1+2r2"},
  });
}

BetaRange kramer_beta_range(const ChannelParams& params) {
  require_weak(params, "kramer_beta_range");
  const double p_prime = params.p2() + params.p1() / params.a21();
  return {params.p2() / ((1 + params.p1()) * p_prime), params.p2() / p_prime, p_prime};
}

RatePair kramer_k1_corner(const ChannelParams& params, KramerRegionParams split) {
  const auto range = kramer_beta_range(params);
  const double slack = 1e-12 * range.hi;
  if (split.beta < range.lo - slack || split.beta > range.hi + slack) {
    throw DomainError("kramer_k1_corner: beta outside its legal interval");
  }
  const double pp = split.p_prime;
  return {half_log2(1 + (1 - split.beta) * pp / (split.beta * pp + 1 / params.a21())),
          half_log2(1 + split.beta * pp)};
}

double kramer_r2_max(const ChannelParams& params, double r1) {
  const auto range = kramer_beta_range(params);
  const double pp = range.p_prime;
  if (r1 <= 0.0) return half_log2(1 + range.hi * pp);
  const double snr = std::expm1(2.0 * r1 * std::numbers::ln2);
  double beta = (pp - snr / params.a21()) / (pp * (1 + snr));
  if (beta < range.lo * (1 - 1e-12)) return -1.0;
  beta = std::clamp(beta, range.lo, range.hi);
  return half_log2(1 + beta * pp);
}

bool kramer_contains(const ChannelParams& params, RatePair point, double tol) {
  if (point.r1 < -tol || point.r2 < -tol) return false;
  const double r2_cap = kramer_r2_max(params, std::max(point.r1 - tol, 0.0));
  const double r1_cap = kramer_r2_max(params.swapped(), std::max(point.r2 - tol, 0.0));
  return r2_cap >= 0.0 && r1_cap >= 0.0 && point.r2 <= r2_cap + tol && point.r1 <= r1_cap + tol;
}

std::vector<RatePair> kramer_boundary(const ChannelParams& params, int points) {
  if (points < 2) throw DomainError("kramer_boundary: need at least 2 points");
  const auto range = kramer_beta_range(params);
  std::vector<RatePair> out;
  out.reserve(static_cast<std::size_t>(points));
  for (int i = points - 1; i >= 0; --i) {
    const double beta = (i == points - 1)
                            ? range.hi
                            : range.lo + (range.hi - range.lo) * i / (points - 1);
    out.push_back(kramer_k1_corner(params, {beta, range.p_prime}));
  }
  return out;
}

KramerCornerBound kramer_r2_at_r1(const ChannelParams& params, double epsilon) {
  require_weak(params, "kramer_r2_at_r1");
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw DomainError("kramer_r2_at_r1: epsilon must be finite and >= 0");
  }
  const double p1 = params.p1(), p2 = params.p2(), a21 = params.a21();
  const double grow = std::expm1(2.0 * epsilon * std::numbers::ln2);  // 2^{2eps} - 1
  const double delta = half_log2(1 + grow * (p2 + (1 + p1) / a21) / (1 + p1 + p2));
  const double base = half_log2(1 + p2 / (1 + p1));
  const double p_prime = p2 + p1 / a21;
  const double beta = ((grow + 1) * p2 + grow * (1 + p1) / a21) / ((1 + p1) * p_prime);

  KramerCornerBound out;
  out.bound = {base + delta, true, "Kramer", "R2 bound once R1 >= C1 - eps"};
  out.delta = delta;
  out.linear_cap = (1 + (1 + p1) / (a21 * p2)) * epsilon;
  out.beta = beta;
  return out;
}

std::string region_to_csv(const RateRegion& region) {
  std::ostringstream os;
  os << "tag,c1,c2,bound\n";
  for (const auto& c : region.constraints()) {
    os << csv::escape(c.tag) << ',' << csv::fixed6(c.c1) << ',' << csv::fixed6(c.c2) << ','
       << csv::fixed6(c.bound) << '\n';
  }
  return os.str();
}

std::string polyline_to_csv(const std::vector<RatePair>& points) {
  std::ostringstream os;
  os << "r1,r2\n";
  for (const auto& p : points) os << csv::fixed6(p.r1) << ',' << csv::fixed6(p.r2) << '\n';
  return os.str();
}

}  // namespace gic
