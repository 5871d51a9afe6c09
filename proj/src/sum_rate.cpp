#include "gic/sum_rate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace gic {

using detail::clamp_roundoff;
using detail::half_log2;

namespace {

BoundValue pick(std::span<const BoundValue> bounds, bool smallest) {
  const BoundValue* best = nullptr;
  for (const auto& b : bounds) {
    if (!b.valid) continue;
    if (best == nullptr) {
      best = &b;
      continue;
    }
    const bool wins = smallest ? b.value < best->value : b.value > best->value;
    if (wins || (b.value == best->value && b.active_term < best->active_term)) best = &b;
  }
  if (best == nullptr) throw DomainError("no valid bound to compose");
  return *best;
}

}  // namespace

BoundValue min_bound(std::span<const BoundValue> bounds) { return pick(bounds, true); }
BoundValue max_bound(std::span<const BoundValue> bounds) { return pick(bounds, false); }

void require_symmetric_weak(double p, double a, const char* op) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError(std::string(op) + ": p must be finite and > 0");
  if (!(a >= kMinWeakGain && a < 1.0)) {
    throw RegimeError(std::string(op) + ": requires a weak symmetric channel, 0 < a < 1");
  }
}

BoundValue etw_sum_upper(const ChannelParams& params) {
  require_weak(params, "etw_sum_upper");
  const double p1 = params.p1(), p2 = params.p2(), a12 = params.a12(), a21 = params.a21();
  const std::array<double, 3> terms{
      std::log2(1 + p1) + std::log2(1 + p2 / (1 + a21 * p1)),
      std::log2(1 + p2) + std::log2(1 + p1 / (1 + a12 * p2)),
      std::log2(1 + a12 * p2 + p1 / (1 + a21 * p1)) + std::log2(1 + a21 * p1 + p2 / (1 + a12 * p2)),
  };
  const auto it = std::min_element(terms.begin(), terms.end());
  const auto idx = static_cast<int>(it - terms.begin()) + 1;
  return {0.5 * *it, true, "term" + std::to_string(idx), "ETW sum-rate upper bound"};
}

Lemma1Certificate lemma1_certificate(double p) {
  const double q = (((p + 1) * p - 6) * p - 7) * p - 2;
  return {q >= 0.0, q};
}

double lemma1_f(double p, double a) {
  if (!(a >= 0.0 && a <= 1.0)) throw DomainError("lemma1_f: a must lie in [0,1]");
  const double ap = a * p;
  return half_log2(1 + p) -
         (std::log2(1 + p + ap) + std::log2(1 + p / (1 + ap)) + std::log2(1 + ap + p / (1 + ap))) / 6.0;
}

BoundValue hk_sum_lower_half_bit(const ChannelParams& params) {
  require_weak(params, "hk_sum_lower_half_bit");
  const double p1 = params.p1(), p2 = params.p2(), a12 = params.a12(), a21 = params.a21();
  const std::array<double, 3> terms{
      std::log2(1 + p1 + a12 * p2) + std::log2(1 + p2 / (1 + a12 * p2)),
      std::log2(1 + p2 + a21 * p1) + std::log2(1 + p1 / (1 + a21 * p1)),
      std::log2(1 + a12 * p2 + p1 / (1 + a21 * p1)) + std::log2(1 + a21 * p1 + p2 / (1 + a12 * p2)),
  };
  const auto it = std::min_element(terms.begin(), terms.end());
  BoundValue out{0.5 * *it - 1.0, false, "term" + std::to_string(it - terms.begin() + 1), ""};
  if (!params.is_symmetric()) {
    out.note = "condition unverified for asymmetric channels";
  } else if (lemma1_certificate(params.p1()).valid) {
    out.valid = true;
    out.note = "sum constraint active (quartic certificate)";
  } else {
    out.note = "p below the quartic root; sum constraint not certified";
  }
  return out;
}

double hk_rho(double p, double a, HkSplit s) {
  const double u = s.u, v = s.v, t = s.t;
  const double ub = 1 - u, vb = 1 - v;
  const double tp = 2 * t * p;  // 2 t P
  auto lg = [](double x) { return std::log2(x); };
  const double base = t * lg(1 + u * tp / (1 + a * v * tp)) + t * lg(1 + v * tp / (1 + a * u * tp)) +
                      (1 - 2 * t) / 2 * lg(1 + 2 * (1 + 2 * t) * p);
  const double m1 = t / 2 * lg(1 + (ub * tp + a * vb * tp) / (1 + u * tp + a * v * tp)) +
                    t / 2 * lg(1 + (vb * tp + a * ub * tp) / (1 + v * tp + a * u * tp));
  const double m2 = t * lg(1 + ub * tp / (1 + u * tp + a * v * tp)) +
                    t * lg(1 + vb * tp / (1 + v * tp + a * u * tp));
  const double m3 = t * lg(1 + a * ub * tp / (1 + a * u * tp + v * tp)) +
                    t * lg(1 + a * vb * tp / (1 + u * tp + a * v * tp));
  return base + std::min({m1, m2, m3});
}

OptimizationResult hk_sum_lower_optimized(double p, double a, const GridSpec& grid) {
  require_symmetric_weak(p, a, "hk_sum_lower_optimized");
  if (grid.points_per_axis < 11) throw DomainError("hk_sum_lower_optimized: grid needs >= 11 points per axis");
  const std::array<Interval, 3> box{{{0.0, 1.0}, {0.0, 1.0}, {0.0, 0.5}}};
  const Objective f = [p, a](std::span<const double> x) -> std::optional<double> {
    return hk_rho(p, a, {x[0], x[1], x[2]});
  };
  return optimize(f, box, Direction::Maximize, grid);
}

std::optional<double> etkin_objective(double p, double a, EtkinParams e) {
  const double sa = std::sqrt(a);
  const double al = e.alpha, s = e.sigma;
  const double rad = clamp_roundoff((1 - al * al) * (1 - s * s * a));
  if (rad < 0.0) return std::nullopt;
  const double rho = al * s * sa + (e.sign >= 0 ? 1.0 : -1.0) * std::sqrt(rad);
  if (std::abs(rho) > 1.0) return std::nullopt;
  const double gamma = clamp_roundoff(al * al - 2 * al * rho * s * sa + s * s * a);
  if (gamma < 0.0) return std::nullopt;
  const double den = (1 - rho * rho) * s * s;
  if (!(den > 0.0)) return std::nullopt;

  const double t1 = std::min(half_log2(1 + p * (1 + al * al) * gamma / den),
                             std::log2(1 + al * al * p * gamma / den));
  const double num = (1 + p * (1 + a)) * (p * (1 + al * al) + s * s) -
                     std::pow(p * (1 + al * sa) + rho * s, 2);
  const double dd = p * (1 + al * al) * gamma + (1 - rho * rho) * s * s;
  if (!(num > 0.0) || !(dd > 0.0)) return std::nullopt;
  const double v = t1 + std::log2(num / dd);
  if (!std::isfinite(v)) return std::nullopt;
  return v;
}

OptimizationResult etkin_sum_upper(double p, double a, const GridSpec& grid) {
  require_symmetric_weak(p, a, "etkin_sum_upper");
  if (grid.points_per_axis < 11) throw DomainError("etkin_sum_upper: grid needs >= 11 points per axis");
  const std::array<Interval, 2> box{{{-1.0, 1.0}, {0.0, 1.0 / std::sqrt(a)}}};

  OptimizationResult best;
  bool have = false;
  long long evaluations = 0;
  for (int sign : {-1, 1}) {
    const Objective f = [p, a, sign](std::span<const double> x) {
      return etkin_objective(p, a, {x[0], x[1], sign});
    };
    OptimizationResult r;
    try {
      r = optimize(f, box, Direction::Minimize, grid);
    } catch (const DomainError&) {
      continue;  // this root admits no feasible grid point
    }
    evaluations += r.grid_points;
    r.argopt.push_back(sign);
    // sign -1 is visited first, so on equal values the lexicographically
    // smaller (alpha, sigma, sign) vector wins either way.
    if (!have || r.value < best.value ||
        (r.value == best.value && r.argopt < best.argopt)) {
      best = std::move(r);
      have = true;
    }
  }
  if (!have) throw DomainError("etkin_sum_upper: no feasible grid point for either sign");
  best.grid_points = evaluations;
  return best;
}

BoundValue kramer_sum_upper(double p, double a) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("kramer_sum_upper: p must be finite and > 0");
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("kramer_sum_upper: a must lie in (0,1]");
  const double k = 1 / a - 1;
  const double b = 1 / (a * a) + 2 * p * k - 1;
  double disc = b * b - 4 * p * p * k * k;
  if (disc < 0.0 && disc > -1e-9) disc = 0.0;
  if (disc < 0.0) throw DomainError("kramer_sum_upper: negative discriminant");
  return {half_log2(1 + 2 * p + b / 2 - 0.5 * std::sqrt(disc)), true, "kramer",
          "Kramer sum-rate upper bound"};
}

double tin_sum_rate(double p, double a) {
  if (!(p >= 0.0) || !(a >= 0.0)) throw DomainError("tin_sum_rate: p and a must be >= 0");
  return std::log2(1 + p / (1 + a * p));
}

TinSubclass tin_subclass(double p, double a) {
  if (!(p > 0.0) || !(a > 0.0) || !std::isfinite(p) || !std::isfinite(a)) {
    throw DomainError("tin_subclass: p and a must be finite and > 0");
  }
  TinSubclass out{false, 0.0, std::nullopt};
  if (a < 0.25) {
    out.p_cap = (std::sqrt(a) - 2 * a) / (2 * a * a);
    out.in_subclass = p <= out.p_cap;
  }
  if (out.in_subclass) {
    out.exact_sum = BoundValue{tin_sum_rate(p, a), true, "tin", "exact"};
  }
  return out;
}

SumBounds best_sum_bounds(double p, double a, const GridSpec& hk_grid, const GridSpec& etkin_grid) {
  require_symmetric_weak(p, a, "best_sum_bounds");
  const auto ch = ChannelParams::symmetric(p, a);
  SumBounds out;
  out.etw = etw_sum_upper(ch);
  out.kramer = kramer_sum_upper(p, a);
  out.half_bit = hk_sum_lower_half_bit(ch);
  out.etkin = etkin_sum_upper(p, a, etkin_grid);
  out.hk = hk_sum_lower_optimized(p, a, hk_grid);
  out.tin = tin_subclass(p, a);

  if (out.tin.in_subclass) {
    out.upper = *out.tin.exact_sum;
  } else {
    const std::array<BoundValue, 3> ups{
        BoundValue{out.etw.value, true, "etw", out.etw.note},
        BoundValue{out.etkin.value, true, "etkin", "Etkin sum-rate upper bound (grid optimum)"},
        out.kramer,
    };
    out.upper = min_bound(ups);
  }
  const std::array<BoundValue, 3> lows{
      BoundValue{out.half_bit.value, out.half_bit.valid, "half_bit", out.half_bit.note},
      BoundValue{out.hk.value, true, "hk", "HK three-parameter lower bound (grid optimum)"},
      BoundValue{tin_sum_rate(p, a), true, "tin", "treat interference as noise"},
  };
  out.lower = max_bound(lows);
  return out;
}

}  // namespace gic
