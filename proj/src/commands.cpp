#include "gic/commands.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "gic/asymptotics.hpp"
#include "gic/corners.hpp"
#include "gic/excess_rate.hpp"
#include "gic/regions.hpp"
#include "gic/sum_rate.hpp"

namespace gic {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double p) { return 10.0 * std::log10(p); }

OptimizerGrids make_grids(std::optional<int> points, std::optional<int> rounds, int threads) {
  OptimizerGrids g{GridSpec{}, etkin_default_grid()};
  for (GridSpec* s : {&g.hk, &g.etkin}) {
    if (points) s->points_per_axis = *points;
    if (rounds) s->refinement_rounds = *rounds;
    s->threads = threads;
    validate(*s);
  }
  return g;
}

namespace {

ReportRow channel_row(const ChannelParams& ch) {
  ReportRow row;
  row.add("p1", ch.p1()).add("p2", ch.p2()).add("a12", ch.a12()).add("a21", ch.a21());
  return row;
}

void add_bound(ReportRow& row, const std::string& prefix, const BoundValue& b) {
  row.add(prefix, b.value).add(prefix + "_valid", b.valid).add(prefix + "_term", b.active_term);
}

}  // namespace

std::vector<ReportRow> cmd_classify(const ChannelParams& params) {
  const auto rc = classify(params);
  auto row = channel_row(params);
  row.add("kind", std::string(to_string(rc.kind)))
      .add("symmetric", rc.symmetric)
      .add("description", rc.description);
  return {row};
}

std::vector<ReportRow> cmd_corners(const ChannelParams& params, double epsilon) {
  const auto rc = classify(params);
  auto row = channel_row(params);
  row.add("kind", std::string(to_string(rc.kind)));
  const auto star = conjectured_corner_rates(params);
  const double c1 = single_user_capacity(params.p1()), c2 = single_user_capacity(params.p2());

  switch (rc.kind) {
    case RegimeKind::Weak: {
      const auto cb = weak_corner_bounds(params);
      row.add("c1", c1).add("c2", c2).add("r1_star", star.r1).add("r2_star", star.r2);
      row.add("r2_at_c1_lo", cb.corner_at_c1.lo)
          .add("r2_at_c1_hi", cb.corner_at_c1.hi)
          .add("r2_at_c1_term", std::string(to_string(cb.active_at_c1)));
      row.add("r1_at_c2_lo", cb.corner_at_c2.lo)
          .add("r1_at_c2_hi", cb.corner_at_c2.hi)
          .add("r1_at_c2_term", std::string(to_string(cb.active_at_c2)));
      if (epsilon > 0.0) {
        row.add("epsilon", epsilon);
        const auto t1 = rate_tradeoff_bound(params, epsilon, 1);
        const auto t2 = rate_tradeoff_bound(params, epsilon, 2);
        row.add("r2_given_r1_near_c1", t1.value).add("r2_given_r1_near_c1_term", t1.active_term);
        row.add("r1_given_r2_near_c2", t2.value).add("r1_given_r2_near_c2_term", t2.active_term);
      }
      break;
    }
    case RegimeKind::Mixed:
    case RegimeKind::Degraded: {
      const auto m = mixed_corner_report(params, epsilon);
      row.add("epsilon", epsilon).add("mirrored", m.mirrored).add("branch_one", m.branch_one);
      add_bound(row, "sum_rate_corner", m.sum_rate_corner);
      row.add("sum_rate_corner_note", m.sum_rate_corner.note);
      add_bound(row, "other_corner", m.other_corner);
      row.add("other_corner_note", m.other_corner.note);
      break;
    }
    case RegimeKind::OneSidedWeak: {
      if (params.a12() == 0.0 && params.a21() == 0.0) {
        row.add("c1", c1).add("c2", c2).add("note", std::string("no interference: (C1, C2) achievable"));
        break;
      }
      // One-sided bounds are stated with the interference landing on receiver 2.
      const bool flip = params.a21() == 0.0;
      const ChannelParams ch = flip ? params.swapped() : params;
      const auto os = one_sided_corner_bounds(ch.p1(), ch.p2(), ch.a21());
      row.add("interfered_user", flip ? 1LL : 2LL);
      row.add("exact_corner_r1", flip ? os.exact_corner.r2 : os.exact_corner.r1)
          .add("exact_corner_r2", flip ? os.exact_corner.r1 : os.exact_corner.r2);
      row.add("other_corner_lo", os.r1_at_c2.lo).add("other_corner_hi", os.r1_at_c2.hi);
      break;
    }
    default:
      row.add("r1_star", star.r1).add("r2_star", star.r2).add("c1", c1).add("c2", c2);
      row.add("note", std::string("strong interference: corners (min(R1*,C1), C2) and (C1, min(R2*,C2)) are exact"));
      break;
  }
  return {row};
}

std::vector<ReportRow> cmd_delta(const ChannelParams& params, const OptimizerGrids& grids) {
  auto row = channel_row(params);
  if (params.is_symmetric() && params.a12() > 0.0 && params.a12() <= 1.0) {
    const double p = params.p1(), a = params.a12();
    const auto r = delta_bounds_improved(p, a, grids.hk, grids.etkin);
    row.add("corner_total_lower", r.corner_total_lower).add("corner_total_upper", r.corner_total_upper);
    add_bound(row, "upper_simple", r.upper_simple);
    add_bound(row, "lower_simple", r.lower_simple);
    add_bound(row, "upper_improved", r.upper_improved);
    add_bound(row, "lower_improved", r.lower_improved);
    row.add("asymptotic_upper", r.asymptotic_upper).add("asymptotic_lower", r.asymptotic_lower);
    return {row};
  }
  const auto totals = corner_total_bounds(params);
  row.add("corner_total_lower", totals.lower).add("corner_total_upper", totals.upper);
  add_bound(row, "upper_simple", delta_upper_general(params));
  add_bound(row, "lower_simple", delta_lower_general(params));
  return {row};
}

std::vector<ReportRow> cmd_sumrate(double p, std::span<const double> a_values, const OptimizerGrids& grids) {
  std::vector<ReportRow> rows;
  for (double a : a_values) {
    const auto sb = best_sum_bounds(p, a, grids.hk, grids.etkin);
    ReportRow row;
    row.add("p", p).add("a", a);
    row.add("upper", sb.upper.value).add("lower", sb.lower.value);
    row.add("upper_term", sb.upper.active_term).add("lower_term", sb.lower.active_term);
    row.add("etw", sb.etw.value).add("etkin", sb.etkin.value).add("kramer", sb.kramer.value);
    row.add("etkin_alpha", sb.etkin.argopt[0]).add("etkin_sigma", sb.etkin.argopt[1]);
    row.add("etkin_sign", static_cast<long long>(sb.etkin.argopt[2]));
    row.add("hk", sb.hk.value).add("hk_u", sb.hk.argopt[0]).add("hk_v", sb.hk.argopt[1]).add("hk_t", sb.hk.argopt[2]);
    row.add("half_bit", sb.half_bit.value).add("half_bit_valid", sb.half_bit.valid);
    row.add("tin", tin_sum_rate(p, a)).add("tin_exact", sb.tin.in_subclass);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ReportRow> cmd_sumrate_general(const ChannelParams& params) {
  auto row = channel_row(params);
  add_bound(row, "etw_upper", etw_sum_upper(params));
  add_bound(row, "half_bit_lower", hk_sum_lower_half_bit(params));
  return {row};
}

std::vector<ReportRow> cmd_asymptotics(double alpha) {
  ReportRow row;
  row.add("alpha", alpha)
      .add("gdof", gdof(alpha))
      .add("delta_slope", delta_slope(alpha))
      .add("normalized_loss", normalized_loss(alpha));
  return {row};
}

std::vector<ReportRow> cmd_convergence(double alpha, std::span<const double> p_values) {
  std::vector<ReportRow> rows;
  const double target = delta_slope(alpha);
  for (const auto& r : convergence_probe(alpha, p_values)) {
    ReportRow row;
    row.add("alpha", alpha).add("p", r.p).add("a", r.a);
    row.add("upper_normalized", r.upper_normalized).add("lower_normalized", r.lower_normalized);
    row.add("delta_slope", target);
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

struct ScanPoint {
  double a;
  double normalized;
};

// Refines around scan index i in log10(a), staying inside [lo_a, hi_a].
ScanPoint refine_scan(const std::vector<double>& grid, size_t i, double lo_a, double hi_a, double p,
                      Direction dir, const Table1Options& opt) {
  const double lp = std::log2(p);
  const double lo = std::log10(std::max(lo_a, grid[i == 0 ? 0 : i - 1]));
  const double hi = std::log10(std::min(hi_a, grid[std::min(i + 1, grid.size() - 1)]));
  const std::array<Interval, 1> box{{{std::min(lo, hi), std::max(lo, hi)}}};
  const Objective f = [&](std::span<const double> x) -> std::optional<double> {
    return delta_upper_improved(p, std::pow(10.0, x[0]), opt.etkin).value / lp;
  };
  const auto r = optimize(f, box, dir, opt.refine);
  return {std::pow(10.0, r.argopt[0]), r.value};
}

}  // namespace

std::vector<ReportRow> cmd_table1(std::span<const double> p_db, const Table1Options& opt) {
  if (opt.scan_points < 3) throw DomainError("table1: need at least 3 scan points");
  if (!(opt.a_floor > 0.0 && opt.a_floor < 1.0)) throw DomainError("table1: a floor must lie in (0,1)");
  std::vector<ReportRow> rows;
  for (double db : p_db) {
    const double p = db_to_linear(db);
    if (!lemma1_certificate(p).valid) throw DomainError("table1: P must exceed the quartic root 2.55003");
    const double lp = std::log2(p);
    const double inv_sqrt = 1 / std::sqrt(p), inv_cbrt = std::cbrt(1 / p);

    const int n = opt.scan_points;
    std::vector<double> grid(static_cast<size_t>(n)), val(static_cast<size_t>(n));
    const double l0 = std::log10(opt.a_floor);
    for (int k = 0; k < n; ++k) {
      const auto ku = static_cast<size_t>(k);
      grid[ku] = k == n - 1 ? 1.0 : std::pow(10.0, l0 + (0.0 - l0) * k / (n - 1));
      val[ku] = delta_upper_improved(p, grid[ku], opt.etkin).value / lp;
    }

    // Maximum over a >= 1/sqrt(P).
    size_t jmax = grid.size();
    for (size_t k = 0; k < grid.size(); ++k) {
      if (grid[k] < inv_sqrt) continue;
      if (jmax == grid.size() || val[k] > val[jmax]) jmax = k;
    }
    if (jmax == grid.size()) throw DomainError("table1: no scan point at or above 1/sqrt(P)");
    const auto amax = refine_scan(grid, jmax, inv_sqrt, 1.0, p, Direction::Maximize, opt);

    // Minimum left of the maximum: a = 1 is a trivial zero of Delta, so the
    // global minimum over (0,1] carries no information.
    size_t imin = 0;
    for (size_t k = 1; k <= jmax; ++k) {
      if (val[k] < val[imin]) imin = k;
    }
    const auto amin = refine_scan(grid, imin, opt.a_floor, amax.a, p, Direction::Minimize, opt);

    ReportRow row;
    row.add("p_db", db).add("p", p);
    row.add("a_min_asymptotic", inv_sqrt).add("a_min", amin.a);
    row.add("norm_delta_min_asymptotic", 0.0).add("norm_delta_at_a_min", amin.normalized);
    row.add("norm_delta_at_inv_sqrt_p", delta_upper_improved(p, inv_sqrt, opt.etkin).value / lp);
    row.add("a_max_asymptotic", inv_cbrt).add("a_max", amax.a);
    row.add("norm_delta_max_asymptotic", 1.0 / 6.0).add("norm_delta_at_a_max", amax.normalized);
    row.add("norm_delta_at_inv_cbrt_p", delta_upper_improved(p, inv_cbrt, opt.etkin).value / lp);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<FigureKind> parse_figure(std::string_view name) {
  if (name == "fig1") return FigureKind::Fig1;
  if (name == "fig2") return FigureKind::Fig2;
  if (name == "fig3") return FigureKind::Fig3;
  if (name == "fig4") return FigureKind::Fig4;
  if (name == "fig5") return FigureKind::Fig5;
  return std::nullopt;
}

namespace {

std::vector<ReportRow> delta_sweep(double p, const FigureOptions& opt) {
  if (opt.a_steps < 1) throw DomainError("figure: a_steps must be >= 1");
  std::vector<ReportRow> rows;
  for (int k = 1; k <= opt.a_steps; ++k) {
    const double a = static_cast<double>(k) / opt.a_steps;
    const auto r = delta_bounds_improved(p, a, opt.grids.hk, opt.grids.etkin);
    ReportRow row;
    row.add("a", a)
        .add("lower_simple", r.lower_simple.value)
        .add("upper_simple", r.upper_simple.value)
        .add("lower_improved", r.lower_improved.value)
        .add("upper_improved", r.upper_improved.value)
        .add("asymptotic_lower", r.asymptotic_lower)
        .add("asymptotic_upper", r.asymptotic_upper);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<ReportRow> cmd_figure(FigureKind which, const FigureOptions& opt) {
  std::vector<ReportRow> rows;
  switch (which) {
    case FigureKind::Fig1:
      for (int k = 0; k <= 490; ++k) {
        const double a = 0.01 + 0.002 * k;
        ReportRow row;
        row.add("a", a).add("p_threshold_db", linear_to_db(etw_kramer_threshold(a)));
        rows.push_back(std::move(row));
      }
      break;
    case FigureKind::Fig2: {
      const auto ch = ChannelParams::symmetric(opt.p.value_or(100.0), opt.a.value_or(0.5));
      for (const auto& v : etw_region(ch).boundary()) {
        ReportRow row;
        row.add("series", std::string("etw_boundary")).add("r1", v.r1).add("r2", v.r2);
        rows.push_back(std::move(row));
      }
      const auto star = conjectured_corner_rates(ch);
      const std::array<RatePair, 2> corners{{{single_user_capacity(ch.p1()), star.r2},
                                              {star.r1, single_user_capacity(ch.p2())}}};
      for (const auto& c : corners) {
        ReportRow row;
        row.add("series", std::string("conjectured_corner")).add("r1", c.r1).add("r2", c.r2);
        rows.push_back(std::move(row));
      }
      break;
    }
    case FigureKind::Fig3:
      for (int k = 0; k <= 500; ++k) {
        const double alpha = 0.005 * k;
        ReportRow row;
        row.add("alpha", alpha).add("gdof", gdof(alpha)).add("delta_slope", delta_slope(alpha));
        rows.push_back(std::move(row));
      }
      break;
    case FigureKind::Fig4:
      rows = delta_sweep(opt.p.value_or(500.0), opt);
      break;
    case FigureKind::Fig5:
      rows = delta_sweep(opt.p.value_or(db_to_linear(40.0)), opt);
      break;
  }
  return rows;
}

}  // namespace gic
