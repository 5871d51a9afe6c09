#pragma once

// Report builders behind the gicbounds subcommands. Each returns rows with a
// fixed column schema; rendering is left to the caller.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gic/channel.hpp"
#include "gic/optimizer.hpp"
#include "gic/report.hpp"

namespace gic {

/// 10^(db/10).
double db_to_linear(double db);
double linear_to_db(double p);

struct OptimizerGrids {
  GridSpec hk;
  GridSpec etkin;
};

/// Both grids from the CLI knobs; unset values keep each optimizer's default.
OptimizerGrids make_grids(std::optional<int> points, std::optional<int> rounds, int threads);

std::vector<ReportRow> cmd_classify(const ChannelParams& params);

/// Weak: corner intervals (plus the tradeoff bounds when epsilon > 0).
/// Mixed/degraded: both mixed-corner entries. One-sided weak: the exact corner
/// and the interval. Strong: the conjectured corners, which are exact there.
std::vector<ReportRow> cmd_corners(const ChannelParams& params, double epsilon);

/// Symmetric weak: simple, improved and asymptotic bounds. Asymmetric weak:
/// the general closed forms only.
std::vector<ReportRow> cmd_delta(const ChannelParams& params, const OptimizerGrids& grids);

/// One row per a value for a symmetric channel with power p.
std::vector<ReportRow> cmd_sumrate(double p, std::span<const double> a_values, const OptimizerGrids& grids);

/// ETW and half-bit closed forms for an arbitrary weak channel.
std::vector<ReportRow> cmd_sumrate_general(const ChannelParams& params);

std::vector<ReportRow> cmd_asymptotics(double alpha);
std::vector<ReportRow> cmd_convergence(double alpha, std::span<const double> p_values);

struct Table1Options {
  int scan_points = 400;
  double a_floor = 1e-4;
  GridSpec etkin;
  GridSpec refine{21, 3, 5.0, 1};  // 1-D refinement in log10(a)
};

std::vector<ReportRow> cmd_table1(std::span<const double> p_db, const Table1Options& options);

enum class FigureKind { Fig1, Fig2, Fig3, Fig4, Fig5 };

std::optional<FigureKind> parse_figure(std::string_view name);

struct FigureOptions {
  std::optional<double> p;     // linear power; figure-specific default otherwise
  std::optional<double> a;     // fig2 only
  int a_steps = 200;           // fig4/fig5: a = k / a_steps, k = 1..a_steps
  OptimizerGrids grids;
};

std::vector<ReportRow> cmd_figure(FigureKind which, const FigureOptions& options);

}  // namespace gic
