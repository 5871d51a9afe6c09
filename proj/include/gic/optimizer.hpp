#pragma once

// Deterministic grid search with local refinement for low-dimensional boxes.

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace gic {

struct GridSpec {
  int points_per_axis = 41;    // odd, >= 3
  int refinement_rounds = 3;
  double shrink_factor = 5.0;  // > 1
  int threads = 1;             // evaluation workers; never changes the result
};

/// Throws DomainError for an even or too-small point count, negative rounds,
/// shrink_factor <= 1 or threads < 1.
void validate(const GridSpec& spec);

struct Interval {
  double lo;
  double hi;
};

enum class Direction { Minimize, Maximize };

struct OptimizationResult {
  double value = 0.0;
  std::vector<double> argopt;
  long long grid_points = 0;  // objective evaluations over all rounds
  int refinement_rounds = 0;
};

/// Returns std::nullopt (or a non-finite value) for infeasible points.
using Objective = std::function<std::optional<double>(std::span<const double>)>;

/// Incumbent is the best evaluated feasible point. Each refinement round
/// re-grids a box of nominal width (original width / shrink^k), centred on the
/// incumbent and clipped to the original box. Ties go to the lexicographically
/// smallest point. Throws DomainError if no evaluated point is feasible.
OptimizationResult optimize(const Objective& objective, std::span<const Interval> box,
                            Direction direction, const GridSpec& spec);

}  // namespace gic
