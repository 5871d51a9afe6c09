#pragma once

// Large-SNR behaviour of the symmetric channel when the cross gain scales as
// a = P^(alpha - 1).

#include <span>
#include <vector>

namespace gic {

/// Generalized degrees of freedom d(alpha), alpha >= 0.
double gdof(double alpha);

/// Asymptotic slope of Delta in log2 P.
double delta_slope(double alpha);

/// delta_slope / gdof.
double normalized_loss(double alpha);

struct ProbeRow {
  double p;
  double a;
  double upper_normalized;  // closed-form upper Delta / log2 P
  double lower_normalized;  // raw (unclamped) lower Delta / log2 P
};

/// One row per entry of p_values (kept in the given order). For alpha >= 1
/// both columns are exactly zero. Requires every p above the quartic root.
std::vector<ProbeRow> convergence_probe(double alpha, std::span<const double> p_values);

}  // namespace gic
