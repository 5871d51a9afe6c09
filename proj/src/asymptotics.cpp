#include "gic/asymptotics.hpp"

#include <cmath>
#include <string>

#include "gic/channel.hpp"
#include "gic/excess_rate.hpp"
#include "gic/sum_rate.hpp"

namespace gic {

namespace {

void require_level(double alpha, const char* op) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw DomainError(std::string(op) + ": alpha must be finite and >= 0");
  }
}

}  // namespace

double gdof(double alpha) {
  require_level(alpha, "gdof");
  if (alpha < 0.5) return 1 - alpha;
  if (alpha < 2.0 / 3.0) return alpha;
  if (alpha < 1.0) return 1 - alpha / 2;
  if (alpha < 2.0) return alpha / 2;
  return 1.0;
}

double delta_slope(double alpha) {
  require_level(alpha, "delta_slope");
  if (alpha < 2.0 / 3.0) return std::abs(0.5 - alpha);
  if (alpha < 1.0) return (1 - alpha) / 2;
  return 0.0;
}

double normalized_loss(double alpha) {
  require_level(alpha, "normalized_loss");
  if (alpha < 0.5) return (1 - 2 * alpha) / (2 * (1 - alpha));
  if (alpha < 2.0 / 3.0) return 1 - 1 / (2 * alpha);
  if (alpha < 1.0) return (1 - alpha) / (2 - alpha);
  return 0.0;
}

std::vector<ProbeRow> convergence_probe(double alpha, std::span<const double> p_values) {
  require_level(alpha, "convergence_probe");
  std::vector<ProbeRow> rows;
  rows.reserve(p_values.size());
  for (double p : p_values) {
    if (!std::isfinite(p) || !lemma1_certificate(p).valid) {
      throw DomainError("convergence_probe: every P must exceed the quartic root 2.55003");
    }
    const double a = std::pow(p, alpha - 1);
    if (alpha >= 1.0) {
      rows.push_back({p, a, 0.0, 0.0});
      continue;
    }
    const double lp = std::log2(p);
    rows.push_back({p, a, delta_upper_simple(p, a).value / lp, delta_lower_simple_raw(p, a) / lp});
  }
  return rows;
}

}  // namespace gic
