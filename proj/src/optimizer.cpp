#include "gic/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "gic/channel.hpp"

namespace gic {

void validate(const GridSpec& spec) {
  if (spec.points_per_axis < 3 || spec.points_per_axis % 2 == 0) {
    throw DomainError("grid: points per axis must be odd and >= 3, got " +
                      std::to_string(spec.points_per_axis));
  }
  if (spec.refinement_rounds < 0) throw DomainError("grid: refinement rounds must be >= 0");
  if (!(spec.shrink_factor > 1.0) || !std::isfinite(spec.shrink_factor)) {
    throw DomainError("grid: shrink factor must be > 1");
  }
  if (spec.threads < 1) throw DomainError("grid: threads must be >= 1");
}

namespace {

struct Candidate {
  double value;
  std::vector<double> x;
  bool found = false;
};

// Strict "a is preferred to b". A total order on feasible points, so any
// reduction order gives the same winner.
bool better(const Candidate& a, const Candidate& b, Direction dir) {
  if (!a.found) return false;
  if (!b.found) return true;
  if (a.value != b.value) {
    return dir == Direction::Minimize ? a.value < b.value : a.value > b.value;
  }
  return std::lexicographical_compare(a.x.begin(), a.x.end(), b.x.begin(), b.x.end());
}

std::vector<double> axis_points(Interval iv, int n) {
  std::vector<double> pts(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    // Endpoints and midpoint are hit exactly.
    if (i == 0) {
      pts[0] = iv.lo;
    } else if (i == n - 1) {
      pts[static_cast<size_t>(i)] = iv.hi;
    } else if (2 * i == n - 1) {
      pts[static_cast<size_t>(i)] = 0.5 * (iv.lo + iv.hi);
    } else {
      pts[static_cast<size_t>(i)] = iv.lo + (iv.hi - iv.lo) * i / (n - 1);
    }
  }
  return pts;
}

Candidate search_range(const Objective& objective, const std::vector<std::vector<double>>& axes,
                       long long begin, long long end, Direction dir) {
  const size_t dims = axes.size();
  Candidate best{0.0, {}, false};
  Candidate cur{0.0, std::vector<double>(dims), true};
  for (long long flat = begin; flat < end; ++flat) {
    long long rem = flat;
    // Last axis varies fastest, so flat order is lexicographic order.
    for (size_t d = dims; d-- > 0;) {
      const long long n = static_cast<long long>(axes[d].size());
      cur.x[d] = axes[d][static_cast<size_t>(rem % n)];
      rem /= n;
    }
    const auto v = objective(cur.x);
    if (!v || !std::isfinite(*v)) continue;
    cur.value = *v;
    if (better(cur, best, dir)) best = cur;
  }
  return best;
}

Candidate search_grid(const Objective& objective, const std::vector<std::vector<double>>& axes,
                      Direction dir, int threads, long long& evaluations) {
  long long total = 1;
  for (const auto& a : axes) total *= static_cast<long long>(a.size());
  evaluations += total;

  const long long workers = std::min<long long>(threads, total);
  if (workers <= 1) return search_range(objective, axes, 0, total, dir);

  std::vector<Candidate> partial(static_cast<size_t>(workers));
  std::vector<std::thread> pool;
  const long long chunk = (total + workers - 1) / workers;
  for (long long w = 0; w < workers; ++w) {
    const long long b = w * chunk, e = std::min(total, b + chunk);
    pool.emplace_back([&, w, b, e] {
      partial[static_cast<size_t>(w)] = search_range(objective, axes, b, e, dir);
    });
  }
  for (auto& t : pool) t.join();
  Candidate best{0.0, {}, false};
  for (auto& c : partial) {
    if (better(c, best, dir)) best = std::move(c);
  }
  return best;
}

}  // namespace

OptimizationResult optimize(const Objective& objective, std::span<const Interval> box,
                            Direction direction, const GridSpec& spec) {
  validate(spec);
  if (box.empty()) throw DomainError("optimize: box has no axes");
  for (const auto& iv : box) {
    if (!(iv.lo <= iv.hi) || !std::isfinite(iv.lo) || !std::isfinite(iv.hi)) {
      throw DomainError("optimize: every axis needs finite lo <= hi");
    }
  }

  OptimizationResult result;
  Candidate incumbent{0.0, {}, false};
  std::vector<Interval> current(box.begin(), box.end());

  for (int round = 0; round <= spec.refinement_rounds; ++round) {
    std::vector<std::vector<double>> axes;
    axes.reserve(current.size());
    for (const auto& iv : current) axes.push_back(axis_points(iv, spec.points_per_axis));

    Candidate found = search_grid(objective, axes, direction, spec.threads, result.grid_points);
    if (better(found, incumbent, direction)) incumbent = std::move(found);
    if (!incumbent.found) {
      throw DomainError("optimize: no feasible point on the grid");
    }
    if (round == spec.refinement_rounds) break;

    const double scale = std::pow(spec.shrink_factor, round + 1);
    for (size_t d = 0; d < current.size(); ++d) {
      const double half = 0.5 * (box[d].hi - box[d].lo) / scale;
      current[d] = {std::max(box[d].lo, incumbent.x[d] - half),
                    std::min(box[d].hi, incumbent.x[d] + half)};
    }
    result.refinement_rounds = round + 1;
  }

  result.value = incumbent.value;
  result.argopt = std::move(incumbent.x);
  return result;
}

}  // namespace gic
