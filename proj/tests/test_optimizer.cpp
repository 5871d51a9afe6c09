#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "gic/channel.hpp"
#include "gic/optimizer.hpp"
#include "gic/sum_rate.hpp"

using namespace gic;

namespace {

GridSpec spec(int n, int rounds, int threads = 1) {
  GridSpec g;
  g.points_per_axis = n;
  g.refinement_rounds = rounds;
  g.threads = threads;
  return g;
}

}  // namespace

TEST(Optimizer, QuadraticBowl) {
  const std::array<Interval, 1> box{{{0, 1}}};
  const Objective f = [](std::span<const double> x) -> std::optional<double> {
    return (x[0] - 0.3) * (x[0] - 0.3);
  };
  const auto r = optimize(f, box, Direction::Minimize, spec(101, 0));
  EXPECT_NEAR(r.argopt[0], 0.3, 1e-12);
  EXPECT_LE(r.value, 1e-4);
  EXPECT_EQ(r.grid_points, 101);
  EXPECT_EQ(r.refinement_rounds, 0);
}

TEST(Optimizer, SeparablePeak) {
  const std::array<Interval, 2> box{{{0, 1}, {0, 1}}};
  const Objective f = [](std::span<const double> x) -> std::optional<double> {
    return -std::abs(x[0] - 0.5) - std::abs(x[1] - 0.5);
  };
  const auto r = optimize(f, box, Direction::Maximize, GridSpec{});
  EXPECT_EQ(r.value, 0.0);
  EXPECT_EQ(r.argopt[0], 0.5);
  EXPECT_EQ(r.argopt[1], 0.5);
}

TEST(Optimizer, RefinementFindsOffGridOptimum) {
  const std::array<Interval, 1> box{{{0, 1}}};
  const Objective f = [](std::span<const double> x) -> std::optional<double> {
    return std::pow(x[0] - 0.123456, 2);
  };
  const auto coarse = optimize(f, box, Direction::Minimize, spec(11, 0));
  const auto fine = optimize(f, box, Direction::Minimize, spec(11, 6));
  EXPECT_LE(fine.value, coarse.value);
  EXPECT_NEAR(fine.argopt[0], 0.123456, 1e-5);
}

TEST(Optimizer, RefinementNeverWorsens) {
  const std::array<Interval, 2> box{{{-2, 2}, {-1, 3}}};
  const Objective f = [](std::span<const double> x) -> std::optional<double> {
    return std::sin(3 * x[0]) * std::cos(2 * x[1]) + 0.1 * x[0] * x[1];
  };
  double prev = INFINITY;
  for (int rounds = 0; rounds <= 5; ++rounds) {
    const auto r = optimize(f, box, Direction::Minimize, spec(15, rounds));
    EXPECT_LE(r.value, prev);
    prev = r.value;
  }
}

TEST(Optimizer, InfeasiblePointsSkipped) {
  const std::array<Interval, 1> box{{{-1, 1}}};
  const Objective f = [](std::span<const double> x) -> std::optional<double> {
    if (x[0] < 0.2) return std::nullopt;
    return x[0];
  };
  const auto r = optimize(f, box, Direction::Minimize, spec(11, 2));
  EXPECT_GE(r.argopt[0], 0.2);
  const Objective nan = [](std::span<const double>) -> std::optional<double> { return NAN; };
  EXPECT_THROW(optimize(nan, box, Direction::Minimize, spec(11, 0)), DomainError);
  const Objective none = [](std::span<const double>) -> std::optional<double> { return std::nullopt; };
  EXPECT_THROW(optimize(none, box, Direction::Maximize, spec(11, 0)), DomainError);
}

TEST(Optimizer, TiesGoToLexicographicallySmallest) {
  const std::array<Interval, 2> box{{{0, 1}, {0, 1}}};
  const Objective flat = [](std::span<const double>) -> std::optional<double> { return 1.0; };
  const auto r = optimize(flat, box, Direction::Maximize, spec(5, 2));
  EXPECT_EQ(r.argopt[0], 0.0);
  EXPECT_EQ(r.argopt[1], 0.0);
  const Objective two_peaks = [](std::span<const double> x) -> std::optional<double> {
    return std::abs(x[0] - 0.5);
  };
  const auto p = optimize(two_peaks, box, Direction::Maximize, spec(5, 0));
  EXPECT_EQ(p.argopt[0], 0.0);
}

TEST(Optimizer, ThreadCountDoesNotChangeResult) {
  const std::array<Interval, 3> box{{{0, 1}, {0, 1}, {0, 0.5}}};
  const Objective f = [](std::span<const double> x) -> std::optional<double> {
    return hk_rho(500, 0.11, {x[0], x[1], x[2]});
  };
  const auto serial = optimize(f, box, Direction::Maximize, spec(21, 2, 1));
  for (int t : {2, 3, 7}) {
    const auto par = optimize(f, box, Direction::Maximize, spec(21, 2, t));
    EXPECT_EQ(par.value, serial.value);
    EXPECT_EQ(par.argopt, serial.argopt);
    EXPECT_EQ(par.grid_points, serial.grid_points);
  }
}

TEST(Optimizer, Deterministic) {
  const std::array<Interval, 2> box{{{-1, 1}, {0, 2}}};
  const Objective f = [](std::span<const double> x) -> std::optional<double> {
    return std::cos(5 * x[0]) + x[1] * x[1] - x[0] * x[1];
  };
  const auto a = optimize(f, box, Direction::Minimize, GridSpec{});
  const auto b = optimize(f, box, Direction::Minimize, GridSpec{});
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.argopt, b.argopt);
}

TEST(Optimizer, FinerOddGridDominates) {
  const std::array<Interval, 2> box{{{0, 1}, {0, 0.5}}};
  const Objective f = [](std::span<const double> x) -> std::optional<double> {
    return hk_rho(50, 0.3, {x[0], x[0], x[1]});
  };
  double prev = -INFINITY;
  for (int n : {5, 9, 17, 33, 65}) {  // 2n - 1 keeps every coarse node
    const auto r = optimize(f, box, Direction::Maximize, spec(n, 0));
    EXPECT_GE(r.value, prev);
    prev = r.value;
  }
}

TEST(Optimizer, SpecValidation) {
  const std::array<Interval, 1> box{{{0, 1}}};
  const Objective f = [](std::span<const double> x) -> std::optional<double> { return x[0]; };
  EXPECT_THROW(optimize(f, box, Direction::Minimize, spec(40, 0)), DomainError);
  EXPECT_THROW(optimize(f, box, Direction::Minimize, spec(1, 0)), DomainError);
  EXPECT_THROW(optimize(f, box, Direction::Minimize, spec(11, -1)), DomainError);
  GridSpec bad;
  bad.shrink_factor = 1.0;
  EXPECT_THROW(optimize(f, box, Direction::Minimize, bad), DomainError);
  const std::array<Interval, 1> inverted{{{1, 0}}};
  EXPECT_THROW(optimize(f, inverted, Direction::Minimize, GridSpec{}), DomainError);
}

TEST(Optimizer, RefinedBoxStaysInsideOriginal) {
  const std::array<Interval, 1> box{{{0, 1}}};
  const Objective f = [](std::span<const double> x) -> std::optional<double> {
    EXPECT_GE(x[0], 0.0);
    EXPECT_LE(x[0], 1.0);
    return x[0];
  };
  const auto r = optimize(f, box, Direction::Minimize, spec(11, 4));
  EXPECT_EQ(r.argopt[0], 0.0);
}

TEST(Optimizer, HkTinPointIsAFloor) {
  const auto r = hk_sum_lower_optimized(20, 0.05);
  EXPECT_GE(r.value, 3.45943161863729725619936304673 - 1e-12);
}
