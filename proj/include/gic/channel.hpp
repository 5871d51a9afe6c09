#pragma once

// Two-user Gaussian interference channel in standard form: unit direct gains,
// unit noise variances, cross-link gains a12 (user 2 into receiver 1) and a21
// (user 1 into receiver 2). All rates are in bits per channel use.

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gic {

/// Raised for inputs outside an operation's mathematical domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is asked about a channel in the wrong regime.
class RegimeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Cross gains below this are treated as degenerate for weak-channel bounds.
inline constexpr double kMinWeakGain = 1e-12;

class ChannelParams {
 public:
  /// Throws DomainError unless p1, p2 > 0 and a12, a21 >= 0, all finite.
  ChannelParams(double p1, double p2, double a12, double a21);

  static ChannelParams symmetric(double p, double a) { return {p, p, a, a}; }

  double p1() const { return p1_; }
  double p2() const { return p2_; }
  double a12() const { return a12_; }
  double a21() const { return a21_; }

  /// Relabels the users (1 <-> 2).
  ChannelParams swapped() const { return {p2_, p1_, a21_, a12_}; }

  bool is_symmetric() const { return p1_ == p2_ && a12_ == a21_; }

  friend bool operator==(const ChannelParams&, const ChannelParams&) = default;

 private:
  double p1_;
  double p2_;
  double a12_;
  double a21_;
};

enum class RegimeKind {
  Weak,
  Strong,
  VeryStrong,
  Mixed,
  Degraded,
  OneSidedWeak,
  OneSidedStrong,
};

std::string_view to_string(RegimeKind kind);

struct RegimeClass {
  RegimeKind kind;
  bool symmetric;
  std::string description;
};

struct RatePair {
  double r1;
  double r2;
};

RegimeClass classify(const ChannelParams& params);

/// Throws RegimeError unless both cross gains lie in [kMinWeakGain, 1).
void require_weak(const ChannelParams& params, std::string_view op);

/// 0.5 * log2(1 + p). Throws DomainError for negative or non-finite p.
double single_user_capacity(double p);

/// (R1*, R2*): the rate of each user when the other one sits at its
/// single-user capacity and the saturated receiver decodes both messages.
RatePair conjectured_corner_rates(const ChannelParams& params);

namespace detail {

inline double half_log2(double x) { return 0.5 * std::log2(x); }

/// Clamps roundoff-sized negatives (> -1e-12) to zero.
inline double clamp_roundoff(double x) { return (x < 0.0 && x > -1e-12) ? 0.0 : x; }

}  // namespace detail
}  // namespace gic
