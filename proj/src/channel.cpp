#include "gic/channel.hpp"

#include <cmath>
#include <string>

namespace gic {

namespace {

bool is_degraded_product(double a12, double a21) {
  return std::abs(a12 * a21 - 1.0) <= 1e-12;
}

}  // namespace

ChannelParams::ChannelParams(double p1, double p2, double a12, double a21)
    : p1_(p1), p2_(p2), a12_(a12), a21_(a21) {
  if (!std::isfinite(p1) || !std::isfinite(p2) || !std::isfinite(a12) ||
      !std::isfinite(a21)) {
    throw DomainError("channel parameters must be finite");
  }
  if (!(p1 > 0.0) || !(p2 > 0.0)) {
    throw DomainError("transmit powers must be positive");
  }
  if (a12 < 0.0 || a21 < 0.0) {
    throw DomainError("cross-link gains must be non-negative");
  }
}

std::string_view to_string(RegimeKind kind) {
  switch (kind) {
    case RegimeKind::Weak: return "Weak";
    case RegimeKind::Strong: return "Strong";
    case RegimeKind::VeryStrong: return "VeryStrong";
    case RegimeKind::Mixed: return "Mixed";
    case RegimeKind::Degraded: return "Degraded";
    case RegimeKind::OneSidedWeak: return "OneSidedWeak";
    case RegimeKind::OneSidedStrong: return "OneSidedStrong";
  }
  return "Unknown";
}

RegimeClass classify(const ChannelParams& params) {
  const double a12 = params.a12();
  const double a21 = params.a21();
  RegimeClass out{RegimeKind::Weak, params.is_symmetric(), {}};

  if (a12 == 0.0 || a21 == 0.0) {
    const double other = (a12 == 0.0) ? a21 : a12;
    if (other == 0.0) {
      out.kind = RegimeKind::OneSidedWeak;
      out.description = "no interference on either link";
    } else if (other < 1.0) {
      out.kind = RegimeKind::OneSidedWeak;
      out.description = "one-sided, non-zero gain below 1";
    } else {
      out.kind = RegimeKind::OneSidedStrong;
      out.description = "one-sided, non-zero gain at least 1";
    }
    return out;
  }
  if (a12 < 1.0 && a21 < 1.0) {
    out.kind = RegimeKind::Weak;
    out.description = "both cross gains in (0,1)";
    return out;
  }
  if (a12 >= 1.0 && a21 >= 1.0) {
    if (a12 >= 1.0 + params.p1() && a21 >= 1.0 + params.p2()) {
      out.kind = RegimeKind::VeryStrong;
      out.description = "interference does not reduce the capacity region";
    } else {
      out.kind = RegimeKind::Strong;
      out.description = "both cross gains at least 1";
    }
    return out;
  }
  if (is_degraded_product(a12, a21)) {
    out.kind = RegimeKind::Degraded;
    out.description = "Mixed channel with a12*a21 = 1";
  } else {
    out.kind = RegimeKind::Mixed;
    out.description = "one cross gain at least 1, the other in (0,1)";
  }
  return out;
}

void require_weak(const ChannelParams& params, std::string_view op) {
  const auto kind = classify(params).kind;
  if (kind != RegimeKind::Weak) {
    throw RegimeError(std::string(op) + ": requires a weak channel, got " +
                      std::string(to_string(kind)));
  }
  if (params.a12() < kMinWeakGain || params.a21() < kMinWeakGain) {
    throw RegimeError(std::string(op) + ": cross gain below " +
                      std::to_string(kMinWeakGain) + " is degenerate");
  }
}

double single_user_capacity(double p) {
  if (!std::isfinite(p) || p < 0.0) {
    throw DomainError("single_user_capacity: power must be finite and >= 0");
  }
  return detail::half_log2(1.0 + p);
}

RatePair conjectured_corner_rates(const ChannelParams& params) {
  const double p1 = params.p1();
  const double p2 = params.p2();
  return {detail::half_log2(1.0 + params.a21() * p1 / (1.0 + p2)),
          detail::half_log2(1.0 + params.a12() * p2 / (1.0 + p1))};
}

}  // namespace gic
