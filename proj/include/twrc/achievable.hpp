#pragma once

// Achievable rate regions of decode-and-forward style two-way relaying
// protocols, evaluated one ray at a time by linear programming.
//
// Every routine returns the farthest point of the protocol's region on the
// given ray together with the time shares (and, for the 6-state DF
// protocol, the flow decomposition and power split) that attain it.

#include "twrc/boundary.hpp"
#include "twrc/core.hpp"

namespace twrc::achievable {

/// Two-phase multiple-access / broadcast protocol (states 3 and 4).
BoundaryPoint mabc_boundary(const Ray& ray, const ChannelGains& gains);

/// Hybrid broadcast protocol (states 1-4, side information in state 4).
/// `tdbc_only` forces l3 = 0, which is the three-phase TDBC protocol.
BoundaryPoint hbc_boundary(const Ray& ray, const ChannelGains& gains, bool tdbc_only = false);

inline BoundaryPoint tdbc_boundary(const Ray& ray, const ChannelGains& gains) {
  return hbc_boundary(ray, gains, true);
}

struct DfOptions {
  /// Points per axis of the uniform (alpha1, alpha2) grid over [0, 1]^2.
  int alpha_grid = 33;
  /// Second pass: refine_points^2 grid centred on the incumbent with a
  /// half-width of one coarse grid step.
  bool refine = true;
  int refine_points = 9;
};

/// 6-state DF protocol without side information at a fixed power split.
BoundaryPoint six_state_df_at(const Ray& ray, const ChannelGains& gains, PowerSplit split);

/// 6-state DF protocol, best single power split found by grid search.
BoundaryPoint six_state_df_boundary(const Ray& ray, const ChannelGains& gains, const DfOptions& opts = {});

/// 6-state protocol with side information (HBC plus MAC states 5 and 6),
/// with the direct-link flows fixed at their region-maximizing values.
BoundaryPoint six_state_boundary(const Ray& ray, const ChannelGains& gains);

struct ComabcRelayRates {
  Rate ar = 0.0;
  Rate br = 0.0;
};

/// Computation rates [log2(g1/(g1+g2) + g1)]+ and [log2(g2/(g1+g2) + g2)]+.
ComabcRelayRates comabc_relay_rates(const ChannelGains& gains);

/// Cooperative MABC protocol (states 3, 4, 6). Requires ordered gains
/// (gamma3 <= gamma1 <= gamma2); throws ValidationError otherwise.
BoundaryPoint comabc_boundary(const Ray& ray, const ChannelGains& gains);

}  // namespace twrc::achievable
