#pragma once

// Value types shared by the outer-bound, protocol and region code.

#include <array>
#include <optional>
#include <vector>

#include "twrc/core.hpp"

namespace twrc {

inline constexpr int kNumStates = 6;
/// Time shares above this count as "used" when reporting active states.
inline constexpr double kActiveShareTol = 1e-7;

/// Fractions of channel uses spent in each of the six network states
/// (index 0 is state 1).
struct TimeShares {
  std::array<double, kNumStates> lambda{};

  [[nodiscard]] double total() const;
  /// 1-based state numbers with lambda above `tol`.
  [[nodiscard]] std::vector<int> active_states(double tol = kActiveShareTol) const;
  [[nodiscard]] bool valid(double tol = 1e-9) const;
  /// States 1<->2 and 5<->6 exchange under a <-> b relabeling.
  [[nodiscard]] TimeShares mirrored() const;
};

/// A supporting line normal_a * Ra + normal_b * Rb <= offset of a region at
/// one of its boundary points.
struct SupportLine {
  double normal_a = 0.0;
  double normal_b = 0.0;
  double offset = 0.0;
};

/// Power fractions of the two broadcast states of the 6-state DF protocol.
struct PowerSplit {
  double alpha1 = 1.0;
  double alpha2 = 1.0;
};

enum class Node { a, b, r };

/// One information-flow variable Z_{from,to}^{state}.
struct FlowVar {
  Node from;
  Node to;
  int state;
  Rate rate;
};

/// Flow decomposition at an optimum; holds only the variables the protocol defines.
struct FlowVars {
  std::vector<FlowVar> z;

  [[nodiscard]] std::optional<Rate> get(Node from, Node to, int state) const;
};

struct FlowDetail {
  FlowVars flows;
  PowerSplit split;
};

/// A rate pair on the boundary of a region, with the schedule that attains it.
struct BoundaryPoint {
  Rate ra = 0.0;
  Rate rb = 0.0;
  TimeShares shares;
  std::optional<SupportLine> support;
  std::optional<FlowDetail> detail;

  /// Angle of the point from the Rb axis in degrees (0 at the origin).
  [[nodiscard]] double theta_deg() const;
  [[nodiscard]] double radius() const;
  /// Same point with a and b relabeled.
  [[nodiscard]] BoundaryPoint mirrored() const;
};

}  // namespace twrc
