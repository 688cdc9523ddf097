#pragma once

// Cut-set outer bounds for the half-duplex two-way relay channel.
//
// Two numerical formulations of the same region are provided: the ray
// program (maximize Rb subject to Ra = k Rb) and the weighted-sum program
// (maximize wa Ra + wb Rb). Both use the four cut constraints
//
//   Ra <= l1 C(g1+g3) + l3 C(g1) + l5 C(g3)
//   Ra <= l1 C(g3)    + l4 C(g2) + l5 C((sqrt g2 + sqrt g3)^2)
//   Rb <= l2 C(g2+g3) + l3 C(g2) + l6 C(g3)
//   Rb <= l2 C(g3)    + l4 C(g1) + l6 C((sqrt g1 + sqrt g3)^2)
//
// with sum(l) <= 1. Closed-form bounds come from explicit feasible points of
// the dual program.

#include <array>
#include <optional>
#include <vector>

#include "twrc/boundary.hpp"
#include "twrc/core.hpp"
#include "twrc/lp.hpp"

namespace twrc::outer {

struct OuterPoint {
  Ray ray = Ray::ratio(0.0);
  Rate ra = 0.0;
  Rate rb = 0.0;
  TimeShares shares;
  std::vector<int> active_states;
  std::optional<SupportLine> support;

  [[nodiscard]] BoundaryPoint boundary() const { return {ra, rb, shares, support, std::nullopt}; }
};

/// The ray program over (t, l1..l6). Row order: the four cut constraints,
/// then the time budget.
lp::LinearProgram ratio_program(const Ray& ray, const ChannelGains& gains);

/// Largest point of the cut-set region on `ray` (vertex optimum).
OuterPoint outer_ratio_bound(const Ray& ray, const ChannelGains& gains);
OuterPoint outer_ratio_bound(double k, const ChannelGains& gains);

struct WeightedBound {
  Rate value = 0.0;
  Rate ra = 0.0;
  Rate rb = 0.0;
  TimeShares shares;

  [[nodiscard]] BoundaryPoint boundary(double wa, double wb) const;
};

/// max wa*Ra + wb*Rb over the cut-set region. Throws ParameterError unless
/// both weights are finite, non-negative and not both zero.
WeightedBound outer_weighted_bound(double wa, double wb, const ChannelGains& gains);

/// Weighted-sum optima for weight directions (cos phi, sin phi), phi uniform
/// in [0, 90] degrees, each tagged with its supporting line.
std::vector<BoundaryPoint> weighted_sweep(const ChannelGains& gains, int directions);

// ─── Dual certificates and analytical bounds ─────────────────────────────────

/// Dual variables y1..y5 of the ray program.
struct DualPoint {
  std::array<double, 5> y{};
};

/// The six state rows of the dual: value_i = sum_j y_j * coef_ij, which must
/// not exceed y5.
std::array<double, kNumStates> dual_state_rows(const DualPoint& point, const ChannelGains& gains);

struct DualCheck {
  bool feasible = false;
  double min_slack = 0.0;
};

/// Checks the seven dual constraints (six state rows and the normalization
/// k y1 + k y2 + y3 + y4 >= 1) and the sign constraints y1..y4 >= 0.
DualCheck check_dual_point(const DualPoint& point, double k, const ChannelGains& gains,
                           double tol = 1e-9);

/// Dual point used by analytic_rb_bound, with y5 set to the largest state row.
DualPoint rb_dual_point(double k, const ChannelGains& gains);

/// Builds rb_dual_point(k, gains) and checks it. Requires k >= 1.
DualCheck dual_point_feasible(double k, const ChannelGains& gains);

struct AnalyticTerms {
  std::array<double, 4> t{};
  [[nodiscard]] double max() const;
};

/// T1..T4 of the closed-form Rb bound for k >= 1.
AnalyticTerms analytic_rb_terms(double k, const ChannelGains& gains);

/// Closed-form upper bound on Rb along Ra = k Rb, k > 0. Ratios below one
/// are handled by exchanging the roles of a and b and bounding Ra with
/// ratio 1/k.
Rate analytic_rb_bound(double k, const ChannelGains& gains);

enum class Direction { b_to_a, a_to_b };

/// One-way relaying bound. b_to_a bounds Rb when Ra = 0, a_to_b bounds Ra
/// when Rb = 0. With gamma3 = 0 both reduce to the half-duplex two-hop
/// capacity C(g1)C(g2)/(C(g1)+C(g2)).
Rate one_way_bound(const ChannelGains& gains, Direction dir = Direction::b_to_a);

/// T1..T4 of the closed-form bound on k*Ra + Rb.
AnalyticTerms analytic_weighted_terms(double k, const ChannelGains& gains);
Rate analytic_weighted_bound(double k, const ChannelGains& gains);

/// Dual point certifying analytic_weighted_bound: y1 + y2 = k, y3 + y4 = 1.
DualPoint weighted_dual_point(double k, const ChannelGains& gains);

// ─── Capacity thresholds ─────────────────────────────────────────────────────

/// f(x) = C(x) + C((sqrt g + sqrt x)^2)
double threshold_f(double gamma, double x);
/// f1(x) = C(g2) C(x) + C(g1) C((sqrt g2 + sqrt x)^2)
double threshold_f1(double gamma1, double gamma2, double x);
/// f2(x) = C(g1) C(x) + C(g2) C((sqrt g1 + sqrt x)^2)
double threshold_f2(double gamma1, double gamma2, double x);

/// Direct-link SNRs below which the symmetric-rate bound ignores the direct link.
struct Thresholds {
  std::optional<double> gamma30;
  std::optional<double> gamma31;
  std::optional<double> gamma32;

  /// gamma30 in the symmetric case, min(gamma31, gamma32) otherwise.
  [[nodiscard]] double operative() const;
};

inline constexpr double kThresholdRelTol = 1e-9;

/// Solves the threshold equations by bisection. Requires gamma1, gamma2 > 0;
/// gamma3 is ignored.
Thresholds capacity_thresholds(const ChannelGains& gains);

}  // namespace twrc::outer
