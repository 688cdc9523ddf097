#pragma once

// Rate regions assembled from per-ray boundary evaluations, and the
// geometric comparisons used to rank protocols against the outer bound.
//
// A Region keeps the swept samples (ordered by ray angle) and the convex
// hull obtained by closing them with the origin and their axis projections.
// Rate regions are convex (time sharing) and downward closed, so the hull is
// the region itself up to sampling.

#include <functional>
#include <string>
#include <vector>

#include "twrc/boundary.hpp"
#include "twrc/core.hpp"

namespace twrc::region {

inline constexpr int kDefaultThetaPoints = 181;
inline constexpr double kThetaMinDeg = 0.5;
inline constexpr double kThetaMaxDeg = 89.5;

/// Per-ray boundary function. Must be safe to call concurrently.
using Evaluator = std::function<BoundaryPoint(const Ray&, const ChannelGains&)>;

/// Regions computed on different channels cannot be compared.
class ComparisonError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Vec2 {
  double ra = 0.0;
  double rb = 0.0;
  bool operator==(const Vec2&) const = default;
};

struct Sample {
  double theta_deg = 0.0;  // angle of the ray that produced the point
  BoundaryPoint point;
};

class Region {
 public:
  Region() = default;

  /// Builds a region from samples. Samples are ordered by angle and points
  /// sharing an angle are merged (the farthest one is kept). With
  /// `complete_vertices`, consecutive samples that carry supporting lines
  /// contribute the intersection of those lines as an extra hull vertex,
  /// recovering polygon corners that fall between two rays.
  Region(std::string label, ChannelGains gains, std::vector<Sample> samples, int grid,
         bool complete_vertices);

  [[nodiscard]] const std::string& label() const { return label_; }
  [[nodiscard]] const ChannelGains& gains() const { return gains_; }
  [[nodiscard]] int grid() const { return grid_; }
  [[nodiscard]] const std::vector<Sample>& samples() const { return samples_; }
  /// Counter-clockwise hull vertices in (Ra, Rb) coordinates.
  [[nodiscard]] const std::vector<Vec2>& hull() const { return hull_; }
  [[nodiscard]] bool empty() const { return samples_.empty(); }

  /// Radial extent of the hull along the ray at `theta_deg` from the Rb axis.
  [[nodiscard]] double support_along(double theta_deg) const;
  /// Euclidean distance from `p` to the hull (0 inside).
  [[nodiscard]] double distance_to(Vec2 p) const;

 private:
  std::string label_;
  ChannelGains gains_;
  int grid_ = 0;
  std::vector<Sample> samples_;
  std::vector<Vec2> hull_;
};

/// Convex hull (counter-clockwise, collinear points dropped).
std::vector<Vec2> convex_hull(std::vector<Vec2> pts);

/// The two axis rays plus `theta_points` rays uniform in [0.5, 89.5] degrees.
std::vector<Ray> theta_grid(int theta_points);

/// Evaluates `eval` on theta_grid(theta_points) in parallel (OpenMP) and
/// closes the result. Throws ParameterError for theta_points < 3; a failing
/// ray aborts the sweep with its angle in the message and the original error
/// category preserved.
Region sweep_region(const Evaluator& eval, const ChannelGains& gains, int theta_points,
                    std::string label = {});

/// Single-threaded reference for sweep_region; results are identical.
Region sweep_region_serial(const Evaluator& eval, const ChannelGains& gains, int theta_points,
                           std::string label = {});

/// Region from arbitrary boundary points (e.g. weighted-sum optima). Points
/// are taken as given; no vertex completion.
Region region_from_points(std::string label, const ChannelGains& gains, const std::vector<BoundaryPoint>& points);

/// Intersection of the swept boundary with Ra = Rb: the k = 1 sample when
/// present, else linear interpolation between the bracketing samples.
Rate symmetric_rate(const Region& region);

/// True iff every sample of `inner` lies inside the hull of `outer` within
/// `tol` along its own ray.
bool contains(const Region& outer, const Region& inner, double tol);

struct RadialGap {
  double gap = 0.0;
  double theta_deg = 0.0;
};

/// max over the ray angles of `a` of support_a - support_b. Negative when b
/// exceeds a everywhere.
RadialGap max_radial_gap(const Region& a, const Region& b);

/// Hausdorff distance between the two hulls.
double hausdorff_distance(const Region& a, const Region& b);

/// max Ra + Rb over the hull.
Rate sum_rate_max(const Region& region);

/// The region with a and b relabeled (angles theta -> 90 - theta).
Region mirrored(const Region& region);

}  // namespace twrc::region
