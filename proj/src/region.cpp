#include "twrc/region.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <sstream>

namespace twrc::region {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

double cross(Vec2 o, Vec2 a, Vec2 b) { return (a.ra - o.ra) * (b.rb - o.rb) - (a.rb - o.rb) * (b.ra - o.ra); }
double cross(Vec2 a, Vec2 b) { return a.ra * b.rb - a.rb * b.ra; }
double dot(Vec2 a, Vec2 b) { return a.ra * b.ra + a.rb * b.rb; }
Vec2 sub(Vec2 a, Vec2 b) { return {a.ra - b.ra, a.rb - b.rb}; }
Vec2 as_vec(const BoundaryPoint& p) { return {p.ra, p.rb}; }

Vec2 direction(double theta_deg) {
  if (theta_deg >= 90.0) return {1.0, 0.0};
  if (theta_deg <= 0.0) return {0.0, 1.0};
  return {std::sin(theta_deg * kDeg), std::cos(theta_deg * kDeg)};
}

double angle_of(Vec2 p) {
  if (p.ra == 0.0 && p.rb == 0.0) return 0.0;
  return std::atan2(p.ra, p.rb) / kDeg;
}

double segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 e = sub(b, a);
  const double len2 = dot(e, e);
  double s = len2 > 0.0 ? dot(sub(p, a), e) / len2 : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  const Vec2 q{a.ra + s * e.ra, a.rb + s * e.rb};
  return std::hypot(p.ra - q.ra, p.rb - q.rb);
}

void check_same_channel(const Region& a, const Region& b) {
  const ChannelGains& x = a.gains();
  const ChannelGains& y = b.gains();
  if (x.gamma1 != y.gamma1 || x.gamma2 != y.gamma2 || x.gamma3 != y.gamma3) {
    throw ComparisonError("regions '" + a.label() + "' and '" + b.label() + "' use different channel gains");
  }
}

// Corner between two consecutive boundary samples, from their supporting lines.
std::optional<Vec2> corner(const Sample& s, const Sample& t, const std::vector<SupportLine>& all) {
  const SupportLine& l1 = *s.point.support;
  const SupportLine& l2 = *t.point.support;
  const double det = l1.normal_a * l2.normal_b - l1.normal_b * l2.normal_a;
  const double scale = std::hypot(l1.normal_a, l1.normal_b) * std::hypot(l2.normal_a, l2.normal_b);
  if (std::abs(det) <= 1e-10 * scale) return std::nullopt;
  Vec2 v{(l1.offset * l2.normal_b - l1.normal_b * l2.offset) / det,
         (l1.normal_a * l2.offset - l1.offset * l2.normal_a) / det};
  if (v.ra < -1e-12 || v.rb < -1e-12) return std::nullopt;
  v.ra = std::max(v.ra, 0.0);
  v.rb = std::max(v.rb, 0.0);
  const double th = angle_of(v);
  const double lo = angle_of(as_vec(s.point));
  const double hi = angle_of(as_vec(t.point));
  if (th < lo - 1e-9 || th > hi + 1e-9) return std::nullopt;
  for (const SupportLine& l : all) {
    if (l.normal_a * v.ra + l.normal_b * v.rb > l.offset + 1e-9 * (1.0 + std::abs(l.offset))) return std::nullopt;
  }
  return v;
}

template <bool Parallel>
Region sweep_impl(const Evaluator& eval, const ChannelGains& gains, int theta_points, std::string label) {
  const std::vector<Ray> rays = theta_grid(theta_points);
  const long n = static_cast<long>(rays.size());
  std::vector<BoundaryPoint> pts(rays.size());
  std::vector<std::exception_ptr> errors(rays.size());

  if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
      try {
        pts[static_cast<std::size_t>(i)] = eval(rays[static_cast<std::size_t>(i)], gains);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  } else {
    for (long i = 0; i < n; ++i) {
      try {
        pts[static_cast<std::size_t>(i)] = eval(rays[static_cast<std::size_t>(i)], gains);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  }

  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (!errors[i]) continue;
    const std::string where = "sweep '" + label + "' failed on " + rays[i].describe() + ": ";
    try {
      std::rethrow_exception(errors[i]);
    } catch (const ValidationError& e) {
      throw ValidationError(where + e.what());
    } catch (const DomainError& e) {
      throw ValidationError(where + e.what());
    } catch (const ParameterError& e) {
      throw ParameterError(where + e.what());
    } catch (const std::exception& e) {
      throw SolverError(where + e.what());
    }
  }

  std::vector<Sample> samples;
  samples.reserve(rays.size());
  for (std::size_t i = 0; i < rays.size(); ++i) samples.push_back({rays[i].theta_deg(), std::move(pts[i])});
  return Region(std::move(label), gains, std::move(samples), theta_points, true);
}

}  // namespace

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) { return a.ra < b.ra || (a.ra == b.ra && a.rb < b.rb); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Vec2> h(2 * pts.size());
  std::size_t k = 0;
  for (const Vec2& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0.0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

Region::Region(std::string label, ChannelGains gains, std::vector<Sample> samples, int grid,
               bool complete_vertices)
    : label_(std::move(label)), gains_(gains), grid_(grid) {
  std::stable_sort(samples.begin(), samples.end(),
                   [](const Sample& a, const Sample& b) { return a.theta_deg < b.theta_deg; });
  for (Sample& s : samples) {
    if (!samples_.empty() && samples_.back().theta_deg == s.theta_deg) {
      if (s.point.radius() > samples_.back().point.radius()) samples_.back() = std::move(s);
      continue;
    }
    samples_.push_back(std::move(s));
  }

  std::vector<Vec2> cloud{{0.0, 0.0}};
  double max_ra = 0.0;
  double max_rb = 0.0;
  for (const Sample& s : samples_) {
    cloud.push_back(as_vec(s.point));
    max_ra = std::max(max_ra, s.point.ra);
    max_rb = std::max(max_rb, s.point.rb);
  }
  cloud.push_back({max_ra, 0.0});
  cloud.push_back({0.0, max_rb});

  if (complete_vertices) {
    std::vector<SupportLine> lines;
    for (const Sample& s : samples_) {
      if (s.point.support) lines.push_back(*s.point.support);
    }
    for (std::size_t i = 0; i + 1 < samples_.size(); ++i) {
      const Sample& s = samples_[i];
      const Sample& t = samples_[i + 1];
      if (!s.point.support || !t.point.support) continue;
      if (auto v = corner(s, t, lines)) cloud.push_back(*v);
    }
  }
  hull_ = convex_hull(std::move(cloud));
}

double Region::support_along(double theta_deg) const {
  const Vec2 u = direction(theta_deg);
  double best = 0.0;
  const std::size_t n = hull_.size();
  if (n == 1) return 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = hull_[i];
    const Vec2 b = hull_[(i + 1) % n];
    const Vec2 e = sub(b, a);
    const double den = cross(u, e);
    if (std::abs(den) <= 1e-300) {
      // Edge parallel to the ray: counts only when it lies on the ray.
      if (std::abs(cross(u, a)) <= 1e-14 * (1.0 + std::hypot(a.ra, a.rb))) {
        best = std::max({best, dot(u, a), dot(u, b)});
      }
      continue;
    }
    const double s = cross(a, u) / den;
    const double r = cross(a, e) / den;
    if (s >= -1e-12 && s <= 1.0 + 1e-12 && r > best) best = r;
  }
  return best;
}

double Region::distance_to(Vec2 p) const {
  const std::size_t n = hull_.size();
  if (n == 0) return std::hypot(p.ra, p.rb);
  if (n == 1) return std::hypot(p.ra - hull_[0].ra, p.rb - hull_[0].rb);
  if (n >= 3) {
    bool inside = true;
    for (std::size_t i = 0; i < n && inside; ++i) {
      if (cross(hull_[i], hull_[(i + 1) % n], p) < 0.0) inside = false;
    }
    if (inside) return 0.0;
  }
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) d = std::min(d, segment_distance(p, hull_[i], hull_[(i + 1) % n]));
  return d;
}

std::vector<Ray> theta_grid(int theta_points) {
  if (theta_points < 3) throw ParameterError("theta_points must be >= 3");
  std::vector<Ray> rays;
  rays.reserve(static_cast<std::size_t>(theta_points) + 2);
  rays.push_back(Ray::ratio(0.0));
  const double span = kThetaMaxDeg - kThetaMinDeg;
  for (int i = 0; i < theta_points; ++i) {
    // Symmetric construction keeps theta and 90 - theta exact mirrors.
    const int j = theta_points - 1 - i;
    double th = i <= j ? kThetaMinDeg + span * i / (theta_points - 1) : 90.0 - (kThetaMinDeg + span * j / (theta_points - 1));
    if (2 * i == theta_points - 1) th = 45.0;
    rays.push_back(Ray::from_degrees(th));
  }
  rays.push_back(Ray::ra_axis());
  return rays;
}

Region sweep_region(const Evaluator& eval, const ChannelGains& gains, int theta_points, std::string label) {
  return sweep_impl<true>(eval, gains, theta_points, std::move(label));
}

Region sweep_region_serial(const Evaluator& eval, const ChannelGains& gains, int theta_points, std::string label) {
  return sweep_impl<false>(eval, gains, theta_points, std::move(label));
}

Region region_from_points(std::string label, const ChannelGains& gains, const std::vector<BoundaryPoint>& points) {
  std::vector<Sample> samples;
  samples.reserve(points.size());
  for (const BoundaryPoint& p : points) samples.push_back({p.theta_deg(), p});
  return Region(std::move(label), gains, std::move(samples), static_cast<int>(points.size()), false);
}

Rate symmetric_rate(const Region& region) {
  const auto& s = region.samples();
  if (s.empty()) return 0.0;
  for (const Sample& x : s) {
    if (x.theta_deg == 45.0) return x.point.rb;
  }
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i].theta_deg < 45.0 && s[i + 1].theta_deg > 45.0) {
      const BoundaryPoint& p = s[i].point;
      const BoundaryPoint& q = s[i + 1].point;
      const double d0 = p.ra - p.rb;
      const double d1 = q.ra - q.rb;
      if (d1 == d0) return 0.5 * (p.ra + q.ra);
      const double t = d0 / (d0 - d1);
      return p.ra + t * (q.ra - p.ra);
    }
  }
  return 0.0;
}

bool contains(const Region& outer, const Region& inner, double tol) {
  check_same_channel(outer, inner);
  for (const Sample& s : inner.samples()) {
    const Vec2 p = as_vec(s.point);
    const double r = std::hypot(p.ra, p.rb);
    if (r == 0.0) continue;
    const auto& h = outer.hull();
    if (std::find(h.begin(), h.end(), p) != h.end()) continue;
    const auto& os = outer.samples();
    if (std::any_of(os.begin(), os.end(), [&](const Sample& o) { return as_vec(o.point) == p; })) continue;
    if (r > outer.support_along(angle_of(p)) + tol) return false;
  }
  return true;
}

RadialGap max_radial_gap(const Region& a, const Region& b) {
  check_same_channel(a, b);
  RadialGap out{-std::numeric_limits<double>::infinity(), 0.0};
  for (const Sample& s : a.samples()) {
    const double g = a.support_along(s.theta_deg) - b.support_along(s.theta_deg);
    if (g > out.gap) out = {g, s.theta_deg};
  }
  if (a.samples().empty()) out.gap = 0.0;
  return out;
}

double hausdorff_distance(const Region& a, const Region& b) {
  check_same_channel(a, b);
  double d = 0.0;
  for (const Vec2& v : a.hull()) d = std::max(d, b.distance_to(v));
  for (const Vec2& v : b.hull()) d = std::max(d, a.distance_to(v));
  return d;
}

Rate sum_rate_max(const Region& region) {
  double best = 0.0;
  for (const Vec2& v : region.hull()) best = std::max(best, v.ra + v.rb);
  return best;
}

Region mirrored(const Region& region) {
  std::vector<Sample> samples;
  samples.reserve(region.samples().size());
  for (const Sample& s : region.samples()) samples.push_back({90.0 - s.theta_deg, s.point.mirrored()});
  return Region(region.label(), region.gains().mirrored(), std::move(samples), region.grid(), true);
}

}  // namespace twrc::region
