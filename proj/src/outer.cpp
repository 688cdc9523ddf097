#include "twrc/outer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/tools/roots.hpp>

#include "ray_lp.hpp"

namespace twrc::outer {

using lp::Relation;

namespace {

// Column layout of the ray program: t, then l1..l6.
constexpr std::size_t lam(int state) { return static_cast<std::size_t>(state); }

detail::RayLp build_ratio(const Ray& ray, const ChannelGains& g) {
  check_gains(g);
  const LinkCapacities c(g);
  detail::RayLp p(ray);
  for (int i = 1; i <= kNumStates; ++i) p.add_var();
  p.add_row(1, 0, {{lam(1), -c.c13}, {lam(3), -c.c1}, {lam(5), -c.c3}}, Relation::less_equal);
  p.add_row(1, 0, {{lam(1), -c.c3}, {lam(4), -c.c2}, {lam(5), -c.p2}}, Relation::less_equal);
  p.add_row(0, 1, {{lam(2), -c.c23}, {lam(3), -c.c2}, {lam(6), -c.c3}}, Relation::less_equal);
  p.add_row(0, 1, {{lam(2), -c.c3}, {lam(4), -c.c1}, {lam(6), -c.p1}}, Relation::less_equal);
  p.add_row(0, 0, {{lam(1), 1}, {lam(2), 1}, {lam(3), 1}, {lam(4), 1}, {lam(5), 1}, {lam(6), 1}},
            Relation::less_equal, 1.0);
  return p;
}

TimeShares shares_from(const std::vector<double>& x, std::size_t offset) {
  TimeShares s;
  for (std::size_t i = 0; i < kNumStates; ++i) s.lambda[i] = std::max(0.0, x[offset + i]);
  return s;
}

// Splits used by the closed-form dual points; fall back to an even split
// when the denominator vanishes.
std::pair<double, double> split(double num_first, double num_second) {
  const double den = num_first + num_second;
  if (den <= 0.0) return {0.5, 0.5};
  return {num_first / den, num_second / den};
}

void require_ratio(double k, bool allow_zero) {
  if (!std::isfinite(k) || k < 0.0 || (!allow_zero && k == 0.0)) {
    throw ParameterError(allow_zero ? "ratio k must be finite and >= 0" : "ratio k must be finite and > 0");
  }
}

}  // namespace

lp::LinearProgram ratio_program(const Ray& ray, const ChannelGains& gains) {
  return build_ratio(ray, gains).program();
}

OuterPoint outer_ratio_bound(const Ray& ray, const ChannelGains& gains) {
  const auto res = build_ratio(ray, gains).solve();
  OuterPoint pt;
  pt.ray = ray;
  pt.ra = res.ra;
  pt.rb = res.rb;
  pt.shares = shares_from(res.x, 1);
  pt.active_states = pt.shares.active_states();
  pt.support = res.support;
  return pt;
}

OuterPoint outer_ratio_bound(double k, const ChannelGains& gains) {
  return outer_ratio_bound(Ray::ratio(k), gains);
}

BoundaryPoint WeightedBound::boundary(double wa, double wb) const {
  BoundaryPoint p{ra, rb, shares, std::nullopt, std::nullopt};
  if (wa > 0.0 || wb > 0.0) p.support = SupportLine{wa, wb, value};
  return p;
}

WeightedBound outer_weighted_bound(double wa, double wb, const ChannelGains& gains) {
  if (!std::isfinite(wa) || !std::isfinite(wb) || wa < 0.0 || wb < 0.0) {
    throw ParameterError("weights must be finite and >= 0");
  }
  if (wa == 0.0 && wb == 0.0) throw ParameterError("weights (wa, wb) must not both be zero");
  check_gains(gains);
  const LinkCapacities c(gains);

  // Columns: Ra, Rb, l1..l6.
  lp::LinearProgram p;
  p.objective = {wa, wb, 0, 0, 0, 0, 0, 0};
  p.add_row({1, 0, -c.c13, 0, -c.c1, 0, -c.c3, 0}, Relation::less_equal, 0);
  p.add_row({1, 0, -c.c3, 0, 0, -c.c2, -c.p2, 0}, Relation::less_equal, 0);
  p.add_row({0, 1, 0, -c.c23, -c.c2, 0, 0, -c.c3}, Relation::less_equal, 0);
  p.add_row({0, 1, 0, -c.c3, 0, -c.c1, 0, -c.p1}, Relation::less_equal, 0);
  p.add_row({0, 0, 1, 1, 1, 1, 1, 1}, Relation::less_equal, 1);
  const auto sol = lp::solve_lp(p);
  if (!sol.optimal()) throw SolverError("weighted outer-bound LP is " + lp::to_string(sol.status));

  WeightedBound out;
  out.value = sol.objective_value;
  out.ra = std::max(0.0, sol.x[0]);
  out.rb = std::max(0.0, sol.x[1]);
  out.shares = shares_from(sol.x, 2);
  return out;
}

std::vector<BoundaryPoint> weighted_sweep(const ChannelGains& gains, int directions) {
  if (directions < 2) throw ParameterError("weighted sweep needs at least two directions");
  std::vector<BoundaryPoint> pts;
  pts.reserve(static_cast<std::size_t>(directions));
  for (int i = 0; i < directions; ++i) {
    const double phi_deg = 90.0 * i / (directions - 1);
    double wa = std::cos(phi_deg * std::numbers::pi / 180.0);
    double wb = std::sin(phi_deg * std::numbers::pi / 180.0);
    if (i == directions - 1) wa = 0.0;
    const WeightedBound wbd = outer_weighted_bound(wa, wb, gains);
    pts.push_back(wbd.boundary(wa, wb));
  }
  return pts;
}

// ─── Dual certificates ───────────────────────────────────────────────────────

std::array<double, kNumStates> dual_state_rows(const DualPoint& d, const ChannelGains& gains) {
  check_gains(gains);
  const LinkCapacities c(gains);
  const auto& y = d.y;
  return {
      y[0] * c.c13 + y[1] * c.c3,  // state 1
      y[2] * c.c23 + y[3] * c.c3,  // state 2
      y[0] * c.c1 + y[2] * c.c2,   // state 3
      y[1] * c.c2 + y[3] * c.c1,   // state 4
      y[0] * c.c3 + y[1] * c.p2,   // state 5
      y[2] * c.c3 + y[3] * c.p1,   // state 6
  };
}

DualCheck check_dual_point(const DualPoint& d, double k, const ChannelGains& gains, double tol) {
  const auto rows = dual_state_rows(d, gains);
  double slack = k * d.y[0] + k * d.y[1] + d.y[2] + d.y[3] - 1.0;
  for (double r : rows) slack = std::min(slack, d.y[4] - r);
  for (std::size_t j = 0; j < 4; ++j) slack = std::min(slack, d.y[j]);
  return {slack >= -tol, slack};
}

DualPoint rb_dual_point(double k, const ChannelGains& gains) {
  if (!(k >= 1.0) || !std::isfinite(k)) throw ParameterError("the Rb dual point requires k >= 1");
  check_gains(gains);
  const Rate c1 = cap(gains.gamma1);
  const Rate c2 = cap(gains.gamma2);
  const auto [w2, w1] = split(c2, c1);  // C(g2)/S, C(g1)/S
  const double a = (2.0 * k - 1.0) / (2.0 * k * k);
  const double b = 1.0 / (2.0 * k);
  DualPoint d;
  d.y = {a * w2, a * w1, b * w1, b * w2, 0.0};
  const auto rows = dual_state_rows(d, gains);
  d.y[4] = *std::max_element(rows.begin(), rows.end());
  return d;
}

DualCheck dual_point_feasible(double k, const ChannelGains& gains) {
  return check_dual_point(rb_dual_point(k, gains), k, gains);
}

double AnalyticTerms::max() const { return *std::max_element(t.begin(), t.end()); }

AnalyticTerms analytic_rb_terms(double k, const ChannelGains& gains) {
  if (!(k >= 1.0) || !std::isfinite(k)) throw ParameterError("analytic_rb_terms requires k >= 1");
  check_gains(gains);
  const LinkCapacities c(gains);
  const double s = c.c1 + c.c2;
  const double a = (2.0 * k - 1.0) / (2.0 * k * k);
  const double b = 1.0 / (2.0 * k);
  AnalyticTerms out;
  if (s > 0.0) {
    out.t[0] = (3.0 * k - 1.0) / (2.0 * k * k) * c.c1 * c.c2 / s;
    out.t[1] = a * (c.c2 * c.c13 + c.c1 * c.c3) / s;
    out.t[2] = a * (c.c2 * c.c3 + c.c1 * c.p2) / s;
    out.t[3] = b * (c.c1 * c.c3 + c.c2 * c.p1) / s;
  } else {
    // Both relay links dead: the printed fractions are 0/0, use the even split.
    const auto rows = dual_state_rows(rb_dual_point(k, gains), gains);
    out.t = {std::max(rows[2], rows[3]), std::max(rows[0], rows[1]), rows[4], rows[5]};
  }
  return out;
}

Rate analytic_rb_bound(double k, const ChannelGains& gains) {
  require_ratio(k, false);
  if (k < 1.0) {
    // Bound Ra on the mirrored channel with Rb = (1/k) Ra, then Rb = Ra / k.
    const double kp = 1.0 / k;
    return kp * analytic_rb_terms(kp, gains.mirrored()).max();
  }
  const AnalyticTerms terms = analytic_rb_terms(k, gains);
  if (k == 1.0 && terms.t[1] > terms.t[3] + 1e-12 * (1.0 + terms.t[3])) {
    throw std::logic_error("analytic_rb_bound: T2 <= T4 must hold at k = 1");
  }
  return terms.max();
}

Rate one_way_bound(const ChannelGains& gains, Direction dir) {
  check_gains(gains);
  const LinkCapacities c(gains);
  // b -> a: state 2 (b broadcasts) against state 6 (b and r to a).
  const double first = dir == Direction::b_to_a ? c.c23 : c.c13;
  const double second = dir == Direction::b_to_a ? c.p1 : c.p2;
  const double den = first + second - 2.0 * c.c3;
  if (den <= 0.0) return c.c3;
  return (first * second - c.c3 * c.c3) / den;
}

DualPoint weighted_dual_point(double k, const ChannelGains& gains) {
  require_ratio(k, true);
  check_gains(gains);
  const LinkCapacities c(gains);
  const auto [u1, u2] = split(c.p2 - c.c3, c.c13 - c.c3);
  const auto [u3, u4] = split(c.p1 - c.c3, c.c23 - c.c3);
  DualPoint d;
  d.y = {k * u1, k * u2, u3, u4, 0.0};
  const auto rows = dual_state_rows(d, gains);
  d.y[4] = *std::max_element(rows.begin(), rows.end());
  return d;
}

AnalyticTerms analytic_weighted_terms(double k, const ChannelGains& gains) {
  require_ratio(k, true);
  check_gains(gains);
  const LinkCapacities c(gains);
  const double d1 = c.c13 + c.p2 - 2.0 * c.c3;
  const double d2 = c.c23 + c.p1 - 2.0 * c.c3;
  if (d1 <= 0.0 || d2 <= 0.0) {
    const auto rows = dual_state_rows(weighted_dual_point(k, gains), gains);
    return {{std::max(rows[0], rows[4]), std::max(rows[1], rows[5]), rows[2], rows[3]}};
  }
  AnalyticTerms out;
  out.t[0] = k * (c.c13 * c.p2 - c.c3 * c.c3) / d1;
  out.t[1] = (c.c23 * c.p1 - c.c3 * c.c3) / d2;
  out.t[2] = k * c.c1 * (c.p2 - c.c3) / d1 + c.c2 * (c.p1 - c.c3) / d2;
  out.t[3] = k * c.c2 * (c.c13 - c.c3) / d1 + c.c1 * (c.c23 - c.c3) / d2;
  return out;
}

Rate analytic_weighted_bound(double k, const ChannelGains& gains) {
  return analytic_weighted_terms(k, gains).max();
}

// ─── Thresholds ──────────────────────────────────────────────────────────────

double threshold_f(double gamma, double x) { return cap(x) + cap_coherent(gamma, x); }

double threshold_f1(double gamma1, double gamma2, double x) {
  return cap(gamma2) * cap(x) + cap(gamma1) * cap_coherent(gamma2, x);
}

double threshold_f2(double gamma1, double gamma2, double x) {
  return cap(gamma1) * cap(x) + cap(gamma2) * cap_coherent(gamma1, x);
}

namespace {

template <class F>
double solve_increasing(F f, double target, double initial_hi) {
  if (f(0.0) >= target) return 0.0;
  double hi = initial_hi > 0.0 ? initial_hi : 1.0;
  for (int i = 0; f(hi) < target; ++i) {
    if (i > 200 || !std::isfinite(hi)) throw SolverError("threshold: could not bracket the root");
    hi *= 2.0;
  }
  const auto g = [&](double x) { return f(x) - target; };
  const auto tol = [](double lo, double up) { return up - lo <= kThresholdRelTol * up; };
  const auto [lo, up] = boost::math::tools::bisect(g, 0.0, hi, tol);
  return 0.5 * (lo + up);
}

}  // namespace

double Thresholds::operative() const {
  if (gamma30) return *gamma30;
  if (gamma31 && gamma32) return std::min(*gamma31, *gamma32);
  throw std::logic_error("thresholds not computed");
}

Thresholds capacity_thresholds(const ChannelGains& gains) {
  check_gains(gains);
  const double g1 = gains.gamma1;
  const double g2 = gains.gamma2;
  if (g1 <= 0.0 || g2 <= 0.0) throw ParameterError("capacity thresholds need gamma1, gamma2 > 0");
  Thresholds out;
  if (g1 == g2) {
    out.gamma30 = solve_increasing([&](double x) { return threshold_f(g1, x); }, 2.0 * cap(g1), g2);
  } else {
    const double target = 2.0 * cap(g1) * cap(g2);
    out.gamma31 = solve_increasing([&](double x) { return threshold_f1(g1, g2, x); }, target, g2);
    out.gamma32 = solve_increasing([&](double x) { return threshold_f2(g1, g2, x); }, target, g2);
  }
  return out;
}

}  // namespace twrc::outer
