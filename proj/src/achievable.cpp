#include "twrc/achievable.hpp"

#include <algorithm>
#include <cmath>

#include "ray_lp.hpp"

namespace twrc::achievable {

using detail::RayLp;
using lp::Relation;

namespace {

constexpr Relation kLe = Relation::less_equal;
constexpr Relation kEq = Relation::equal;

// Column 0 of every program is the ray length t; time shares follow as
// columns 1.. in the order the protocol lists its states.
BoundaryPoint to_point(const RayLp::Result& res, std::initializer_list<std::pair<int, std::size_t>> states) {
  BoundaryPoint p;
  p.ra = res.ra;
  p.rb = res.rb;
  for (const auto& [state, col] : states) {
    p.shares.lambda[static_cast<std::size_t>(state - 1)] = std::max(0.0, res.x[col]);
  }
  p.support = res.support;
  return p;
}

}  // namespace

BoundaryPoint mabc_boundary(const Ray& ray, const ChannelGains& gains) {
  check_gains(gains);
  const LinkCapacities c(gains);
  RayLp p(ray);
  const auto l3 = p.add_var();
  const auto l4 = p.add_var();
  p.add_row(1, 0, {{l3, -c.c1}}, kLe);
  p.add_row(1, 0, {{l4, -c.c2}}, kLe);
  p.add_row(0, 1, {{l3, -c.c2}}, kLe);
  p.add_row(0, 1, {{l4, -c.c1}}, kLe);
  p.add_row(1, 1, {{l3, -c.c12}}, kLe);
  p.add_row(0, 0, {{l3, 1}, {l4, 1}}, kLe, 1.0);
  return to_point(p.solve(), {{3, l3}, {4, l4}});
}

BoundaryPoint hbc_boundary(const Ray& ray, const ChannelGains& gains, bool tdbc_only) {
  check_gains(gains);
  const LinkCapacities c(gains);
  RayLp p(ray);
  const auto l1 = p.add_var();
  const auto l2 = p.add_var();
  const auto l3 = p.add_var(0.0, tdbc_only ? 0.0 : lp::kInfinity);
  const auto l4 = p.add_var();
  // min{a, b} constraints are split into two rows each.
  p.add_row(1, 0, {{l1, -c.c1}, {l3, -c.c1}}, kLe);
  p.add_row(1, 0, {{l1, -c.c3}, {l4, -c.c2}}, kLe);
  p.add_row(0, 1, {{l2, -c.c2}, {l3, -c.c2}}, kLe);
  p.add_row(0, 1, {{l2, -c.c3}, {l4, -c.c1}}, kLe);
  p.add_row(1, 1, {{l1, -c.c1}, {l2, -c.c2}, {l3, -c.c12}}, kLe);
  p.add_row(0, 0, {{l1, 1}, {l2, 1}, {l3, 1}, {l4, 1}}, kEq, 1.0);
  return to_point(p.solve(), {{1, l1}, {2, l2}, {3, l3}, {4, l4}});
}

BoundaryPoint six_state_df_at(const Ray& ray, const ChannelGains& gains, PowerSplit split) {
  check_gains(gains);
  if (!(split.alpha1 >= 0.0 && split.alpha1 <= 1.0 && split.alpha2 >= 0.0 && split.alpha2 <= 1.0)) {
    throw ParameterError("power split fractions must lie in [0, 1]");
  }
  const LinkCapacities c(gains);
  const double g3 = gains.gamma3;
  // Superposition broadcast in states 1 and 2: the relay decodes its message
  // at power fraction alpha, the far terminal treats it as noise.
  const Rate s1_relay = cap(split.alpha1 * gains.gamma1);
  const Rate s1_direct = cap((1.0 - split.alpha1) * g3 / (1.0 + split.alpha1 * g3));
  const Rate s2_relay = cap(split.alpha2 * gains.gamma2);
  const Rate s2_direct = cap((1.0 - split.alpha2) * g3 / (1.0 + split.alpha2 * g3));

  RayLp p(ray);
  std::array<std::size_t, 7> l{};
  for (int i = 1; i <= kNumStates; ++i) l[static_cast<std::size_t>(i)] = p.add_var();
  const auto z_ar1 = p.add_var();
  const auto z_ab1 = p.add_var();
  const auto z_br2 = p.add_var();
  const auto z_ba2 = p.add_var();
  const auto z_ar3 = p.add_var();
  const auto z_br3 = p.add_var();
  const auto z_ra4 = p.add_var();
  const auto z_rb4 = p.add_var();
  const auto z_rb5 = p.add_var();
  const auto z_ab5 = p.add_var();
  const auto z_ra6 = p.add_var();
  const auto z_ba6 = p.add_var();

  // Rate composition.
  p.add_row(1, 0, {{z_ar1, -1}, {z_ab1, -1}, {z_ab5, -1}, {z_ar3, -1}}, kEq);
  p.add_row(0, 1, {{z_br2, -1}, {z_ba2, -1}, {z_ba6, -1}, {z_br3, -1}}, kEq);
  // State 1 and 2 broadcast.
  p.add_row(0, 0, {{z_ar1, 1}, {l[1], -s1_relay}}, kLe);
  p.add_row(0, 0, {{z_ab1, 1}, {l[1], -s1_direct}}, kLe);
  p.add_row(0, 0, {{z_br2, 1}, {l[2], -s2_relay}}, kLe);
  p.add_row(0, 0, {{z_ba2, 1}, {l[2], -s2_direct}}, kLe);
  // State 3 MAC at the relay.
  p.add_row(0, 0, {{z_ar3, 1}, {l[3], -c.c1}}, kLe);
  p.add_row(0, 0, {{z_br3, 1}, {l[3], -c.c2}}, kLe);
  p.add_row(0, 0, {{z_ar3, 1}, {z_br3, 1}, {l[3], -c.c12}}, kLe);
  // State 4 broadcast with side information at both receivers.
  p.add_row(0, 0, {{z_ra4, 1}, {l[4], -c.c1}}, kLe);
  p.add_row(0, 0, {{z_rb4, 1}, {l[4], -c.c2}}, kLe);
  // State 5 MAC at b, state 6 MAC at a.
  p.add_row(0, 0, {{z_rb5, 1}, {l[5], -c.c2}}, kLe);
  p.add_row(0, 0, {{z_ab5, 1}, {l[5], -c.c3}}, kLe);
  p.add_row(0, 0, {{z_rb5, 1}, {z_ab5, 1}, {l[5], -c.c23}}, kLe);
  p.add_row(0, 0, {{z_ra6, 1}, {l[6], -c.c1}}, kLe);
  p.add_row(0, 0, {{z_ba6, 1}, {l[6], -c.c3}}, kLe);
  p.add_row(0, 0, {{z_ra6, 1}, {z_ba6, 1}, {l[6], -c.c13}}, kLe);
  // Relay flow conservation.
  p.add_row(0, 0, {{z_ar1, 1}, {z_ar3, 1}, {z_rb5, -1}, {z_rb4, -1}}, kEq);
  p.add_row(0, 0, {{z_br2, 1}, {z_br3, 1}, {z_ra6, -1}, {z_ra4, -1}}, kEq);
  p.add_row(0, 0, {{l[1], 1}, {l[2], 1}, {l[3], 1}, {l[4], 1}, {l[5], 1}, {l[6], 1}}, kEq, 1.0);

  const auto res = p.solve();
  BoundaryPoint pt = to_point(res, {{1, l[1]}, {2, l[2]}, {3, l[3]}, {4, l[4]}, {5, l[5]}, {6, l[6]}});
  // Each split has its own region; a line supporting one of them need not
  // support their union.
  pt.support.reset();

  FlowDetail d;
  d.split = split;
  const auto z = [&](Node from, Node to, int state, std::size_t col) {
    d.flows.z.push_back({from, to, state, std::max(0.0, res.x[col])});
  };
  z(Node::a, Node::r, 1, z_ar1);
  z(Node::a, Node::b, 1, z_ab1);
  z(Node::b, Node::r, 2, z_br2);
  z(Node::b, Node::a, 2, z_ba2);
  z(Node::a, Node::r, 3, z_ar3);
  z(Node::b, Node::r, 3, z_br3);
  z(Node::r, Node::a, 4, z_ra4);
  z(Node::r, Node::b, 4, z_rb4);
  z(Node::r, Node::b, 5, z_rb5);
  z(Node::a, Node::b, 5, z_ab5);
  z(Node::r, Node::a, 6, z_ra6);
  z(Node::b, Node::a, 6, z_ba6);
  pt.detail = std::move(d);
  return pt;
}

BoundaryPoint six_state_df_boundary(const Ray& ray, const ChannelGains& gains, const DfOptions& opts) {
  if (opts.alpha_grid < 2) throw ParameterError("alpha grid needs at least two points per axis");
  if (opts.refine && opts.refine_points < 2) throw ParameterError("refinement needs at least two points");

  const auto radius = [](const BoundaryPoint& p) { return p.ra + p.rb; };
  BoundaryPoint best = six_state_df_at(ray, gains, {0.0, 0.0});
  const int n = opts.alpha_grid;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == 0 && j == 0) continue;
      const PowerSplit s{static_cast<double>(i) / (n - 1), static_cast<double>(j) / (n - 1)};
      BoundaryPoint cand = six_state_df_at(ray, gains, s);
      if (radius(cand) > radius(best) + 1e-13) best = std::move(cand);
    }
  }
  if (opts.refine) {
    const PowerSplit centre = best.detail->split;
    const double step = 1.0 / (n - 1);
    const int m = opts.refine_points;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        const double a1 = std::clamp(centre.alpha1 + step * (2.0 * i / (m - 1) - 1.0), 0.0, 1.0);
        const double a2 = std::clamp(centre.alpha2 + step * (2.0 * j / (m - 1) - 1.0), 0.0, 1.0);
        BoundaryPoint cand = six_state_df_at(ray, gains, {a1, a2});
        if (radius(cand) > radius(best) + 1e-13) best = std::move(cand);
      }
    }
  }
  return best;
}

BoundaryPoint six_state_boundary(const Ray& ray, const ChannelGains& gains) {
  check_gains(gains);
  const LinkCapacities c(gains);
  // Direct flows at their maximizing choice:
  //   Z_ab^5 = l5 C(g3), Z_ab^5 + Z_rb^5 = l5 C(g2+g3),
  //   Z_ba^6 = l6 C(g3), Z_ba^6 + Z_ra^6 = l6 C(g1+g3).
  RayLp p(ray);
  std::array<std::size_t, 7> l{};
  for (int i = 1; i <= kNumStates; ++i) l[static_cast<std::size_t>(i)] = p.add_var();
  p.add_row(1, 0, {{l[5], -c.c3}, {l[1], -c.c1}, {l[3], -c.c1}}, kLe);
  p.add_row(1, 0, {{l[1], -c.c3}, {l[4], -c.c2}, {l[5], -c.c23}}, kLe);
  p.add_row(0, 1, {{l[6], -c.c3}, {l[2], -c.c2}, {l[3], -c.c2}}, kLe);
  p.add_row(0, 1, {{l[2], -c.c3}, {l[4], -c.c1}, {l[6], -c.c13}}, kLe);
  p.add_row(1, 1, {{l[1], -c.c1}, {l[5], -c.c3}, {l[2], -c.c2}, {l[6], -c.c3}, {l[3], -c.c12}}, kLe);
  p.add_row(0, 0, {{l[1], 1}, {l[2], 1}, {l[3], 1}, {l[4], 1}, {l[5], 1}, {l[6], 1}}, kEq, 1.0);
  return to_point(p.solve(), {{1, l[1]}, {2, l[2]}, {3, l[3]}, {4, l[4]}, {5, l[5]}, {6, l[6]}});
}

ComabcRelayRates comabc_relay_rates(const ChannelGains& gains) {
  check_gains(gains);
  const double g1 = gains.gamma1;
  const double g2 = gains.gamma2;
  const double sum = g1 + g2;
  if (sum <= 0.0) return {};
  const auto clipped_log2 = [](double x) { return x > 1.0 ? std::log2(x) : 0.0; };
  return {clipped_log2(g1 / sum + g1), clipped_log2(g2 / sum + g2)};
}

BoundaryPoint comabc_boundary(const Ray& ray, const ChannelGains& gains) {
  check_gains(gains);
  if (!gains.ordered()) {
    throw ValidationError("CoMABC requires gamma3 <= gamma1 <= gamma2");
  }
  const LinkCapacities c(gains);
  const ComabcRelayRates rs = comabc_relay_rates(gains);
  RayLp p(ray);
  const auto l3 = p.add_var();
  const auto l4 = p.add_var();
  const auto l6 = p.add_var();
  p.add_row(1, 0, {{l3, -rs.ar}}, kLe);
  p.add_row(1, 0, {{l4, -c.c2}}, kLe);
  p.add_row(0, 1, {{l3, -rs.br}, {l6, -c.c3}}, kLe);
  p.add_row(0, 1, {{l4, -c.c1}, {l6, -c.c13}}, kLe);
  p.add_row(0, 0, {{l3, 1}, {l4, 1}, {l6, 1}}, kLe, 1.0);
  return to_point(p.solve(), {{3, l3}, {4, l4}, {6, l6}});
}

}  // namespace twrc::achievable
