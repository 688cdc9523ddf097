#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "oracle.hpp"
#include "twrc/outer.hpp"

using namespace twrc;
using namespace twrc::outer;
using oracle::C;

namespace {

const ChannelGains kCaseA{10.0, std::pow(10.0, 1.5), std::pow(10.0, 0.3)};
const ChannelGains kCaseB{100.0, 100.0, std::pow(10.0, 0.8)};

double bisect_ref(const std::function<double(double)>& f, double target, double hi) {
  double lo = 0.0;
  while (f(hi) < target) hi *= 2.0;
  for (int i = 0; i < 300; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

const std::vector<double> kRatios{0.1, 0.25, 0.5, 1.0, 2.0, 4.0, 10.0};

}  // namespace

TEST_CASE("symmetric anchor on case B") {
  const double expect = C(100.0) / 2.0;
  CHECK(expect == doctest::Approx(3.3291).epsilon(1e-5));
  const OuterPoint p = outer_ratio_bound(1.0, kCaseB);
  CHECK(p.rb == doctest::Approx(expect).epsilon(1e-10));
  CHECK(p.ra == doctest::Approx(expect).epsilon(1e-10));
  const auto ref = oracle::vertex_max(oracle::outer_ray(1.0, kCaseB.gamma1, kCaseB.gamma2, kCaseB.gamma3));
  CHECK(p.rb == doctest::Approx(ref.value).epsilon(1e-10));
}

TEST_CASE("ratio bound agrees with vertex enumeration") {
  oracle::GainSampler gs(31);
  for (int i = 0; i < 60; ++i) {
    const ChannelGains g = gs.next();
    for (double k : kRatios) {
      const OuterPoint p = outer_ratio_bound(k, g);
      const auto ref = oracle::vertex_max(oracle::outer_ray(k, g.gamma1, g.gamma2, g.gamma3));
      CHECK(p.rb == doctest::Approx(ref.value).epsilon(1e-9).scale(1.0));
      CHECK(p.ra == doctest::Approx(k * p.rb));
    }
  }
}

TEST_CASE("returned shares satisfy the cuts and use at most four states") {
  oracle::GainSampler gs(32);
  for (int i = 0; i < 100; ++i) {
    const ChannelGains g = gs.next();
    const oracle::Caps c = oracle::caps(g.gamma1, g.gamma2, g.gamma3);
    for (double k : kRatios) {
      const OuterPoint p = outer_ratio_bound(k, g);
      const auto& l = p.shares.lambda;
      CHECK(p.shares.valid());
      CHECK(p.active_states.size() <= 4);
      CHECK(p.ra <= l[0] * c.c13 + l[2] * c.c1 + l[4] * c.c3 + 1e-9);
      CHECK(p.ra <= l[0] * c.c3 + l[3] * c.c2 + l[4] * c.p2 + 1e-9);
      CHECK(p.rb <= l[1] * c.c23 + l[2] * c.c2 + l[5] * c.c3 + 1e-9);
      CHECK(p.rb <= l[1] * c.c3 + l[3] * c.c1 + l[5] * c.p1 + 1e-9);
    }
  }
}

TEST_CASE("axis rays use the one-way bounds") {
  oracle::GainSampler gs(33);
  for (int i = 0; i < 50; ++i) {
    const ChannelGains g = gs.next();
    const oracle::Caps c = oracle::caps(g.gamma1, g.gamma2, g.gamma3);
    const double b_to_a = (c.c23 * c.p1 - c.c3 * c.c3) / (c.c23 + c.p1 - 2 * c.c3);
    const double a_to_b = (c.c13 * c.p2 - c.c3 * c.c3) / (c.c13 + c.p2 - 2 * c.c3);
    CHECK(outer_ratio_bound(0.0, g).rb == doctest::Approx(b_to_a).epsilon(1e-9));
    CHECK(outer_ratio_bound(Ray::ra_axis(), g).ra == doctest::Approx(a_to_b).epsilon(1e-9));
    CHECK(outer_ratio_bound(Ray::ra_axis(), g).rb == 0.0);
    CHECK(one_way_bound(g) == doctest::Approx(b_to_a).epsilon(1e-12));
    CHECK(one_way_bound(g, Direction::a_to_b) == doctest::Approx(a_to_b).epsilon(1e-12));
  }
}

TEST_CASE("one-way bound examples") {
  CHECK(one_way_bound(ChannelGains{1, 3, 0}) == doctest::Approx(2.0 / 3.0));
  CHECK(one_way_bound(ChannelGains{1, 3, 0}, Direction::a_to_b) == doctest::Approx(2.0 / 3.0));
  CHECK(one_way_bound(ChannelGains{0, 0, 0}) == 0.0);
  CHECK(one_way_bound(kCaseA) >= outer_ratio_bound(0.0, kCaseA).rb - 1e-6);
}

TEST_CASE("zero channel") {
  const ChannelGains z{0, 0, 0};
  CHECK(outer_ratio_bound(1.0, z).rb == 0.0);
  CHECK(analytic_rb_bound(1.0, z) == 0.0);
  CHECK(analytic_weighted_bound(1.0, z) == 0.0);
}

TEST_CASE("ratio bound mirrors under gamma1 <-> gamma2") {
  oracle::GainSampler gs(34);
  for (int i = 0; i < 40; ++i) {
    const ChannelGains g = gs.next();
    for (double k : kRatios) {
      const OuterPoint p = outer_ratio_bound(k, g);
      const OuterPoint q = outer_ratio_bound(1.0 / k, g.mirrored());
      CHECK(q.ra == doctest::Approx(p.rb).epsilon(1e-9));
      CHECK(q.rb == doctest::Approx(p.ra).epsilon(1e-9));
    }
  }
}

TEST_CASE("ratio bound is monotone in each gain") {
  oracle::GainSampler gs(35);
  for (int i = 0; i < 40; ++i) {
    const ChannelGains g = gs.next();
    for (double k : {0.5, 1.0, 2.0}) {
      const double base = outer_ratio_bound(k, g).rb;
      CHECK(outer_ratio_bound(k, ChannelGains{g.gamma1, g.gamma2 * 1.5, g.gamma3}).rb >= base - 1e-12);
      CHECK(outer_ratio_bound(k, ChannelGains{std::min(g.gamma1 * 1.5, g.gamma2), g.gamma2, g.gamma3}).rb >= base - 1e-12);
      CHECK(outer_ratio_bound(k, ChannelGains{g.gamma1, g.gamma2, std::min(g.gamma3 * 1.5, g.gamma1)}).rb >= base - 1e-12);
    }
  }
}

TEST_CASE("weighted bound") {
  CHECK(outer_weighted_bound(1, 0, ChannelGains{1, 3, 0}).value == doctest::Approx(2.0 / 3.0));
  oracle::GainSampler gs(36);
  for (int i = 0; i < 20; ++i) {
    const ChannelGains g{gs.next().gamma1, gs.next().gamma2, 0.0};
    CHECK(outer_weighted_bound(1, 0, g).value == doctest::Approx(oracle::two_hop(g.gamma1, g.gamma2)).epsilon(1e-9));
  }
  const ChannelGains unit{1, 1, 0};
  const auto ref = oracle::vertex_max(oracle::outer_weighted(1, 1, 1, 1, 0));
  CHECK(ref.value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(outer_weighted_bound(1, 1, unit).value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_THROWS_AS(outer_weighted_bound(0, 0, unit), ParameterError);
  CHECK_THROWS_AS(outer_weighted_bound(-1, 1, unit), ParameterError);
}

TEST_CASE("weighted bound agrees with vertex enumeration") {
  oracle::GainSampler gs(37);
  for (int i = 0; i < 30; ++i) {
    const ChannelGains g = gs.next();
    for (double k : {0.0, 0.3, 1.0, 3.0}) {
      const WeightedBound w = outer_weighted_bound(1.0, k, g);
      const auto ref = oracle::vertex_max(oracle::outer_weighted(1.0, k, g.gamma1, g.gamma2, g.gamma3));
      CHECK(w.value == doctest::Approx(ref.value).epsilon(1e-9).scale(1.0));
      CHECK(w.ra + k * w.rb == doctest::Approx(w.value).epsilon(1e-9).scale(1.0));
    }
  }
}

TEST_CASE("analytic bound on case B") {
  const double g3 = kCaseB.gamma3;
  const double side = 0.25 * (C(g3) + oracle::Ccoh(100.0, g3));
  CHECK(side == doctest::Approx(2.543).epsilon(2e-4));
  const AnalyticTerms t = analytic_rb_terms(1.0, kCaseB);
  CHECK(t.t[0] == doctest::Approx(C(100.0) / 2.0).epsilon(1e-12));
  CHECK(t.t[2] == doctest::Approx(side).epsilon(1e-12));
  CHECK(t.t[3] == doctest::Approx(side).epsilon(1e-12));
  CHECK(analytic_rb_bound(1.0, kCaseB) == doctest::Approx(3.32911).epsilon(1e-6));
  CHECK(analytic_rb_bound(1.0, kCaseB) == doctest::Approx(C(100.0) / 2.0).epsilon(1e-12));
  CHECK_THROWS_AS(analytic_rb_bound(0.0, kCaseB), ParameterError);
  CHECK_THROWS_AS(analytic_rb_bound(-2.0, kCaseB), ParameterError);
}

TEST_CASE("corollary at k = 1: T2 <= T4") {
  oracle::GainSampler gs(38);
  for (int i = 0; i < 200; ++i) {
    const AnalyticTerms t = analytic_rb_terms(1.0, gs.next());
    CHECK(t.t[1] <= t.t[3] + 1e-12);
  }
}

TEST_CASE("analytic bounds dominate the LP") {
  oracle::GainSampler gs(39);
  for (int i = 0; i < 200; ++i) {
    const ChannelGains g = gs.next();
    for (double k : {0.1, 0.25, 0.5, 0.9, 1.0, 1.5, 2.0, 4.0, 10.0}) {
      CHECK(analytic_rb_bound(k, g) >= outer_ratio_bound(k, g).rb - 1e-9);
    }
    for (double k : {0.0, 0.25, 0.5, 1.0, 2.0, 4.0}) {
      CHECK(analytic_weighted_bound(k, g) >= outer_weighted_bound(k, 1.0, g).value - 1e-9);
    }
  }
}

TEST_CASE("dual point of the ratio bound") {
  const DualCheck a = dual_point_feasible(1.0, kCaseA);
  CHECK(a.feasible);
  CHECK(a.min_slack >= -1e-9);

  oracle::GainSampler gs(40);
  for (int i = 0; i < 100; ++i) {
    const ChannelGains g = gs.next();
    CHECK(dual_point_feasible(2.0, g).feasible);
    for (double k : {1.0, 1.3, 3.0, 8.0}) CHECK(dual_point_feasible(k, g).min_slack >= -1e-9);
  }

  const DualPoint d = rb_dual_point(1.0, kCaseA);
  CHECK(d.y[0] + d.y[1] + d.y[2] + d.y[3] == doctest::Approx(1.0).epsilon(1e-15));
  // Dual objective equals the analytic bound.
  CHECK(d.y[4] == doctest::Approx(analytic_rb_bound(1.0, kCaseA)).epsilon(1e-12));
}

TEST_CASE("weighted analytic bound") {
  const ChannelGains unit{1, 1, 0};
  const AnalyticTerms t = analytic_weighted_terms(1.0, unit);
  CHECK(t.t[0] == doctest::Approx(0.5));
  CHECK(t.t[1] == doctest::Approx(0.5));
  CHECK(t.t[2] == doctest::Approx(1.0));
  CHECK(t.t[3] == doctest::Approx(1.0));
  CHECK(analytic_weighted_bound(1.0, unit) == doctest::Approx(1.0));

  oracle::GainSampler gs(41);
  for (int i = 0; i < 50; ++i) {
    const ChannelGains g = gs.next();
    CHECK(analytic_weighted_terms(0.0, g).t[1] == doctest::Approx(one_way_bound(g)).epsilon(1e-12));
    const DualCheck chk = check_dual_point(weighted_dual_point(1.5, g), 1.5, g);
    CHECK(chk.min_slack >= -1e-9);
  }
}

TEST_CASE("threshold for gamma = 20 dB") {
  const double target = 2.0 * C(100.0);
  CHECK(target == doctest::Approx(13.3164).epsilon(1e-5));
  const auto f = [](double x) { return C(x) + oracle::Ccoh(100.0, x); };
  const double ref = bisect_ref(f, target, 100.0);
  const Thresholds th = capacity_thresholds(ChannelGains{100, 100, 0});
  REQUIRE(th.gamma30.has_value());
  CHECK(*th.gamma30 == doctest::Approx(ref).epsilon(1e-6));
  CHECK(*th.gamma30 == doctest::Approx(37.9).epsilon(1e-3));
  CHECK(10 * std::log10(*th.gamma30) == doctest::Approx(15.8).epsilon(2e-3));
  CHECK(std::abs(threshold_f(100.0, *th.gamma30) - target) <= 1e-8);
  CHECK(th.operative() == *th.gamma30);
}

TEST_CASE("asymmetric thresholds") {
  const double g1 = 10.0, g2 = 40.0;
  const double target = 2.0 * C(g1) * C(g2);
  const double r1 = bisect_ref([&](double x) { return C(g2) * C(x) + C(g1) * oracle::Ccoh(g2, x); }, target, g2);
  const double r2 = bisect_ref([&](double x) { return C(g1) * C(x) + C(g2) * oracle::Ccoh(g1, x); }, target, g2);
  const Thresholds th = capacity_thresholds(ChannelGains{g1, g2, 0});
  REQUIRE(th.gamma31.has_value());
  REQUIRE(th.gamma32.has_value());
  CHECK(*th.gamma31 == doctest::Approx(r1).epsilon(1e-6));
  CHECK(*th.gamma32 == doctest::Approx(r2).epsilon(1e-6));
  CHECK(th.operative() == std::min(*th.gamma31, *th.gamma32));

  // With gamma1 = gamma2 both equations reduce to f.
  const double g = 50.0;
  const double sym = *capacity_thresholds(ChannelGains{g, g, 0}).gamma30;
  const double via_f1 = bisect_ref([&](double x) { return threshold_f1(g, g, x); }, 2.0 * C(g) * C(g), g);
  CHECK(via_f1 == doctest::Approx(sym).epsilon(1e-6));

  CHECK_THROWS_AS(capacity_thresholds(ChannelGains{0, 1, 0}), ParameterError);
}

TEST_CASE("threshold functions increase in gamma3") {
  for (double g : {0.5, 10.0, 1000.0}) {
    double prev = -1.0, prev1 = -1.0, prev2 = -1.0;
    for (int i = 0; i <= 200; ++i) {
      const double x = std::pow(10.0, -3.0 + 6.0 * i / 200.0);
      const double v = threshold_f(g, x);
      const double v1 = threshold_f1(g * 0.3, g, x);
      const double v2 = threshold_f2(g * 0.3, g, x);
      CHECK(v > prev);
      CHECK(v1 > prev1);
      CHECK(v2 > prev2);
      prev = v;
      prev1 = v1;
      prev2 = v2;
    }
  }
}

TEST_CASE("ratio program and its dual") {
  const lp::LinearProgram p = ratio_program(Ray::ratio(1.0), kCaseA);
  CHECK(p.num_vars() == 7);
  CHECK(p.num_rows() == 5);
  const lp::LinearProgram d = lp::dual_of(p);
  CHECK(d.num_vars() == 5);
  CHECK(d.num_rows() == 7);
  CHECK(lp::solve_lp(d).objective_value == doctest::Approx(outer_ratio_bound(1.0, kCaseA).rb).epsilon(1e-9));
}
