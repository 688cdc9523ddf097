#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "twrc/boundary.hpp"
#include "twrc/core.hpp"

using namespace twrc;

TEST_CASE("cap on exact powers of two") {
  CHECK(cap(0.0) == 0.0);
  CHECK(cap(1.0) == 1.0);
  CHECK(cap(3.0) == 2.0);
  CHECK(cap(255.0) == doctest::Approx(8.0).epsilon(1e-15));
}

TEST_CASE("cap rejects values outside its domain") {
  CHECK_THROWS_AS(cap(-1e-9), DomainError);
  CHECK_THROWS_AS(cap(std::numeric_limits<double>::infinity()), DomainError);
  CHECK_THROWS_AS(cap(std::nan("")), DomainError);
}

TEST_CASE("cap is increasing and subadditive") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1000.0);
  for (int i = 0; i < 2000; ++i) {
    double x = u(rng), y = u(rng);
    if (x > y) std::swap(x, y);
    if (x < y) CHECK(cap(x) < cap(y));
    CHECK(cap(x + y) <= cap(x) + cap(y) + 1e-15);
  }
}

TEST_CASE("cap_coherent combines amplitudes") {
  CHECK(cap_coherent(1.0, 1.0) == doctest::Approx(std::log2(5.0)));
  CHECK(cap_coherent(4.0, 0.0) == doctest::Approx(cap(4.0)));
}

TEST_CASE("dB conversions") {
  CHECK(db_to_linear(0.0) == 1.0);
  CHECK(db_to_linear(10.0) == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(db_to_linear(3.0) == doctest::Approx(1.9953).epsilon(1e-4));
  CHECK(db_to_linear(3.0) == doctest::Approx(std::pow(10.0, 0.3)).epsilon(1e-15));
  CHECK_THROWS_AS(db_to_linear(std::numeric_limits<double>::infinity()), DomainError);
  CHECK(std::isinf(linear_to_db(0.0)));
  CHECK(linear_to_db(0.0) < 0);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> e(-12.0, 12.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = std::pow(10.0, e(rng));
    CHECK(std::abs(db_to_linear(linear_to_db(x)) - x) <= 1e-12 * x);
  }
}

TEST_CASE("validate_gains ordering") {
  const ChannelGains ok = validate_gains(10, 31.6, 2);
  CHECK(ok.gamma1 == 10);
  CHECK(ok.gamma2 == 31.6);
  CHECK(ok.gamma3 == 2);
  CHECK_FALSE(ok.swapped);

  const ChannelGains sw = validate_gains(31.6, 10, 2, true);
  CHECK(sw.gamma1 == 10);
  CHECK(sw.gamma2 == 31.6);
  CHECK(sw.swapped);

  CHECK_THROWS_AS(validate_gains(31.6, 10, 2), ValidationError);
  try {
    validate_gains(1, 2, 5);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("gamma3 > gamma1") != std::string::npos);
  }
  CHECK_THROWS_AS(validate_gains(-1, 2, 0), DomainError);
  CHECK_NOTHROW(validate_gains(0, 0, 0));
}

TEST_CASE("validate_gains is idempotent") {
  const ChannelGains a = validate_gains(31.6, 10, 2, true);
  const ChannelGains b = validate_gains(a.gamma1, a.gamma2, a.gamma3, true);
  CHECK(a.gamma1 == b.gamma1);
  CHECK(a.gamma2 == b.gamma2);
  CHECK(a.gamma3 == b.gamma3);
  CHECK_FALSE(b.swapped);
}

TEST_CASE("link capacities") {
  const LinkCapacities c(ChannelGains{1, 3, 0});
  CHECK(c.c1 == 1.0);
  CHECK(c.c2 == 2.0);
  CHECK(c.c3 == 0.0);
  CHECK(c.c12 == doctest::Approx(std::log2(5.0)));
  CHECK(c.p2 == doctest::Approx(2.0));
  CHECK(c.p1 == doctest::Approx(1.0));
}

TEST_CASE("rays") {
  CHECK(Ray::from_degrees(45.0).k() == 1.0);
  CHECK(Ray::from_degrees(0.0).k() == 0.0);
  CHECK(Ray::from_degrees(90.0).is_ra_axis());
  CHECK(std::isinf(Ray::ra_axis().k()));
  CHECK(Ray::ra_axis().ra_weight() == 1.0);
  CHECK(Ray::ra_axis().rb_weight() == 0.0);
  CHECK(Ray::ratio(2.0).ra_weight() == 2.0);
  CHECK(Ray::ratio(0.0).mirrored().is_ra_axis());
  CHECK(Ray::ratio(4.0).mirrored().k() == doctest::Approx(0.25));
  CHECK(Ray::from_degrees(30.0).theta_deg() == doctest::Approx(30.0));
  CHECK_THROWS_AS(Ray::ratio(-1.0), ParameterError);
}

TEST_CASE("time shares mirror states 1<->2 and 5<->6") {
  TimeShares s;
  s.lambda = {0.1, 0.2, 0.3, 0.15, 0.05, 0.2};
  const TimeShares m = s.mirrored();
  CHECK(m.lambda[0] == 0.2);
  CHECK(m.lambda[1] == 0.1);
  CHECK(m.lambda[2] == 0.3);
  CHECK(m.lambda[3] == 0.15);
  CHECK(m.lambda[4] == 0.2);
  CHECK(m.lambda[5] == 0.05);
  CHECK(s.valid());
  CHECK(s.active_states().size() == 6);
}
