#include "twrc/core.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace twrc {

namespace {

constexpr double kRadPerDeg = std::numbers::pi / 180.0;

void require_snr(double gamma, const char* what) {
  if (!std::isfinite(gamma) || gamma < 0.0) {
    std::ostringstream os;
    os << what << " must be finite and >= 0 (got " << gamma << ")";
    throw DomainError(os.str());
  }
}

}  // namespace

Rate cap(double gamma) {
  require_snr(gamma, "SNR");
  return std::log2(1.0 + gamma);
}

Rate cap_coherent(double x, double y) {
  require_snr(x, "SNR");
  require_snr(y, "SNR");
  const double amp = std::sqrt(x) + std::sqrt(y);
  return std::log2(1.0 + amp * amp);
}

double db_to_linear(double snr_db) {
  if (!std::isfinite(snr_db)) throw DomainError("SNR in dB must be finite");
  return std::pow(10.0, snr_db / 10.0);
}

double linear_to_db(double linear) {
  if (!std::isfinite(linear) || linear < 0.0) {
    throw DomainError("linear SNR must be finite and >= 0");
  }
  if (linear == 0.0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(linear);
}

void check_gains(const ChannelGains& gains) {
  require_snr(gains.gamma1, "gamma1");
  require_snr(gains.gamma2, "gamma2");
  require_snr(gains.gamma3, "gamma3");
}

ChannelGains validate_gains(double g1, double g2, double g3, bool auto_swap) {
  ChannelGains gains{g1, g2, g3, false};
  check_gains(gains);
  if (gains.gamma1 > gains.gamma2) {
    if (!auto_swap) {
      throw ValidationError("gamma1 > gamma2: relay links must satisfy gamma1 <= gamma2 "
                            "(enable auto-swap to relabel a and b)");
    }
    gains = {g2, g1, g3, true};
  }
  // After the optional swap gamma1 <= gamma2, so this check covers both links.
  if (gains.gamma3 > gains.gamma1) {
    throw ValidationError(gains.swapped ? "gamma3 > gamma2" : "gamma3 > gamma1");
  }
  return gains;
}

LinkCapacities::LinkCapacities(const ChannelGains& g)
    : c1(cap(g.gamma1)),
      c2(cap(g.gamma2)),
      c3(cap(g.gamma3)),
      c12(cap(g.gamma1 + g.gamma2)),
      c13(cap(g.gamma1 + g.gamma3)),
      c23(cap(g.gamma2 + g.gamma3)),
      p2(cap_coherent(g.gamma2, g.gamma3)),
      p1(cap_coherent(g.gamma1, g.gamma3)) {}

Ray Ray::ratio(double k) {
  if (!std::isfinite(k) || k < 0.0) {
    throw ParameterError("ray ratio k must be finite and >= 0 (use Ray::ra_axis for k = inf)");
  }
  return {k, false, std::atan(k) / kRadPerDeg};
}

Ray Ray::ra_axis() { return {std::numeric_limits<double>::infinity(), true, 90.0}; }

Ray Ray::from_degrees(double theta_deg) {
  if (!std::isfinite(theta_deg) || theta_deg < 0.0 || theta_deg > 90.0) {
    throw ParameterError("ray angle must lie in [0, 90] degrees");
  }
  if (theta_deg == 90.0) return ra_axis();
  double k = std::tan(theta_deg * kRadPerDeg);
  if (theta_deg == 45.0) k = 1.0;
  if (theta_deg == 0.0) k = 0.0;
  return {k, false, theta_deg};
}

double Ray::k() const { return k_; }

Ray Ray::mirrored() const {
  if (ra_axis_) return {0.0, false, 0.0};
  if (k_ == 0.0) return ra_axis();
  return {1.0 / k_, false, 90.0 - theta_deg_};
}

std::string Ray::describe() const {
  std::ostringstream os;
  if (ra_axis_) {
    os << "Ra axis";
  } else {
    os << "theta=" << theta_deg_ << " deg (k=" << k_ << ")";
  }
  return os.str();
}

}  // namespace twrc
