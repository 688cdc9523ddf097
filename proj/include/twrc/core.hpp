#pragma once

// Scalar capacity arithmetic, channel configurations and ray parametrization
// for the three-node half-duplex Gaussian two-way relay channel.
//
// Node a and node b exchange messages through relay r. Links are described
// by linear SNRs: gamma1 (a-r), gamma2 (b-r) and gamma3 (direct a-b).

#include <stdexcept>
#include <string>

namespace twrc {

/// Bits per channel use.
using Rate = double;

// ─── Errors ──────────────────────────────────────────────────────────────────

/// Input outside the mathematical domain of a function (negative SNR, NaN).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A channel configuration or scenario that violates an ordering or schema rule.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bad call parameter (ratio, weights, grid size, range).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical breakdown inside the LP engine.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ─── Capacity ────────────────────────────────────────────────────────────────

/// log2(1 + gamma). Throws DomainError for negative or non-finite input.
Rate cap(double gamma);

/// cap((sqrt(x) + sqrt(y))^2): the coherent-combining MAC term.
Rate cap_coherent(double x, double y);

double db_to_linear(double snr_db);
double linear_to_db(double linear);

// ─── Channel gains ───────────────────────────────────────────────────────────

/// Linear SNRs of the three links.
///
/// Any finite non-negative triple is a legal value: the bound and protocol
/// routines are well defined on all of them, which lets callers evaluate
/// mirrored configurations. Only `validate_gains` enforces the ordering
/// gamma3 <= gamma1 <= gamma2 that the analysis assumes.
struct ChannelGains {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double gamma3 = 0.0;
  /// Set by validate_gains when the roles of a and b were exchanged.
  bool swapped = false;

  /// Same channel with the roles of a and b exchanged.
  [[nodiscard]] ChannelGains mirrored() const {
    return {gamma2, gamma1, gamma3, !swapped};
  }

  [[nodiscard]] bool ordered() const {
    return gamma3 <= gamma1 && gamma3 <= gamma2 && gamma1 <= gamma2;
  }

  bool operator==(const ChannelGains&) const = default;
};

/// Throws DomainError unless all three values are finite and >= 0.
void check_gains(const ChannelGains& gains);

/// Validates the ordering assumptions. With `auto_swap`, gamma1 > gamma2 is
/// repaired by exchanging a and b and recording the swap; otherwise it is a
/// ValidationError. gamma3 above either relay link is always rejected.
ChannelGains validate_gains(double g1, double g2, double g3, bool auto_swap = false);

/// Capacities that appear throughout the cut-set and protocol constraints.
struct LinkCapacities {
  Rate c1 = 0;   // C(g1)
  Rate c2 = 0;   // C(g2)
  Rate c3 = 0;   // C(g3)
  Rate c12 = 0;  // C(g1 + g2)
  Rate c13 = 0;  // C(g1 + g3)
  Rate c23 = 0;  // C(g2 + g3)
  Rate p2 = 0;   // C((sqrt g2 + sqrt g3)^2)
  Rate p1 = 0;   // C((sqrt g1 + sqrt g3)^2)

  explicit LinkCapacities(const ChannelGains& gains);
};

// ─── Rays ────────────────────────────────────────────────────────────────────

/// A ray from the origin of the (Ra, Rb) plane.
///
/// Finite rays carry Ra = k * Rb. The Ra axis (k = infinity) is a dedicated
/// mode rather than a large float. Rate LPs maximize a scalar t with
/// (Ra, Rb) = t * (ra_weight(), rb_weight()).
class Ray {
 public:
  static Ray ratio(double k);
  static Ray ra_axis();
  /// Angle measured from the Rb axis, k = tan(theta). 45 degrees maps to k = 1
  /// exactly and 90 degrees to the Ra axis.
  static Ray from_degrees(double theta_deg);

  [[nodiscard]] bool is_ra_axis() const { return ra_axis_; }
  /// Ratio Ra/Rb; +infinity on the Ra axis.
  [[nodiscard]] double k() const;
  [[nodiscard]] double theta_deg() const { return theta_deg_; }
  [[nodiscard]] double ra_weight() const { return ra_axis_ ? 1.0 : k_; }
  [[nodiscard]] double rb_weight() const { return ra_axis_ ? 0.0 : 1.0; }

  /// Ray reflected across Ra = Rb.
  [[nodiscard]] Ray mirrored() const;

  [[nodiscard]] std::string describe() const;

 private:
  Ray(double k, bool axis, double theta_deg) : k_(k), ra_axis_(axis), theta_deg_(theta_deg) {}
  double k_;
  bool ra_axis_;
  double theta_deg_;
};

}  // namespace twrc
