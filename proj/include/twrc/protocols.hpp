#pragma once

// Named protocols and bounds, each exposed as a per-ray region evaluator.

#include <array>
#include <optional>
#include <string_view>

#include "twrc/achievable.hpp"
#include "twrc/region.hpp"

namespace twrc {

enum class Protocol { outer, outer_analytic, mabc, tdbc, hbc, six_state_df, six_state, comabc };

inline constexpr std::array<Protocol, 8> kAllProtocols{
    Protocol::outer, Protocol::outer_analytic, Protocol::mabc,      Protocol::tdbc,
    Protocol::hbc,   Protocol::six_state_df,   Protocol::six_state, Protocol::comabc};

/// Identifier used in scenario files and output names ("six-state-df", ...).
std::string_view to_string(Protocol p);
std::optional<Protocol> parse_protocol(std::string_view name);

/// Closed-form outer bound on one ray. The two axes use the one-way bounds.
BoundaryPoint outer_analytic_boundary(const Ray& ray, const ChannelGains& gains);

region::Evaluator evaluator_for(Protocol p, const achievable::DfOptions& df = {});

}  // namespace twrc
