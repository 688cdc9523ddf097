#include "twrc/protocols.hpp"

#include "twrc/outer.hpp"

namespace twrc {

std::string_view to_string(Protocol p) {
  switch (p) {
    case Protocol::outer: return "outer";
    case Protocol::outer_analytic: return "outer-analytic";
    case Protocol::mabc: return "mabc";
    case Protocol::tdbc: return "tdbc";
    case Protocol::hbc: return "hbc";
    case Protocol::six_state_df: return "six-state-df";
    case Protocol::six_state: return "six-state";
    case Protocol::comabc: return "comabc";
  }
  return "?";
}

std::optional<Protocol> parse_protocol(std::string_view name) {
  for (Protocol p : kAllProtocols) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

BoundaryPoint outer_analytic_boundary(const Ray& ray, const ChannelGains& gains) {
  BoundaryPoint p;
  if (ray.is_ra_axis()) {
    p.ra = outer::one_way_bound(gains, outer::Direction::a_to_b);
  } else if (ray.k() == 0.0) {
    p.rb = outer::one_way_bound(gains, outer::Direction::b_to_a);
  } else {
    p.rb = outer::analytic_rb_bound(ray.k(), gains);
    p.ra = ray.k() * p.rb;
  }
  return p;
}

region::Evaluator evaluator_for(Protocol p, const achievable::DfOptions& df) {
  switch (p) {
    case Protocol::outer:
      return [](const Ray& r, const ChannelGains& g) { return outer::outer_ratio_bound(r, g).boundary(); };
    case Protocol::outer_analytic: return outer_analytic_boundary;
    case Protocol::mabc: return achievable::mabc_boundary;
    case Protocol::tdbc: return achievable::tdbc_boundary;
    case Protocol::hbc:
      return [](const Ray& r, const ChannelGains& g) { return achievable::hbc_boundary(r, g); };
    case Protocol::six_state_df:
      return [df](const Ray& r, const ChannelGains& g) { return achievable::six_state_df_boundary(r, g, df); };
    case Protocol::six_state: return achievable::six_state_boundary;
    case Protocol::comabc: return achievable::comabc_boundary;
  }
  throw ParameterError("unknown protocol");
}

}  // namespace twrc
