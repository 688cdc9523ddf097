#include "twrc/boundary.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace twrc {

double TimeShares::total() const { return std::accumulate(lambda.begin(), lambda.end(), 0.0); }

std::vector<int> TimeShares::active_states(double tol) const {
  std::vector<int> out;
  for (int i = 0; i < kNumStates; ++i) {
    if (lambda[static_cast<std::size_t>(i)] > tol) out.push_back(i + 1);
  }
  return out;
}

bool TimeShares::valid(double tol) const {
  for (double l : lambda) {
    if (!(l >= -tol && l <= 1.0 + tol)) return false;
  }
  return total() <= 1.0 + tol;
}

TimeShares TimeShares::mirrored() const {
  TimeShares m = *this;
  std::swap(m.lambda[0], m.lambda[1]);
  std::swap(m.lambda[4], m.lambda[5]);
  return m;
}

std::optional<Rate> FlowVars::get(Node from, Node to, int state) const {
  for (const FlowVar& v : z) {
    if (v.from == from && v.to == to && v.state == state) return v.rate;
  }
  return std::nullopt;
}

double BoundaryPoint::theta_deg() const {
  if (ra == 0.0 && rb == 0.0) return 0.0;
  return std::atan2(ra, rb) * 180.0 / std::numbers::pi;
}

double BoundaryPoint::radius() const { return std::hypot(ra, rb); }

namespace {

Node swap_node(Node n) {
  if (n == Node::a) return Node::b;
  if (n == Node::b) return Node::a;
  return Node::r;
}

int swap_state(int s) {
  switch (s) {
    case 1: return 2;
    case 2: return 1;
    case 5: return 6;
    case 6: return 5;
    default: return s;
  }
}

}  // namespace

BoundaryPoint BoundaryPoint::mirrored() const {
  BoundaryPoint m;
  m.ra = rb;
  m.rb = ra;
  m.shares = shares.mirrored();
  if (support) m.support = SupportLine{support->normal_b, support->normal_a, support->offset};
  if (detail) {
    FlowDetail d;
    d.split = {detail->split.alpha2, detail->split.alpha1};
    for (const FlowVar& v : detail->flows.z) {
      d.flows.z.push_back({swap_node(v.from), swap_node(v.to), swap_state(v.state), v.rate});
    }
    m.detail = d;
  }
  return m;
}

}  // namespace twrc
