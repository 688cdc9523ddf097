#pragma once

// Test-side reference computations, independent of the library's simplex.
//
// vertex_max enumerates every basic solution of a small LP (all subsets of
// tight inequalities), solves each square system by Gaussian elimination and
// keeps the best feasible one.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "twrc/core.hpp"

namespace oracle {

inline double C(double x) { return std::log2(1.0 + x); }
inline double Ccoh(double x, double y) {
  const double s = std::sqrt(x) + std::sqrt(y);
  return C(s * s);
}

struct Lp {
  int n = 0;
  std::vector<double> c;                  // maximize c.x
  std::vector<std::vector<double>> le;    // le[i].x <= le_rhs[i]
  std::vector<double> le_rhs;
  std::vector<std::vector<double>> eq;    // eq[i].x == eq_rhs[i]
  std::vector<double> eq_rhs;
  // x >= 0 is implicit.
};

inline std::optional<std::vector<double>> solve_square(std::vector<std::vector<double>> a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (std::abs(a[piv][col]) < 1e-11) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

struct VertexResult {
  double value = -std::numeric_limits<double>::infinity();
  std::vector<double> x;
  bool feasible = false;
};

inline VertexResult vertex_max(const Lp& lp, double tol = 1e-9) {
  const int n = lp.n;
  // All inequalities: rows of `le` then -x_j <= 0.
  std::vector<std::vector<double>> ineq = lp.le;
  std::vector<double> ineq_rhs = lp.le_rhs;
  for (int j = 0; j < n; ++j) {
    std::vector<double> r(static_cast<std::size_t>(n), 0.0);
    r[static_cast<std::size_t>(j)] = -1.0;
    ineq.push_back(r);
    ineq_rhs.push_back(0.0);
  }
  const int m = static_cast<int>(ineq.size());
  const int pick = n - static_cast<int>(lp.eq.size());
  VertexResult best;
  if (pick < 0 || pick > m) return best;

  std::vector<int> idx(static_cast<std::size_t>(pick));
  for (int i = 0; i < pick; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    std::vector<std::vector<double>> a = lp.eq;
    std::vector<double> b = lp.eq_rhs;
    for (int i : idx) {
      a.push_back(ineq[static_cast<std::size_t>(i)]);
      b.push_back(ineq_rhs[static_cast<std::size_t>(i)]);
    }
    if (auto x = solve_square(a, b)) {
      bool ok = true;
      for (int i = 0; i < m && ok; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += ineq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * (*x)[static_cast<std::size_t>(j)];
        if (s > ineq_rhs[static_cast<std::size_t>(i)] + tol * (1.0 + std::abs(ineq_rhs[static_cast<std::size_t>(i)]))) ok = false;
      }
      if (ok) {
        double v = 0.0;
        for (int j = 0; j < n; ++j) v += lp.c[static_cast<std::size_t>(j)] * (*x)[static_cast<std::size_t>(j)];
        if (!best.feasible || v > best.value) {
          best.value = v;
          best.x = *x;
          best.feasible = true;
        }
      }
    }
    // Next combination.
    int i = pick - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - pick + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < pick; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return best;
}

struct Caps {
  double c1, c2, c3, c12, c13, c23, p2, p1;
};

inline Caps caps(double g1, double g2, double g3) {
  return {C(g1), C(g2), C(g3), C(g1 + g2), C(g1 + g3), C(g2 + g3), Ccoh(g2, g3), Ccoh(g1, g3)};
}

// Cut-set program along Ra = k Rb: variables (t, l1..l6), maximize t.
inline Lp outer_ray(double k, double g1, double g2, double g3) {
  const Caps c = caps(g1, g2, g3);
  Lp lp;
  lp.n = 7;
  lp.c = {1, 0, 0, 0, 0, 0, 0};
  lp.le = {{k, -c.c13, 0, -c.c1, 0, -c.c3, 0},
           {k, -c.c3, 0, 0, -c.c2, -c.p2, 0},
           {1, 0, -c.c23, -c.c2, 0, 0, -c.c3},
           {1, 0, -c.c3, 0, -c.c1, 0, -c.p1},
           {0, 1, 1, 1, 1, 1, 1}};
  lp.le_rhs = {0, 0, 0, 0, 1};
  return lp;
}

// Cut-set program for wa Ra + wb Rb: variables (Ra, Rb, l1..l6).
inline Lp outer_weighted(double wa, double wb, double g1, double g2, double g3) {
  const Caps c = caps(g1, g2, g3);
  Lp lp;
  lp.n = 8;
  lp.c = {wa, wb, 0, 0, 0, 0, 0, 0};
  lp.le = {{1, 0, -c.c13, 0, -c.c1, 0, -c.c3, 0},
           {1, 0, -c.c3, 0, 0, -c.c2, -c.p2, 0},
           {0, 1, 0, -c.c23, -c.c2, 0, 0, -c.c3},
           {0, 1, 0, -c.c3, 0, -c.c1, 0, -c.p1},
           {0, 0, 1, 1, 1, 1, 1, 1}};
  lp.le_rhs = {0, 0, 0, 0, 1};
  return lp;
}

// HBC along Ra = k Rb: variables (t, l1..l4).
inline Lp hbc_ray(double k, double g1, double g2, double g3, bool tdbc) {
  const Caps c = caps(g1, g2, g3);
  Lp lp;
  lp.n = 5;
  lp.c = {1, 0, 0, 0, 0};
  lp.le = {{k, -c.c1, 0, -c.c1, 0},
           {k, -c.c3, 0, 0, -c.c2},
           {1, 0, -c.c2, -c.c2, 0},
           {1, 0, -c.c3, 0, -c.c1},
           {k + 1, -c.c1, -c.c2, -c.c12, 0}};
  lp.le_rhs = {0, 0, 0, 0, 0};
  lp.eq = {{0, 1, 1, 1, 1}};
  lp.eq_rhs = {1};
  if (tdbc) {
    lp.eq.push_back({0, 0, 0, 1, 0});
    lp.eq_rhs.push_back(0);
  }
  return lp;
}

// 6-state (side information) along Ra = k Rb: variables (t, l1..l6).
inline Lp six_state_ray(double k, double g1, double g2, double g3) {
  const Caps c = caps(g1, g2, g3);
  Lp lp;
  lp.n = 7;
  lp.c = {1, 0, 0, 0, 0, 0, 0};
  lp.le = {{k, -c.c1, 0, -c.c1, 0, -c.c3, 0},
           {k, -c.c3, 0, 0, -c.c2, -c.c23, 0},
           {1, 0, -c.c2, -c.c2, 0, 0, -c.c3},
           {1, 0, -c.c3, 0, -c.c1, 0, -c.c13},
           {k + 1, -c.c1, -c.c2, -c.c12, 0, -c.c3, -c.c3}};
  lp.le_rhs = {0, 0, 0, 0, 0};
  lp.eq = {{0, 1, 1, 1, 1, 1, 1}};
  lp.eq_rhs = {1};
  return lp;
}

// Two-hop rate c1 c2 / (c1 + c2).
inline double two_hop(double g1, double g2) {
  const double a = C(g1), b = C(g2);
  return a + b > 0 ? a * b / (a + b) : 0.0;
}

// Random channel with gamma3 <= gamma1 <= gamma2, drawn in dB.
struct GainSampler {
  std::mt19937_64 rng;
  explicit GainSampler(std::uint64_t seed) : rng(seed) {}
  twrc::ChannelGains next() {
    std::uniform_real_distribution<double> top(-10.0, 40.0), drop(0.0, 20.0);
    const double g2 = top(rng);
    const double g1 = g2 - drop(rng);
    const double g3 = g1 - drop(rng);
    const auto lin = [](double db) { return std::pow(10.0, db / 10.0); };
    return {lin(g1), lin(g2), lin(g3), false};
  }
};

}  // namespace oracle
