#pragma once

// Builder for "push as far as possible along a ray" rate programs.
//
// Variable 0 is the ray length t with (Ra, Rb) = t * (ra_weight, rb_weight).
// Rows are written in terms of Ra and Rb; the builder folds them onto t and
// keeps the rate coefficients so a supporting line can be read off the
// shadow prices at the optimum.

#include <utility>
#include <vector>

#include "twrc/boundary.hpp"
#include "twrc/lp.hpp"

namespace twrc::detail {

using Term = std::pair<std::size_t, double>;

class RayLp {
 public:
  explicit RayLp(const Ray& ray) : ray_(ray) { lp_.add_variable(1.0); }

  std::size_t add_var(double lo = 0.0, double hi = lp::kInfinity) { return lp_.add_variable(0.0, lo, hi); }

  /// ra_coef * Ra + rb_coef * Rb + sum(terms) <rel> rhs
  void add_row(double ra_coef, double rb_coef, const std::vector<Term>& terms, lp::Relation rel,
               double rhs = 0.0) {
    std::vector<double> row(lp_.num_vars(), 0.0);
    row[0] = ra_coef * ray_.ra_weight() + rb_coef * ray_.rb_weight();
    for (const auto& [j, a] : terms) row[j] += a;
    lp_.add_row(std::move(row), rel, rhs);
    rate_coef_.emplace_back(ra_coef, rb_coef);
  }

  [[nodiscard]] const lp::LinearProgram& program() const { return lp_; }

  struct Result {
    Rate ra = 0.0;
    Rate rb = 0.0;
    std::vector<double> x;
    std::optional<SupportLine> support;
  };

  /// Solves the program; it must be feasible and bounded.
  [[nodiscard]] Result solve() const {
    const lp::LpSolution sol = lp::solve_lp(lp_);
    if (!sol.optimal()) {
      throw SolverError("rate LP on " + ray_.describe() + " is " + lp::to_string(sol.status));
    }
    Result res;
    const double t = std::max(0.0, sol.x[0]);
    res.ra = t * ray_.ra_weight();
    res.rb = t * ray_.rb_weight();
    res.x = sol.x;
    double na = 0.0;
    double nb = 0.0;
    for (std::size_t i = 0; i < rate_coef_.size(); ++i) {
      na += sol.duals[i] * rate_coef_[i].first;
      nb += sol.duals[i] * rate_coef_[i].second;
    }
    if (t > 0.0 && (na > 1e-12 || nb > 1e-12)) {
      res.support = SupportLine{na, nb, na * res.ra + nb * res.rb};
    }
    return res;
  }

 private:
  Ray ray_;
  lp::LinearProgram lp_;
  std::vector<std::pair<double, double>> rate_coef_;
};

}  // namespace twrc::detail
