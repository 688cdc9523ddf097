#pragma once

// Dense linear programs and a two-phase primal simplex with Bland's rule.
//
// Sized for the rate-region programs in this library (up to a few dozen
// variables and rows). The solver always returns a basic (vertex) optimum,
// is deterministic for a given input, and reports shadow prices so that
// callers can certify optimality or extract supporting lines.

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace twrc::lp {

enum class Relation { less_equal, equal, greater_equal };
enum class Sense { maximize, minimize };
enum class Status { optimal, infeasible, unbounded };

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr double kFeasibilityTol = 1e-9;
inline constexpr double kPivotTol = 1e-9;

struct LinearProgram {
  Sense sense = Sense::maximize;
  std::vector<double> objective;
  std::vector<std::vector<double>> rows;
  std::vector<Relation> relations;
  std::vector<double> rhs;
  /// Per-variable lower bound; empty means all zero. May be -kInfinity.
  std::vector<double> lower;
  /// Per-variable upper bound; empty means unbounded above. May be kInfinity.
  std::vector<double> upper;

  [[nodiscard]] std::size_t num_vars() const { return objective.size(); }
  [[nodiscard]] std::size_t num_rows() const { return rows.size(); }
  [[nodiscard]] double lower_bound(std::size_t j) const { return lower.empty() ? 0.0 : lower[j]; }
  [[nodiscard]] double upper_bound(std::size_t j) const { return upper.empty() ? kInfinity : upper[j]; }

  /// Appends a variable with the given objective coefficient and bounds;
  /// existing rows get a zero coefficient. Returns its index.
  std::size_t add_variable(double cost, double lo = 0.0, double hi = kInfinity);
  /// Appends a row. `coefficients` may be shorter than num_vars(); missing
  /// entries are zero.
  std::size_t add_row(std::vector<double> coefficients, Relation rel, double rhs_value);

  /// Throws ParameterError when the dimensions disagree or a coefficient is
  /// not finite.
  void validate() const;
};

struct LpSolution {
  Status status = Status::infeasible;
  double objective_value = 0.0;
  std::vector<double> x;
  /// Indices of basic columns of the standardized problem, ordered by row.
  /// Column j < num_vars() refers to the (shifted) original variable j.
  std::vector<std::size_t> basis;
  /// Number of equality-form rows after standardization.
  std::size_t standard_rows = 0;
  /// Shadow price of each original row: d(objective_value)/d(rhs_i).
  std::vector<double> duals;
  std::size_t iterations = 0;

  [[nodiscard]] bool optimal() const { return status == Status::optimal; }
};

/// Solves `lp`. Infeasible and unbounded problems are reported through
/// `status`; repeated pivot breakdown or a runaway iteration count throws
/// SolverError.
LpSolution solve_lp(const LinearProgram& lp);

/// The LP dual. A maximize program yields a minimize program and vice versa;
/// dual row j belongs to primal variable j and dual variable i to primal row
/// i. Finite non-zero lower bounds and finite upper bounds are first turned
/// into explicit rows (appended after the original rows).
LinearProgram dual_of(const LinearProgram& lp);

/// Left-hand side of row i at x.
double row_activity(const LinearProgram& lp, std::size_t i, const std::vector<double>& x);

/// Largest constraint or bound violation of x (0 when feasible).
double max_violation(const LinearProgram& lp, const std::vector<double>& x);

std::string to_string(Status status);

}  // namespace twrc::lp
