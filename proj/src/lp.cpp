#include "twrc/lp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "twrc/core.hpp"

namespace twrc::lp {

std::size_t LinearProgram::add_variable(double cost, double lo, double hi) {
  const bool had_lower = !lower.empty();
  const bool had_upper = !upper.empty();
  if (!had_lower && lo != 0.0) lower.assign(objective.size(), 0.0);
  if (!had_upper && hi != kInfinity) upper.assign(objective.size(), kInfinity);
  objective.push_back(cost);
  if (!lower.empty()) lower.push_back(lo);
  if (!upper.empty()) upper.push_back(hi);
  for (auto& row : rows) row.push_back(0.0);
  return objective.size() - 1;
}

std::size_t LinearProgram::add_row(std::vector<double> coefficients, Relation rel, double rhs_value) {
  coefficients.resize(objective.size(), 0.0);
  rows.push_back(std::move(coefficients));
  relations.push_back(rel);
  rhs.push_back(rhs_value);
  return rows.size() - 1;
}

void LinearProgram::validate() const {
  const std::size_t n = objective.size();
  if (relations.size() != rows.size() || rhs.size() != rows.size()) {
    throw ParameterError("linear program: row, relation and rhs counts differ");
  }
  if ((!lower.empty() && lower.size() != n) || (!upper.empty() && upper.size() != n)) {
    throw ParameterError("linear program: bound vectors must match the variable count");
  }
  for (double c : objective) {
    if (!std::isfinite(c)) throw ParameterError("linear program: non-finite objective coefficient");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) {
      std::ostringstream os;
      os << "linear program: row " << i << " has " << rows[i].size() << " coefficients, expected " << n;
      throw ParameterError(os.str());
    }
    for (double a : rows[i]) {
      if (!std::isfinite(a)) throw ParameterError("linear program: non-finite coefficient");
    }
    if (!std::isfinite(rhs[i])) throw ParameterError("linear program: non-finite rhs");
  }
  for (std::size_t j = 0; j < n; ++j) {
    const double lo = lower_bound(j);
    const double hi = upper_bound(j);
    if (std::isnan(lo) || std::isnan(hi) || lo == kInfinity || hi == -kInfinity || lo > hi) {
      throw ParameterError("linear program: invalid variable bounds");
    }
  }
}

double row_activity(const LinearProgram& lp, std::size_t i, const std::vector<double>& x) {
  double s = 0.0;
  for (std::size_t j = 0; j < lp.num_vars(); ++j) s += lp.rows[i][j] * x[j];
  return s;
}

double max_violation(const LinearProgram& lp, const std::vector<double>& x) {
  double worst = 0.0;
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    const double gap = row_activity(lp, i, x) - lp.rhs[i];
    switch (lp.relations[i]) {
      case Relation::less_equal: worst = std::max(worst, gap); break;
      case Relation::greater_equal: worst = std::max(worst, -gap); break;
      case Relation::equal: worst = std::max(worst, std::abs(gap)); break;
    }
  }
  for (std::size_t j = 0; j < lp.num_vars(); ++j) {
    worst = std::max(worst, lp.lower_bound(j) - x[j]);
    worst = std::max(worst, x[j] - lp.upper_bound(j));
  }
  return worst;
}

std::string to_string(Status status) {
  switch (status) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

// x_j = shift + sign * x'[pos] - x'[neg]
struct VarMap {
  std::size_t pos = 0;
  std::ptrdiff_t neg = -1;
  double shift = 0.0;
  double sign = 1.0;
};

enum class Phase { one, two };

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), data_(rows * (cols + 1), 0.0) {}

  double& at(std::size_t r, std::size_t c) { return data_[r * (n_ + 1) + c]; }
  [[nodiscard]] double at(std::size_t r, std::size_t c) const { return data_[r * (n_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, n_); }
  [[nodiscard]] double rhs(std::size_t r) const { return at(r, n_); }
  [[nodiscard]] std::size_t rows() const { return m_; }
  [[nodiscard]] std::size_t cols() const { return n_; }

  void pivot(std::size_t pr, std::size_t pc) {
    const std::size_t stride = n_ + 1;
    double* prow = &data_[pr * stride];
    const double inv = 1.0 / prow[pc];
    for (std::size_t c = 0; c < stride; ++c) prow[c] *= inv;
    prow[pc] = 1.0;
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == pr) continue;
      double* row = &data_[r * stride];
      const double f = row[pc];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < stride; ++c) row[c] -= f * prow[c];
      row[pc] = 0.0;
    }
  }

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<double> data_;
};

class Simplex {
 public:
  explicit Simplex(const LinearProgram& lp) : lp_(lp) { standardize(); }

  LpSolution run() {
    LpSolution sol;
    sol.standard_rows = tab_.rows();

    // Phase 1: maximize -sum(artificials).
    std::vector<double> cost1(tab_.cols(), 0.0);
    for (std::size_t c = first_art_; c < tab_.cols(); ++c) cost1[c] = -1.0;
    if (first_art_ < tab_.cols()) {
      const Status s1 = iterate(cost1, Phase::one, sol.iterations);
      (void)s1;  // phase one is bounded by construction
      double infeas = 0.0;
      for (std::size_t r = 0; r < tab_.rows(); ++r) {
        if (basis_[r] >= first_art_) infeas += tab_.rhs(r);
      }
      if (infeas > kFeasibilityTol * rhs_scale_) {
        sol.status = Status::infeasible;
        return sol;
      }
      drive_out_artificials();
    }

    std::vector<double> cost2(tab_.cols(), 0.0);
    const double dir = lp_.sense == Sense::maximize ? 1.0 : -1.0;
    for (std::size_t j = 0; j < lp_.num_vars(); ++j) {
      const VarMap& v = map_[j];
      cost2[v.pos] += dir * v.sign * lp_.objective[j];
      if (v.neg >= 0) cost2[static_cast<std::size_t>(v.neg)] -= dir * lp_.objective[j];
    }
    if (iterate(cost2, Phase::two, sol.iterations) == Status::unbounded) {
      sol.status = Status::unbounded;
      return sol;
    }

    sol.status = Status::optimal;
    std::vector<double> xs(tab_.cols(), 0.0);
    for (std::size_t r = 0; r < tab_.rows(); ++r) xs[basis_[r]] = std::max(0.0, tab_.rhs(r));
    sol.x.resize(lp_.num_vars());
    double obj = 0.0;
    for (std::size_t j = 0; j < lp_.num_vars(); ++j) {
      const VarMap& v = map_[j];
      double val = v.shift + v.sign * xs[v.pos];
      if (v.neg >= 0) val -= xs[static_cast<std::size_t>(v.neg)];
      sol.x[j] = std::clamp(val, lp_.lower_bound(j), lp_.upper_bound(j));
      val = sol.x[j];
      obj += lp_.objective[j] * val;
    }
    sol.objective_value = obj;
    sol.basis = basis_;

    sol.duals.resize(lp_.num_rows());
    for (std::size_t i = 0; i < lp_.num_rows(); ++i) {
      double y = 0.0;
      for (std::size_t r = 0; r < tab_.rows(); ++r) y += cost2[basis_[r]] * tab_.at(r, init_col_[i]);
      sol.duals[i] = dir * row_sign_[i] * y / row_scale_[i];
    }
    return sol;
  }

 private:
  void standardize() {
    lp_.validate();
    const std::size_t n = lp_.num_vars();

    // Structural columns: one per variable, then negative parts of free ones.
    map_.resize(n);
    std::size_t ncols = n;
    std::vector<std::pair<std::size_t, double>> bound_rows;  // (column, bound)
    for (std::size_t j = 0; j < n; ++j) {
      const double lo = lp_.lower_bound(j);
      const double hi = lp_.upper_bound(j);
      VarMap& v = map_[j];
      v.pos = j;
      if (std::isfinite(lo)) {
        v.shift = lo;
        if (std::isfinite(hi)) bound_rows.emplace_back(j, hi - lo);
      } else if (std::isfinite(hi)) {
        v.shift = hi;
        v.sign = -1.0;
      } else {
        v.neg = static_cast<std::ptrdiff_t>(ncols++);
      }
    }
    const std::size_t nstruct = ncols;

    struct Row {
      std::vector<double> a;
      Relation rel;
      double b;
    };
    std::vector<Row> rows;
    rows.reserve(lp_.num_rows() + bound_rows.size());
    for (std::size_t i = 0; i < lp_.num_rows(); ++i) {
      Row row{std::vector<double>(nstruct, 0.0), lp_.relations[i], lp_.rhs[i]};
      for (std::size_t j = 0; j < n; ++j) {
        const double a = lp_.rows[i][j];
        if (a == 0.0) continue;
        const VarMap& v = map_[j];
        row.a[v.pos] += v.sign * a;
        if (v.neg >= 0) row.a[static_cast<std::size_t>(v.neg)] -= a;
        row.b -= a * v.shift;
      }
      rows.push_back(std::move(row));
    }
    for (const auto& [col, width] : bound_rows) {
      Row row{std::vector<double>(nstruct, 0.0), Relation::less_equal, width};
      row.a[col] = 1.0;
      rows.push_back(std::move(row));
    }

    row_sign_.assign(rows.size(), 1.0);
    row_scale_.assign(rows.size(), 1.0);
    std::size_t nslack = 0;
    std::size_t nart = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Row& row = rows[i];
      if (row.b < 0.0) {
        for (double& a : row.a) a = -a;
        row.b = -row.b;
        row_sign_[i] = -1.0;
        if (row.rel == Relation::less_equal) {
          row.rel = Relation::greater_equal;
        } else if (row.rel == Relation::greater_equal) {
          row.rel = Relation::less_equal;
        }
      }
      double big = 0.0;
      for (double a : row.a) big = std::max(big, std::abs(a));
      if (big > 0.0) {
        for (double& a : row.a) a /= big;
        row.b /= big;
        row_scale_[i] = big;
      }
      if (row.rel != Relation::equal) ++nslack;
      if (row.rel != Relation::less_equal) ++nart;
      rhs_scale_ = std::max(rhs_scale_, row.b);
    }

    first_art_ = nstruct + nslack;
    tab_ = Tableau(rows.size(), first_art_ + nart);
    basis_.assign(rows.size(), 0);
    init_col_.assign(rows.size(), 0);
    std::size_t s = nstruct;
    std::size_t art = first_art_;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Row& row = rows[i];
      for (std::size_t c = 0; c < nstruct; ++c) tab_.at(i, c) = row.a[c];
      tab_.rhs(i) = row.b;
      switch (row.rel) {
        case Relation::less_equal:
          tab_.at(i, s) = 1.0;
          basis_[i] = init_col_[i] = s++;
          break;
        case Relation::greater_equal:
          tab_.at(i, s++) = -1.0;
          tab_.at(i, art) = 1.0;
          basis_[i] = init_col_[i] = art++;
          break;
        case Relation::equal:
          tab_.at(i, art) = 1.0;
          basis_[i] = init_col_[i] = art++;
          break;
      }
    }
    max_iterations_ = 5000 + 200 * (tab_.rows() + tab_.cols());
  }

  // Lowest-index improving column enters (Bland).
  Status iterate(const std::vector<double>& cost, Phase phase, std::size_t& iterations) {
    const std::size_t eligible = phase == Phase::one ? tab_.cols() : first_art_;
    std::size_t breakdowns = 0;
    std::vector<char> in_basis(tab_.cols(), 0);
    for (;;) {
      std::fill(in_basis.begin(), in_basis.end(), 0);
      for (std::size_t b : basis_) in_basis[b] = 1;

      std::ptrdiff_t leave = -1;
      std::size_t enter = 0;
      bool found = false;
      for (std::size_t c = 0; c < eligible && !found; ++c) {
        if (in_basis[c]) continue;
        double d = cost[c];
        for (std::size_t r = 0; r < tab_.rows(); ++r) d -= cost[basis_[r]] * tab_.at(r, c);
        if (d <= kFeasibilityTol) continue;

        // Two-pass ratio test: bound the step with a small tolerance, then
        // take the largest pivot among rows that block within it.
        double limit = kInfinity;
        bool tiny = false;
        for (std::size_t r = 0; r < tab_.rows(); ++r) {
          const double a = tab_.at(r, c);
          if (a <= kPivotTol) {
            if (a > 0.0) tiny = true;
            continue;
          }
          limit = std::min(limit, (std::max(0.0, tab_.rhs(r)) + kFeasibilityTol) / a);
        }
        std::ptrdiff_t row = -1;
        double pivot = 0.0;
        for (std::size_t r = 0; r < tab_.rows(); ++r) {
          const double a = tab_.at(r, c);
          if (a <= kPivotTol || std::max(0.0, tab_.rhs(r)) / a > limit) continue;
          if (a > pivot || (a == pivot && basis_[r] < basis_[static_cast<std::size_t>(row)])) {
            pivot = a;
            row = static_cast<std::ptrdiff_t>(r);
          }
        }
        if (row < 0) {
          if (tiny) {
            if (++breakdowns > 16) throw SolverError("simplex: repeated pivot breakdown (pivot below 1e-9)");
            continue;
          }
          if (phase == Phase::two) return Status::unbounded;
          continue;
        }
        enter = c;
        leave = row;
        found = true;
      }
      if (!found) return Status::optimal;

      tab_.pivot(static_cast<std::size_t>(leave), enter);
      basis_[static_cast<std::size_t>(leave)] = enter;
      if (++iterations > max_iterations_) throw SolverError("simplex: iteration limit exceeded");
    }
  }

  void drive_out_artificials() {
    for (std::size_t r = 0; r < tab_.rows(); ++r) {
      if (basis_[r] < first_art_) continue;
      for (std::size_t c = 0; c < first_art_; ++c) {
        if (std::abs(tab_.at(r, c)) <= kPivotTol) continue;
        if (std::find(basis_.begin(), basis_.end(), c) != basis_.end()) continue;
        tab_.pivot(r, c);
        basis_[r] = c;
        break;
      }
    }
  }

  const LinearProgram& lp_;
  std::vector<VarMap> map_;
  Tableau tab_{0, 0};
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> init_col_;
  std::vector<double> row_sign_;
  std::vector<double> row_scale_;
  std::size_t first_art_ = 0;
  std::size_t max_iterations_ = 0;
  double rhs_scale_ = 1.0;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) { return Simplex(lp).run(); }

LinearProgram dual_of(const LinearProgram& lp) {
  lp.validate();
  enum class Sign { nonneg, nonpos, free };

  // Fold bounds other than x >= 0, x <= 0 and x free into explicit rows.
  LinearProgram primal = lp;
  primal.lower.clear();
  primal.upper.clear();
  std::vector<Sign> sign(lp.num_vars());
  for (std::size_t j = 0; j < lp.num_vars(); ++j) {
    const double lo = lp.lower_bound(j);
    const double hi = lp.upper_bound(j);
    std::vector<double> unit(lp.num_vars(), 0.0);
    unit[j] = 1.0;
    if (lo == 0.0) {
      sign[j] = Sign::nonneg;
      if (std::isfinite(hi)) primal.add_row(unit, Relation::less_equal, hi);
    } else if (lo == -kInfinity && hi == 0.0) {
      sign[j] = Sign::nonpos;
    } else {
      sign[j] = Sign::free;
      if (std::isfinite(lo)) primal.add_row(unit, Relation::greater_equal, lo);
      if (std::isfinite(hi)) primal.add_row(unit, Relation::less_equal, hi);
    }
  }

  const bool maximize = lp.sense == Sense::maximize;
  LinearProgram dual;
  dual.sense = maximize ? Sense::minimize : Sense::maximize;
  dual.objective = primal.rhs;
  dual.lower.assign(primal.num_rows(), 0.0);
  dual.upper.assign(primal.num_rows(), kInfinity);
  for (std::size_t i = 0; i < primal.num_rows(); ++i) {
    const Relation rel = primal.relations[i];
    if (rel == Relation::equal) {
      dual.lower[i] = -kInfinity;
    } else if ((rel == Relation::greater_equal) == maximize) {
      dual.lower[i] = -kInfinity;
      dual.upper[i] = 0.0;
    }
  }
  for (std::size_t j = 0; j < primal.num_vars(); ++j) {
    std::vector<double> col(primal.num_rows());
    for (std::size_t i = 0; i < primal.num_rows(); ++i) col[i] = primal.rows[i][j];
    Relation rel = Relation::equal;
    if (sign[j] == Sign::nonneg) rel = maximize ? Relation::greater_equal : Relation::less_equal;
    if (sign[j] == Sign::nonpos) rel = maximize ? Relation::less_equal : Relation::greater_equal;
    dual.rows.push_back(std::move(col));
    dual.relations.push_back(rel);
    dual.rhs.push_back(primal.objective[j]);
  }
  return dual;
}

}  // namespace twrc::lp
