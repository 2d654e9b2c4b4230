#pragma once

#include <string>
#include <vector>

namespace uassoc {

enum class RowSense { LE, EQ, GE };

/// Dense linear program: minimize c.x subject to row constraints and variable
/// bounds. Rows are stored as full coefficient vectors; intended for
/// desk-scale models.
struct LPModel {
  std::vector<double> objective;
  std::vector<std::vector<double>> rows;
  std::vector<RowSense> senses;
  std::vector<double> rhs;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<std::string> var_names;

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }

  int add_var(std::string name, double lo, double hi, double cost);
  void add_row(std::vector<double> coeffs, RowSense sense, double rhs_value);

  /// Throws std::invalid_argument on inconsistent dimensions.
  void validate() const;
};

enum class LPStatus { OPTIMAL, INFEASIBLE, UNBOUNDED, ITERATION_LIMIT };

struct LPSolution {
  std::vector<double> x;
  double value = 0.0;
  LPStatus status = LPStatus::OPTIMAL;
  int iterations = 0;
};

/// Two-phase dense primal simplex. Pricing is Dantzig by default and falls
/// back to Bland's rule after a run of degenerate pivots, which guarantees
/// termination. Optimal solutions satisfy all constraints to within 1e-7.
LPSolution lp_solve(const LPModel& m);

/// Largest constraint/bound violation of x under the model.
double lp_residual(const LPModel& m, const std::vector<double>& x);

}  // namespace uassoc
