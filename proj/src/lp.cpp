#include "uassoc/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace uassoc {

namespace {
constexpr double kPivotEps = 1e-9;
constexpr double kCostEps = 1e-9;
constexpr double kFeasEps = 1e-7;
constexpr int kMaxIterations = 200000;
constexpr int kDegenerateSwitch = 100;  // consecutive degenerate pivots before Bland
}  // namespace

int LPModel::add_var(std::string name, double lo, double hi, double cost) {
  var_names.push_back(std::move(name));
  lower.push_back(lo);
  upper.push_back(hi);
  objective.push_back(cost);
  for (auto& row : rows) row.push_back(0.0);
  return num_vars() - 1;
}

void LPModel::add_row(std::vector<double> coeffs, RowSense sense, double rhs_value) {
  if (coeffs.size() != static_cast<size_t>(num_vars()))
    throw std::invalid_argument("LPModel::add_row: coefficient count mismatch");
  rows.push_back(std::move(coeffs));
  senses.push_back(sense);
  rhs.push_back(rhs_value);
}

void LPModel::validate() const {
  const size_t n = objective.size();
  if (lower.size() != n || upper.size() != n || var_names.size() != n)
    throw std::invalid_argument("LPModel: variable arrays have inconsistent sizes");
  if (senses.size() != rows.size() || rhs.size() != rows.size())
    throw std::invalid_argument("LPModel: row arrays have inconsistent sizes");
  for (const auto& row : rows)
    if (row.size() != n) throw std::invalid_argument("LPModel: row width mismatch");
  for (size_t j = 0; j < n; ++j) {
    if (!std::isfinite(lower[j]))
      throw std::invalid_argument("LPModel: lower bounds must be finite (var " + var_names[j] + ")");
    if (upper[j] < lower[j])
      throw std::invalid_argument("LPModel: empty bound interval for var " + var_names[j]);
  }
}

double lp_residual(const LPModel& m, const std::vector<double>& x) {
  double worst = 0.0;
  for (int i = 0; i < m.num_rows(); ++i) {
    double lhs = 0.0;
    for (int j = 0; j < m.num_vars(); ++j) lhs += m.rows[i][j] * x[j];
    const double d = lhs - m.rhs[i];
    switch (m.senses[i]) {
      case RowSense::LE: worst = std::max(worst, d); break;
      case RowSense::GE: worst = std::max(worst, -d); break;
      case RowSense::EQ: worst = std::max(worst, std::fabs(d)); break;
    }
  }
  for (int j = 0; j < m.num_vars(); ++j) {
    worst = std::max(worst, m.lower[j] - x[j]);
    if (std::isfinite(m.upper[j])) worst = std::max(worst, x[j] - m.upper[j]);
  }
  return worst;
}

namespace {

// Full-tableau simplex state in standard form: min z.x st T y = b, y >= 0.
struct Tableau {
  std::vector<std::vector<double>> t;  // m x ncol
  std::vector<double> b;               // m
  std::vector<int> basis;              // m, column basic in each row
  std::vector<char> banned;            // ncol, columns excluded from pricing
  int ncol = 0;
  int iterations = 0;
  bool bland = false;
  int degenerate_run = 0;

  void pivot(int row, int col) {
    const double piv = t[row][col];
    for (int j = 0; j < ncol; ++j) t[row][j] /= piv;
    b[row] /= piv;
    t[row][col] = 1.0;  // exact
    for (size_t i = 0; i < t.size(); ++i) {
      if (static_cast<int>(i) == row) continue;
      const double factor = t[i][col];
      if (factor == 0.0) continue;
      for (int j = 0; j < ncol; ++j) t[i][j] -= factor * t[row][j];
      t[i][col] = 0.0;
      b[i] -= factor * b[row];
    }
    basis[row] = col;
  }

  // Runs simplex on the given cost row (updated in place). Returns false when
  // an unbounded ray is detected.
  bool minimize(std::vector<double>& z) {
    while (true) {
      if (iterations >= kMaxIterations) throw std::length_error("simplex iteration limit");
      int enter = -1;
      if (bland) {
        for (int j = 0; j < ncol; ++j) {
          if (banned[j]) continue;
          if (z[j] < -kCostEps) { enter = j; break; }
        }
      } else {
        double best = -kCostEps;
        for (int j = 0; j < ncol; ++j) {
          if (banned[j]) continue;
          if (z[j] < best) { best = z[j]; enter = j; }
        }
      }
      if (enter < 0) return true;  // optimal

      int leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (size_t i = 0; i < t.size(); ++i) {
        if (t[i][enter] > kPivotEps) {
          const double ratio = b[i] / t[i][enter];
          if (ratio < best_ratio - 1e-12 ||
              (ratio < best_ratio + 1e-12 && (leave < 0 || basis[i] < basis[leave]))) {
            best_ratio = std::min(best_ratio, ratio);
            leave = static_cast<int>(i);
          }
        }
      }
      if (leave < 0) return false;  // unbounded

      if (best_ratio <= 1e-12) {
        if (++degenerate_run >= kDegenerateSwitch) bland = true;
      } else {
        degenerate_run = 0;
      }

      pivot(leave, enter);
      const double zf = z[enter];
      if (zf != 0.0) {
        for (int j = 0; j < ncol; ++j) z[j] -= zf * t[leave][j];
        z[enter] = 0.0;
      }
      ++iterations;
    }
  }
};

}  // namespace

LPSolution lp_solve(const LPModel& m) {
  m.validate();
  const int n = m.num_vars();

  // Shift every variable to a zero lower bound; finite upper bounds become
  // explicit rows on the shifted variable.
  struct Row {
    std::vector<double> a;
    RowSense sense;
    double b;
  };
  std::vector<Row> rows;
  rows.reserve(m.num_rows() + n);
  for (int i = 0; i < m.num_rows(); ++i) {
    double shift = 0.0;
    for (int j = 0; j < n; ++j) shift += m.rows[i][j] * m.lower[j];
    rows.push_back({m.rows[i], m.senses[i], m.rhs[i] - shift});
  }
  for (int j = 0; j < n; ++j) {
    if (!std::isfinite(m.upper[j])) continue;
    std::vector<double> a(n, 0.0);
    a[j] = 1.0;
    rows.push_back({std::move(a), RowSense::LE, m.upper[j] - m.lower[j]});
  }

  const int nrows = static_cast<int>(rows.size());
  for (auto& row : rows) {
    if (row.b < 0.0) {
      for (double& v : row.a) v = -v;
      row.b = -row.b;
      if (row.sense == RowSense::LE) row.sense = RowSense::GE;
      else if (row.sense == RowSense::GE) row.sense = RowSense::LE;
    }
  }

  int n_slack = 0, n_art = 0;
  for (const auto& row : rows) {
    if (row.sense != RowSense::EQ) ++n_slack;
    if (row.sense != RowSense::LE) ++n_art;
  }

  Tableau tab;
  tab.ncol = n + n_slack + n_art;
  tab.t.assign(nrows, std::vector<double>(tab.ncol, 0.0));
  tab.b.resize(nrows);
  tab.basis.assign(nrows, -1);
  tab.banned.assign(tab.ncol, 0);

  const int slack0 = n;
  const int art0 = n + n_slack;
  int next_slack = slack0, next_art = art0;
  for (int i = 0; i < nrows; ++i) {
    for (int j = 0; j < n; ++j) tab.t[i][j] = rows[i].a[j];
    tab.b[i] = rows[i].b;
    switch (rows[i].sense) {
      case RowSense::LE:
        tab.t[i][next_slack] = 1.0;
        tab.basis[i] = next_slack++;
        break;
      case RowSense::GE:
        tab.t[i][next_slack++] = -1.0;
        tab.t[i][next_art] = 1.0;
        tab.basis[i] = next_art++;
        break;
      case RowSense::EQ:
        tab.t[i][next_art] = 1.0;
        tab.basis[i] = next_art++;
        break;
    }
  }

  LPSolution sol;

  // Phase 1: minimize the sum of artificials.
  if (n_art > 0) {
    std::vector<double> z(tab.ncol, 0.0);
    for (int j = art0; j < tab.ncol; ++j) z[j] = 1.0;
    for (int i = 0; i < nrows; ++i) {
      if (tab.basis[i] >= art0) {
        for (int j = 0; j < tab.ncol; ++j) z[j] -= tab.t[i][j];
      }
    }
    try {
      if (!tab.minimize(z)) throw std::logic_error("phase 1 cannot be unbounded");
    } catch (const std::length_error&) {
      sol.status = LPStatus::ITERATION_LIMIT;
      sol.iterations = tab.iterations;
      return sol;
    }
    double art_sum = 0.0;
    for (int i = 0; i < nrows; ++i)
      if (tab.basis[i] >= art0) art_sum += tab.b[i];
    if (art_sum > kFeasEps) {
      sol.status = LPStatus::INFEASIBLE;
      sol.iterations = tab.iterations;
      return sol;
    }
    // Drive remaining artificials out of the basis where possible; redundant
    // rows keep their artificial at zero, which is harmless once banned.
    for (int i = 0; i < nrows; ++i) {
      if (tab.basis[i] < art0) continue;
      for (int j = 0; j < art0; ++j) {
        if (std::fabs(tab.t[i][j]) > kPivotEps) {
          tab.pivot(i, j);
          ++tab.iterations;
          break;
        }
      }
    }
    for (int j = art0; j < tab.ncol; ++j) tab.banned[j] = 1;
  }

  // Phase 2: reduced costs of the real objective under the current basis.
  std::vector<double> z(tab.ncol, 0.0);
  for (int j = 0; j < n; ++j) z[j] = m.objective[j];
  for (int i = 0; i < nrows; ++i) {
    const int bj = tab.basis[i];
    const double cb = bj < n ? m.objective[bj] : 0.0;
    if (cb == 0.0) continue;
    for (int j = 0; j < tab.ncol; ++j) z[j] -= cb * tab.t[i][j];
  }
  for (int i = 0; i < nrows; ++i) z[tab.basis[i]] = 0.0;

  tab.degenerate_run = 0;
  tab.bland = false;
  bool bounded = true;
  try {
    bounded = tab.minimize(z);
  } catch (const std::length_error&) {
    sol.status = LPStatus::ITERATION_LIMIT;
    sol.iterations = tab.iterations;
    return sol;
  }
  if (!bounded) {
    sol.status = LPStatus::UNBOUNDED;
    sol.iterations = tab.iterations;
    return sol;
  }

  sol.x.assign(n, 0.0);
  for (int i = 0; i < nrows; ++i)
    if (tab.basis[i] < n) sol.x[tab.basis[i]] = tab.b[i];
  for (int j = 0; j < n; ++j) sol.x[j] += m.lower[j];
  sol.value = 0.0;
  for (int j = 0; j < n; ++j) sol.value += m.objective[j] * sol.x[j];
  sol.status = LPStatus::OPTIMAL;
  sol.iterations = tab.iterations;
  return sol;
}

}  // namespace uassoc
