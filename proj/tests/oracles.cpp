#include "oracles.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "uassoc/rng.hpp"

namespace oracles {

using uassoc::Assignment;
using uassoc::LPModel;
using uassoc::RowSense;
using uassoc::Scenario;

namespace {

double received(const Scenario& s, int bs, int mu) {
  const double dx = s.bs_positions[bs].x - s.mu_positions[mu].x;
  const double dy = s.bs_positions[bs].y - s.mu_positions[mu].y;
  double dist = std::sqrt(dx * dx + dy * dy);
  if (dist < 1.0) dist = 1.0;
  return s.powers[bs] / std::pow(dist, s.gamma);
}

// Per-MU multiplexed rate under assignment f. `deactivated` drops interference
// from BSs that serve nobody.
double mu_rate(const Scenario& s, const Assignment& f, int p, bool deactivated) {
  const int serving = f.bs_of_mu[p];
  std::vector<int> load(s.num_bs(), 0);
  for (int b : f.bs_of_mu) ++load[b];
  double interference = 0.0;
  for (int b = 0; b < s.num_bs(); ++b) {
    if (b == serving) continue;
    if (deactivated && load[b] == 0) continue;
    interference += received(s, b, p);
  }
  const double sinr = received(s, serving, p) / (interference + s.noise_w);
  return std::log(1.0 + sinr) / load[serving];
}

}  // namespace

double eval_assignment(const Scenario& s, const Assignment& f, Objective obj) {
  const bool deact = obj == Objective::SUM_RATE_DEACT || obj == Objective::SUM_DELAY_DEACT;
  const bool rate = obj == Objective::SUM_RATE || obj == Objective::SUM_RATE_DEACT;
  double total = 0.0;
  for (int p = 0; p < s.num_mu(); ++p) {
    const double r = mu_rate(s, f, p, deact);
    total += rate ? r : 1.0 / r;
  }
  return total;
}

Best exhaustive(const Scenario& s, Objective obj) {
  const bool rate = obj == Objective::SUM_RATE || obj == Objective::SUM_RATE_DEACT;
  Best best;
  best.value = rate ? -std::numeric_limits<double>::infinity()
                    : std::numeric_limits<double>::infinity();
  Assignment f;
  f.bs_of_mu.assign(s.num_mu(), 0);
  while (true) {
    const double value = eval_assignment(s, f, obj);
    if (rate ? value > best.value : value < best.value) {
      best.value = value;
      best.assignment = f;
    }
    int i = s.num_mu() - 1;
    while (i >= 0 && f.bs_of_mu[i] == s.num_bs() - 1) f.bs_of_mu[i--] = 0;
    if (i < 0) break;
    ++f.bs_of_mu[i];
  }
  return best;
}

namespace {

// Gaussian elimination with partial pivoting; returns false when singular.
bool solve_square(std::vector<std::vector<double>> a, std::vector<double> b,
                  std::vector<double>& out) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    if (std::fabs(a[piv][col]) < 1e-11) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double factor = a[r][col] / a[col][col];
      if (factor == 0.0) continue;
      for (int c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  out.resize(n);
  for (int i = 0; i < n; ++i) out[i] = b[i] / a[i][i];
  return true;
}

}  // namespace

std::optional<double> lp_minimum_by_vertex_enumeration(const LPModel& m) {
  const int n = m.num_vars();
  if (n > 6) throw std::invalid_argument("vertex oracle: too many variables");

  // All constraints as (a, b, is_equality) with inequality sense a.x <= b.
  struct Con {
    std::vector<double> a;
    double b;
    bool eq;
  };
  std::vector<Con> cons;
  for (int i = 0; i < m.num_rows(); ++i) {
    if (m.senses[i] == RowSense::LE || m.senses[i] == RowSense::EQ)
      cons.push_back({m.rows[i], m.rhs[i], m.senses[i] == RowSense::EQ});
    if (m.senses[i] == RowSense::GE) {
      std::vector<double> neg(m.rows[i]);
      for (double& v : neg) v = -v;
      cons.push_back({std::move(neg), -m.rhs[i], false});
    }
  }
  for (int j = 0; j < n; ++j) {
    std::vector<double> a(n, 0.0);
    a[j] = -1.0;
    cons.push_back({a, -m.lower[j], false});
    if (std::isfinite(m.upper[j])) {
      std::vector<double> up(n, 0.0);
      up[j] = 1.0;
      cons.push_back({std::move(up), m.upper[j], false});
    }
  }

  const int total = static_cast<int>(cons.size());
  std::optional<double> best;

  // Iterate over all n-subsets of constraints.
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  while (true) {
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (int i : idx) {
      a.push_back(cons[i].a);
      b.push_back(cons[i].b);
    }
    std::vector<double> x;
    if (solve_square(std::move(a), std::move(b), x)) {
      bool feasible = true;
      for (const Con& c : cons) {
        double lhs = 0.0;
        for (int j = 0; j < n; ++j) lhs += c.a[j] * x[j];
        if (c.eq ? std::fabs(lhs - c.b) > 1e-7 : lhs > c.b + 1e-7) {
          feasible = false;
          break;
        }
      }
      if (feasible) {
        double value = 0.0;
        for (int j = 0; j < n; ++j) value += m.objective[j] * x[j];
        if (!best || value < *best) best = value;
      }
    }
    int i = n - 1;
    while (i >= 0 && idx[i] == total - n + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int k = i + 1; k < n; ++k) idx[k] = idx[k - 1] + 1;
  }
  return best;
}

Scenario random_instance(int n_bs, int n_mu, uint64_t seed, double arena_m) {
  uassoc::SplitMix64 rng = uassoc::SplitMix64::stream(seed, 99);
  const std::vector<double> powers = {50.0, 125.0, 250.0};
  Scenario s;
  s.arena = {{0.0, 0.0}, arena_m, arena_m};
  s.gamma = 3.0;
  s.noise_w = uassoc::dbw_to_watts(-90.0);
  for (int a = 0; a < n_bs; ++a) {
    s.bs_positions.push_back({rng.uniform(0.0, arena_m), rng.uniform(0.0, arena_m)});
    s.powers.push_back(powers[rng.next_below(3)]);
  }
  for (int p = 0; p < n_mu; ++p)
    s.mu_positions.push_back({rng.uniform(0.0, arena_m), rng.uniform(0.0, arena_m)});
  s.validate();
  return s;
}

}  // namespace oracles
