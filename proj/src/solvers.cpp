#include "uassoc/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "uassoc/rng.hpp"

namespace uassoc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void check_shapes(const RateTable& rt, const FractionalAssignment& x) {
  if (!rt.rates.same_shape(x.x)) throw std::invalid_argument("fractional assignment shape mismatch");
}

// Enumerates assignments in lexicographic order (earlier MU most significant).
template <typename Fn>
void for_each_assignment(int n_mu, int n_bs, Fn&& fn) {
  Assignment f;
  f.bs_of_mu.assign(n_mu, 0);
  while (true) {
    fn(static_cast<const Assignment&>(f));
    int i = n_mu - 1;
    while (i >= 0 && f.bs_of_mu[i] == n_bs - 1) f.bs_of_mu[i--] = 0;
    if (i < 0) break;
    ++f.bs_of_mu[i];
  }
}

void check_enumeration_cap(int n_mu, int n_bs) {
  const double count = std::pow(static_cast<double>(n_bs), static_cast<double>(n_mu));
  if (count > kEnumerationCap)
    throw EnumerationCapError("instance too large: " + std::to_string(n_bs) + "^" +
                              std::to_string(n_mu) + " assignments exceeds the enumeration cap");
}

}  // namespace

void FractionalAssignment::validate() const {
  const double entry_slack = 1e-7;  // tolerates iterate-level roundoff
  for (int p = 0; p < x.rows(); ++p) {
    double sum = 0.0;
    for (int a = 0; a < x.cols(); ++a) {
      const double v = x(p, a);
      if (!std::isfinite(v) || v < -entry_slack || v > 1.0 + entry_slack)
        throw std::invalid_argument("fractional assignment: entry (" + std::to_string(p) + "," +
                                    std::to_string(a) + ") outside [0,1]");
      sum += v;
    }
    if (std::fabs(sum - 1.0) > 1e-9)
      throw std::invalid_argument("fractional assignment: row " + std::to_string(p) +
                                  " does not sum to 1");
  }
}

std::string formulation_name(Formulation f) {
  switch (f) {
    case Formulation::C1R: return "c1r";
    case Formulation::C1D: return "c1d";
    case Formulation::Q1D: return "q1d";
    case Formulation::Q2D: return "q2d";
    case Formulation::L2D: return "l2d";
    case Formulation::MINDIST: return "mindist";
    case Formulation::MAXSINR: return "maxsinr";
    case Formulation::C1R_DEACT: return "c1r_deact";
    case Formulation::C1D_DEACT: return "c1d_deact";
  }
  return "?";
}

Formulation formulation_from_name(const std::string& name) {
  if (name == "c1r") return Formulation::C1R;
  if (name == "c1d") return Formulation::C1D;
  if (name == "q1d") return Formulation::Q1D;
  if (name == "q2d") return Formulation::Q2D;
  if (name == "l2d") return Formulation::L2D;
  if (name == "mindist") return Formulation::MINDIST;
  if (name == "maxsinr") return Formulation::MAXSINR;
  if (name == "c1r_deact") return Formulation::C1R_DEACT;
  if (name == "c1d_deact") return Formulation::C1D_DEACT;
  throw std::invalid_argument("unknown formulation: " + name);
}

// ---------------------------------------------------------------------------
// Combinatorial solvers
// ---------------------------------------------------------------------------

namespace {

SolveReport enumerate_best(const Scenario& s, const RateTable& rt, bool maximize_rate) {
  const auto t0 = Clock::now();
  const int n_mu = s.num_mu();
  const int n_bs = s.num_bs();
  check_enumeration_cap(n_mu, n_bs);

  Assignment best;
  double best_value = maximize_rate ? -std::numeric_limits<double>::infinity()
                                    : std::numeric_limits<double>::infinity();
  int count = 0;
  std::vector<int> kappa(n_bs);
  for_each_assignment(n_mu, n_bs, [&](const Assignment& f) {
    ++count;
    std::fill(kappa.begin(), kappa.end(), 0);
    for (int b : f.bs_of_mu) ++kappa[b];
    double value = 0.0;
    if (maximize_rate) {
      for (int p = 0; p < n_mu; ++p) value += rt.rates(p, f.bs_of_mu[p]) / kappa[f.bs_of_mu[p]];
      if (value > best_value) { best_value = value; best = f; }
    } else {
      for (int p = 0; p < n_mu; ++p) value += kappa[f.bs_of_mu[p]] / rt.rates(p, f.bs_of_mu[p]);
      if (value < best_value) { best_value = value; best = f; }
    }
  });

  SolveReport report;
  report.formulation = maximize_rate ? Formulation::C1R : Formulation::C1D;
  report.rounded = best;
  report.objective_value = best_value;
  report.eval = evaluate(s, rt, best);
  report.iterations = count;
  report.wall_time_s = seconds_since(t0);
  return report;
}

}  // namespace

SolveReport solve_c1r(const Scenario& s, const RateTable& rt) { return enumerate_best(s, rt, true); }

SolveReport solve_c1d(const Scenario& s, const RateTable& rt) { return enumerate_best(s, rt, false); }

// ---------------------------------------------------------------------------
// Quadratic objectives and projected gradient descent
// ---------------------------------------------------------------------------

double q_objective(QKind kind, const RateTable& rt, double beta, const FractionalAssignment& x) {
  check_shapes(rt, x);
  x.validate();
  const int n_mu = x.num_mu();
  const int n_bs = x.num_bs();
  if (kind == QKind::Q1D) {
    // sum_a (sum_p x_pa / r_pa)(sum_q x_qa)
    double total = 0.0;
    for (int a = 0; a < n_bs; ++a) {
      double cost = 0.0, load = 0.0;
      for (int p = 0; p < n_mu; ++p) {
        cost += x.x(p, a) / rt.rates(p, a);
        load += x.x(p, a);
      }
      total += cost * load;
    }
    return total;
  }
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in [0,1]");
  double linear = 0.0, congestion = 0.0;
  for (int a = 0; a < n_bs; ++a) {
    double load = 0.0;
    for (int p = 0; p < n_mu; ++p) {
      linear += x.x(p, a) / rt.rates(p, a);
      load += x.x(p, a);
    }
    congestion += load * load;
  }
  return (1.0 - beta) * linear + beta * congestion;
}

Matrix q_gradient(QKind kind, const RateTable& rt, double beta, const FractionalAssignment& x) {
  check_shapes(rt, x);
  x.validate();
  const int n_mu = x.num_mu();
  const int n_bs = x.num_bs();
  Matrix g(n_mu, n_bs);
  if (kind == QKind::Q1D) {
    for (int a = 0; a < n_bs; ++a) {
      double cost = 0.0, load = 0.0;
      for (int p = 0; p < n_mu; ++p) {
        cost += x.x(p, a) / rt.rates(p, a);
        load += x.x(p, a);
      }
      for (int p = 0; p < n_mu; ++p) g(p, a) = load / rt.rates(p, a) + cost;
    }
    return g;
  }
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in [0,1]");
  for (int a = 0; a < n_bs; ++a) {
    double load = 0.0;
    for (int p = 0; p < n_mu; ++p) load += x.x(p, a);
    for (int p = 0; p < n_mu; ++p) g(p, a) = (1.0 - beta) / rt.rates(p, a) + 2.0 * beta * load;
  }
  return g;
}

std::vector<double> simplex_project(std::vector<double> v) {
  for (double x : v)
    if (!std::isfinite(x)) throw std::invalid_argument("simplex_project: non-finite entry");
  const int n = static_cast<int>(v.size());
  if (n == 0) throw std::invalid_argument("simplex_project: empty vector");
  std::vector<double> u = v;
  std::sort(u.begin(), u.end(), std::greater<>());
  double running = 0.0, theta = 0.0;
  for (int j = 0; j < n; ++j) {
    running += u[j];
    const double candidate = (running - 1.0) / (j + 1);
    if (u[j] - candidate > 0.0) theta = candidate;
  }
  for (double& x : v) x = std::max(x - theta, 0.0);
  return v;
}

FractionalAssignment random_fractional(int n_mu, int n_bs, SplitMix64& rng) {
  FractionalAssignment out{Matrix(n_mu, n_bs)};
  for (int p = 0; p < n_mu; ++p) {
    double sum = 0.0;
    for (int a = 0; a < n_bs; ++a) {
      const double e = -std::log1p(-rng.next_double());
      out.x(p, a) = e;
      sum += e;
    }
    if (sum <= 0.0) {
      for (int a = 0; a < n_bs; ++a) out.x(p, a) = 1.0 / n_bs;
    } else {
      for (int a = 0; a < n_bs; ++a) out.x(p, a) /= sum;
    }
  }
  return out;
}

namespace {

FractionalAssignment uniform_fractional(int n_mu, int n_bs) {
  return FractionalAssignment{Matrix(n_mu, n_bs, 1.0 / n_bs)};
}

struct PgdResult {
  FractionalAssignment x;
  double objective = 0.0;
  int iterations = 0;
};

// Projected gradient descent over the product of per-MU simplices with Armijo
// backtracking along the projection arc. Accepted steps never increase the
// objective; stops when the decrease falls below opts.tol.
PgdResult projected_gradient(QKind kind, const RateTable& rt, double beta, FractionalAssignment x,
                             const SolverOpts& opts) {
  constexpr double kArmijoSlope = 1e-4;
  constexpr double kShrink = 0.5;
  constexpr double kMinStep = 1e-16;

  const int n_mu = x.num_mu();
  const int n_bs = x.num_bs();
  double fx = q_objective(kind, rt, beta, x);
  if (opts.trace) opts.trace->push_back(fx);
  double step0 = 1.0;
  int accepted = 0;

  std::vector<double> row(n_bs);
  for (int it = 0; it < opts.max_iter; ++it) {
    const Matrix g = q_gradient(kind, rt, beta, x);
    double t = step0;
    bool ok = false;
    FractionalAssignment trial{Matrix(n_mu, n_bs)};
    double ft = fx;
    while (t >= kMinStep) {
      for (int p = 0; p < n_mu; ++p) {
        for (int a = 0; a < n_bs; ++a) row[a] = x.x(p, a) - t * g(p, a);
        const std::vector<double> proj = simplex_project(row);
        for (int a = 0; a < n_bs; ++a) trial.x(p, a) = proj[a];
      }
      ft = q_objective(kind, rt, beta, trial);
      double along = 0.0;
      for (int p = 0; p < n_mu; ++p)
        for (int a = 0; a < n_bs; ++a) along += g(p, a) * (trial.x(p, a) - x.x(p, a));
      if (ft <= fx + kArmijoSlope * along) {
        ok = true;
        break;
      }
      t *= kShrink;
    }
    if (!ok) break;
    const double decrease = fx - ft;
    x = std::move(trial);
    fx = ft;
    ++accepted;
    if (opts.trace) opts.trace->push_back(fx);
    step0 = std::min(t * 2.0, 1e8);
    if (decrease < opts.tol) break;
  }
  return {std::move(x), fx, accepted};
}

SolveReport fractional_report(Formulation formulation, double beta, const Scenario& s,
                              const RateTable& rt, FractionalAssignment x, double objective,
                              uint64_t seed, int iterations, double wall_time_s) {
  SolveReport report;
  report.formulation = formulation;
  report.beta = beta;
  report.rounded = round_argmax(x);
  report.fractional = std::move(x);
  report.objective_value = objective;
  report.eval = evaluate(s, rt, report.rounded);
  report.seed = seed;
  report.iterations = iterations;
  report.wall_time_s = wall_time_s;
  return report;
}

}  // namespace

SolveReport solve_q1d(const Scenario& s, const RateTable& rt, const SolverOpts& opts) {
  if (opts.starts < 1) throw std::invalid_argument("solve_q1d: starts must be >= 1");
  const auto t0 = Clock::now();
  const int n_mu = s.num_mu();
  const int n_bs = s.num_bs();

  PgdResult best;
  best.objective = std::numeric_limits<double>::infinity();
  int total_iters = 0;
  for (int k = 0; k < opts.starts; ++k) {
    FractionalAssignment x0 = k == 0 ? uniform_fractional(n_mu, n_bs) : [&] {
      SplitMix64 rng = SplitMix64::stream(opts.seed, static_cast<uint64_t>(k));
      return random_fractional(n_mu, n_bs, rng);
    }();
    PgdResult res = projected_gradient(QKind::Q1D, rt, 0.0, std::move(x0), opts);
    total_iters += res.iterations;
    if (res.objective < best.objective) best = std::move(res);
  }
  return fractional_report(Formulation::Q1D, std::numeric_limits<double>::quiet_NaN(), s, rt,
                           std::move(best.x), best.objective, opts.seed, total_iters,
                           seconds_since(t0));
}

SolveReport solve_q2d(const Scenario& s, const RateTable& rt, double beta, const SolverOpts& opts) {
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("solve_q2d: beta must lie in [0,1]");
  const auto t0 = Clock::now();
  // Convex objective: a single start suffices; opts.starts is ignored.
  PgdResult res =
      projected_gradient(QKind::Q2D, rt, beta, uniform_fractional(s.num_mu(), s.num_bs()), opts);
  return fractional_report(Formulation::Q2D, beta, s, rt, std::move(res.x), res.objective,
                           opts.seed, res.iterations, seconds_since(t0));
}

// ---------------------------------------------------------------------------
// HST-linearized LP
// ---------------------------------------------------------------------------

LPModel build_l2d_model(const RateTable& rt, double beta, const HSTree& tree) {
  const int n_mu = rt.rates.rows();
  const int n_bs = rt.rates.cols();
  if (tree.num_labels() != n_bs)
    throw std::invalid_argument("build_l2d_model: tree has " + std::to_string(tree.num_labels()) +
                                " leaves but the instance has " + std::to_string(n_bs) + " BSs");
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in [0,1]");

  const std::vector<Subtree> subtrees = enumerate_subtrees(tree);
  const int n_sub = static_cast<int>(subtrees.size());
  const int n_pairs = n_mu * (n_mu - 1) / 2;
  const long long n_vars = static_cast<long long>(n_mu) * n_bs +
                           static_cast<long long>(n_pairs) * n_sub;
  if (n_vars > 20000)
    throw EnumerationCapError("instance too large for the dense LP: " + std::to_string(n_vars) +
                              " variables");

  LPModel m;
  for (int p = 0; p < n_mu; ++p)
    for (int a = 0; a < n_bs; ++a)
      m.add_var("x[" + std::to_string(p) + "][" + std::to_string(a) + "]", 0.0, 1.0,
                (1.0 - beta) / rt.rates(p, a));

  const int xbar0 = n_mu * n_bs;
  for (int p = 0; p < n_mu; ++p)
    for (int q = p + 1; q < n_mu; ++q)
      for (int t = 0; t < n_sub; ++t)
        m.add_var("xbar[" + std::to_string(p) + "," + std::to_string(q) + "][" + std::to_string(t) + "]",
                  0.0, 1.0, -(beta / 2.0) * subtrees[t].length);

  auto x_index = [n_bs](int p, int a) { return p * n_bs + a; };

  // Per-MU membership of the relaxed assignment polytope.
  for (int p = 0; p < n_mu; ++p) {
    std::vector<double> row(m.num_vars(), 0.0);
    for (int a = 0; a < n_bs; ++a) row[x_index(p, a)] = 1.0;
    m.add_row(std::move(row), RowSense::EQ, 1.0);
  }

  // xbar_eT <= x_pT + x_qT and xbar_eT <= 2 - x_pT - x_qT, with
  // x_pT = sum of x_pa over the subtree's leaves. Exact at integral points:
  // the maximal feasible xbar is |x_pT - x_qT| there.
  int e = 0;
  for (int p = 0; p < n_mu; ++p) {
    for (int q = p + 1; q < n_mu; ++q, ++e) {
      for (int t = 0; t < n_sub; ++t) {
        const int xb = xbar0 + e * n_sub + t;
        std::vector<double> low(m.num_vars(), 0.0), high(m.num_vars(), 0.0);
        low[xb] = 1.0;
        high[xb] = 1.0;
        for (int a : subtrees[t].leaves) {
          low[x_index(p, a)] = -1.0;
          low[x_index(q, a)] = -1.0;
          high[x_index(p, a)] = 1.0;
          high[x_index(q, a)] = 1.0;
        }
        m.add_row(std::move(low), RowSense::LE, 0.0);
        m.add_row(std::move(high), RowSense::LE, 2.0);
      }
    }
  }
  return m;
}

SolveReport solve_l2d(const Scenario& s, const RateTable& rt, double beta, const HSTree& tree) {
  const auto t0 = Clock::now();
  const LPModel model = build_l2d_model(rt, beta, tree);
  const LPSolution sol = lp_solve(model);
  if (sol.status != LPStatus::OPTIMAL) {
    const char* what = sol.status == LPStatus::INFEASIBLE  ? "infeasible"
                       : sol.status == LPStatus::UNBOUNDED ? "unbounded"
                                                           : "iteration limit";
    throw SolverError(std::string("solve_l2d: LP ") + what +
                      " on a model that is feasible and bounded by construction");
  }

  const int n_mu = s.num_mu();
  const int n_bs = s.num_bs();
  FractionalAssignment x{Matrix(n_mu, n_bs)};
  for (int p = 0; p < n_mu; ++p) {
    double sum = 0.0;
    for (int a = 0; a < n_bs; ++a) {
      const double v = std::clamp(sol.x[p * n_bs + a], 0.0, 1.0);
      x.x(p, a) = v;
      sum += v;
    }
    // Scrub simplex roundoff so the row is exactly stochastic.
    for (int a = 0; a < n_bs; ++a) x.x(p, a) /= sum;
  }
  return fractional_report(Formulation::L2D, beta, s, rt, std::move(x), sol.value, 0,
                           sol.iterations, seconds_since(t0));
}

// ---------------------------------------------------------------------------
// Rounding, heuristics and probes
// ---------------------------------------------------------------------------

Assignment round_argmax(const FractionalAssignment& x) {
  x.validate();
  Assignment f;
  f.bs_of_mu.resize(x.num_mu());
  for (int p = 0; p < x.num_mu(); ++p) {
    int best = 0;
    for (int a = 1; a < x.num_bs(); ++a)
      if (x.x(p, a) > x.x(p, best)) best = a;
    f.bs_of_mu[p] = best;
  }
  return f;
}

SolveReport heuristic(const Scenario& s, const RateTable& rt, HeuristicKind kind) {
  const auto t0 = Clock::now();
  s.validate();
  Assignment f;
  f.bs_of_mu.resize(s.num_mu());
  for (int p = 0; p < s.num_mu(); ++p) {
    int best = 0;
    for (int a = 1; a < s.num_bs(); ++a) {
      if (kind == HeuristicKind::MINDIST) {
        if (distance(s.bs_positions[a], s.mu_positions[p]) <
            distance(s.bs_positions[best], s.mu_positions[p]))
          best = a;
      } else {
        if (rt.sinrs(p, a) > rt.sinrs(p, best)) best = a;
      }
    }
    f.bs_of_mu[p] = best;
  }
  SolveReport report;
  report.formulation = kind == HeuristicKind::MINDIST ? Formulation::MINDIST : Formulation::MAXSINR;
  report.rounded = f;
  report.objective_value = std::numeric_limits<double>::quiet_NaN();
  report.eval = evaluate(s, rt, f);
  report.wall_time_s = seconds_since(t0);
  return report;
}

ConvexityReport convexity_probe(QKind kind, const RateTable& rt, double beta, int trials,
                                uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("convexity_probe: trials must be >= 1");
  const int n_mu = rt.rates.rows();
  const int n_bs = rt.rates.cols();
  SplitMix64 rng = SplitMix64::stream(seed, 0);
  ConvexityReport report;
  for (int trial = 0; trial < trials; ++trial) {
    const FractionalAssignment x1 = random_fractional(n_mu, n_bs, rng);
    const FractionalAssignment x2 = random_fractional(n_mu, n_bs, rng);
    FractionalAssignment mid{Matrix(n_mu, n_bs)};
    for (int p = 0; p < n_mu; ++p)
      for (int a = 0; a < n_bs; ++a) mid.x(p, a) = 0.5 * (x1.x(p, a) + x2.x(p, a));
    const double q1 = q_objective(kind, rt, beta, x1);
    const double q2 = q_objective(kind, rt, beta, x2);
    const double qm = q_objective(kind, rt, beta, mid);
    if (qm > 0.5 * (q1 + q2) + 1e-10) {
      ++report.violations;
      if (!report.witness) report.witness = std::make_pair(x1, x2);
    }
  }
  return report;
}

bool congestion_identity_check(const Scenario& s) {
  const int n_mu = s.num_mu();
  const int n_bs = s.num_bs();
  check_enumeration_cap(n_mu, n_bs);
  bool all_match = true;
  for_each_assignment(n_mu, n_bs, [&](const Assignment& f) {
    // Pairwise separation under the unit label metric, straight from the
    // quadruple sum.
    double lhs = 0.0;
    for (int p = 0; p < n_mu; ++p)
      for (int q = 0; q < n_mu; ++q)
        if (f.bs_of_mu[p] != f.bs_of_mu[q]) lhs += 0.5;
    const std::vector<int> kappa = occupancy_of(f, n_bs);
    int sq = 0;
    for (int k : kappa) sq += k * k;
    const double rhs = (static_cast<double>(n_mu) * n_mu - sq) / 2.0;
    if (lhs != rhs) all_match = false;
  });
  return all_match;
}

}  // namespace uassoc
