#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "uassoc/hst.hpp"
#include "uassoc/lp.hpp"
#include "uassoc/netmodel.hpp"
#include "uassoc/rng.hpp"

namespace uassoc {

/// Thrown when a combinatorial solve would exceed the enumeration cap.
struct EnumerationCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a solver fails in a way that signals a bug or a broken model
/// (e.g. an infeasible LP that should be feasible by construction).
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Row-stochastic |U| x |B| matrix: the fractional relaxation of assignments.
struct FractionalAssignment {
  Matrix x;

  int num_mu() const { return x.rows(); }
  int num_bs() const { return x.cols(); }

  /// Rows must sum to 1 within 1e-9; entries in [0,1] with a small slack for
  /// iterate-level roundoff. Throws std::invalid_argument.
  void validate() const;
};

enum class Formulation { C1R, C1D, Q1D, Q2D, L2D, MINDIST, MAXSINR, C1R_DEACT, C1D_DEACT };

std::string formulation_name(Formulation f);
Formulation formulation_from_name(const std::string& name);

struct SolveReport {
  Formulation formulation = Formulation::C1D;
  double beta = std::numeric_limits<double>::quiet_NaN();  ///< when applicable
  std::optional<FractionalAssignment> fractional;
  Assignment rounded;
  double objective_value = 0.0;
  EvalResult eval;  ///< all-active evaluation of `rounded`
  uint64_t seed = 0;
  int iterations = 0;
  double wall_time_s = 0.0;
};

struct SolverOpts {
  int starts = 16;      ///< multi-start count for the non-convex solver
  int max_iter = 5000;  ///< projected-gradient iteration cap per start
  double tol = 1e-8;    ///< stop when the objective decrease falls below this
  uint64_t seed = 1;

  /// When set, accepted objective values are appended here (test hook).
  std::vector<double>* trace = nullptr;
};

enum class QKind { Q1D, Q2D };

/// Exhaustive sum-rate maximization over all assignments.
SolveReport solve_c1r(const Scenario& s, const RateTable& rt);

/// Exhaustive sum-delay minimization; the objective equals the returned
/// assignment's sum delay exactly.
SolveReport solve_c1d(const Scenario& s, const RateTable& rt);

/// Q1D: sum over BSs of (sum_p x_pa / r_pa)(sum_q x_qa); beta is ignored.
/// Q2D: (1-beta) * sum_pa x_pa / r_pa + beta * sum_a (sum_p x_pa)^2.
double q_objective(QKind kind, const RateTable& rt, double beta, const FractionalAssignment& x);
Matrix q_gradient(QKind kind, const RateTable& rt, double beta, const FractionalAssignment& x);

/// Euclidean projection onto the probability simplex (sort-and-threshold).
std::vector<double> simplex_project(std::vector<double> v);

/// Multi-start projected gradient descent on the (non-convex) Q1D objective.
SolveReport solve_q1d(const Scenario& s, const RateTable& rt, const SolverOpts& opts = {});

/// Projected gradient descent on the convex Q2D objective; single start.
SolveReport solve_q2d(const Scenario& s, const RateTable& rt, double beta, const SolverOpts& opts = {});

/// LP linearization of the split-term objective on an HST over the BS labels.
/// Variables: x_pa plus one xbar per (MU pair, subtree) with
/// xbar <= x_pT + x_qT and xbar <= 2 - x_pT - x_qT.
LPModel build_l2d_model(const RateTable& rt, double beta, const HSTree& tree);

SolveReport solve_l2d(const Scenario& s, const RateTable& rt, double beta, const HSTree& tree);

/// Per-MU argmax of the fractional association; ties to the lowest BS index.
Assignment round_argmax(const FractionalAssignment& x);

enum class HeuristicKind { MINDIST, MAXSINR };

/// Per-MU greedy baseline: nearest BS or highest-SINR BS.
SolveReport heuristic(const Scenario& s, const RateTable& rt, HeuristicKind kind);

struct ConvexityReport {
  int violations = 0;
  std::optional<std::pair<FractionalAssignment, FractionalAssignment>> witness;
};

/// Samples random feasible pairs and tests midpoint convexity
/// q((x1+x2)/2) <= (q(x1)+q(x2))/2 + 1e-10. Returns the violation count and
/// the first witness pair found.
ConvexityReport convexity_probe(QKind kind, const RateTable& rt, double beta, int trials, uint64_t seed);

/// Verifies, over every integral assignment of the instance, that the
/// pairwise unit-distance separation objective equals (|U|^2 - sum kappa^2)/2.
bool congestion_identity_check(const Scenario& s);

/// Uniform random point of the assignment polytope (rows are flat Dirichlet).
FractionalAssignment random_fractional(int n_mu, int n_bs, SplitMix64& rng);

}  // namespace uassoc
