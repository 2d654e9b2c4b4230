#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uassoc/deactivation.hpp"
#include "uassoc/scenario.hpp"
#include "uassoc/solvers.hpp"

namespace uassoc {

enum class OutputFormat { CSV, JSON };

/// Configuration for `compare` and `scaling` runs. Parsed from JSON; see
/// sweep_config_from_json for the schema.
struct SweepConfig {
  // Scenario source: exactly one of the two.
  std::optional<std::string> scenario_file;
  std::optional<ScenarioSpec> generator;

  std::vector<Formulation> formulations;
  std::vector<double> beta_grid = {0.0};
  std::vector<uint64_t> hst_seeds = {1};
  SolverOpts solver;
  int replications = 1;

  // scaling only: BS counts to sweep; MU count follows the generator ratio.
  std::vector<int> sizes;

  /// Wall times vary run to run; they are only written when asked for, so the
  /// default output is byte-stable across reruns.
  bool include_timing = false;

  void validate(bool scaling) const;
};

struct CompareRow {
  Formulation formulation = Formulation::C1D;
  double beta = 0.0;
  int replication = 0;
  std::optional<uint64_t> scenario_seed;
  uint64_t solver_seed = 0;
  std::optional<uint64_t> hst_seed;
  double objective = 0.0;
  double sum_rate = 0.0;
  double sum_delay = 0.0;
  std::vector<int> occupancy;
  std::vector<int> assignment;
  int iterations = 0;
  double wall_time_s = 0.0;
  std::string error;  ///< non-empty when the solve failed; numeric fields unset
};

/// One row per (formulation, beta[, hst seed], replication), in config order.
/// Per-row solver failures are recorded in the row and the run continues;
/// combinatorial formulations beyond the enumeration cap are refused upfront.
std::vector<CompareRow> run_compare(const SweepConfig& cfg);

struct ScalingRow {
  int n_bs = 0;
  int n_mu = 0;
  int replication = 0;
  uint64_t scenario_seed = 0;
  double q1d_delay_per_mu = 0.0;
  double q2d_delay_per_mu = 0.0;
  double q2d_best_beta = 0.0;  ///< delay-minimizing beta; ties to the smaller
  double mindist_delay_per_mu = 0.0;
  double maxsinr_delay_per_mu = 0.0;
};

/// Random-network scaling study: per (size, replication), per-MU sum delay of
/// Q1D, best-beta Q2D and the two greedy baselines.
std::vector<ScalingRow> run_scaling(const SweepConfig& cfg);

struct LinearSweepRow {
  double param = 0.0;  ///< delta or noise_dbw depending on the sweep
  double lhs_rate = 0.0;
  LinearWinner winner_rate = LinearWinner::F2;
  double lhs_delay = 0.0;
  LinearWinner winner_delay = LinearWinner::F2;
  LinearWinner brute_rate = LinearWinner::F2;   ///< brute force restricted to {f1,f2}
  LinearWinner brute_delay = LinearWinner::F2;
};

struct LinearGrids {
  std::vector<double> delta_grid;
  std::vector<double> noise_grid_dbw;
};

struct LinearExampleResult {
  LinearNetParams params;
  std::vector<LinearSweepRow> delta_sweep;  ///< lhs vs delta at the fixed noise
  std::vector<LinearSweepRow> noise_sweep;  ///< lhs vs noise at the fixed delta
  DecisionBoundary boundary;
};

/// Default grids: delta 0.05..0.95 step 0.05, noise -120..-60 dBW step 5.
LinearGrids default_linear_grids();

LinearExampleResult run_linear_example(const LinearNetParams& params, const LinearGrids& grids);

// ---------------------------------------------------------------------------
// Serialization. All writers are deterministic byte-for-byte given equal
// inputs; doubles are formatted with %.12g.
// ---------------------------------------------------------------------------

std::string compare_to_csv(const std::vector<CompareRow>& rows, bool include_timing);
std::string compare_to_json(const std::vector<CompareRow>& rows, bool include_timing);
std::string scaling_to_csv(const std::vector<ScalingRow>& rows);
std::string scaling_to_json(const std::vector<ScalingRow>& rows);
std::string linear_example_to_csv(const LinearExampleResult& r);
std::string linear_example_to_json(const LinearExampleResult& r);

SweepConfig sweep_config_from_json(const std::string& text, bool scaling);
std::string sweep_config_to_json(const SweepConfig& cfg);

std::string report_to_csv(const SolveReport& report, bool include_timing);
std::string report_to_json(const SolveReport& report, bool include_timing);

}  // namespace uassoc
