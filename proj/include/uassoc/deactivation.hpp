#pragma once

#include <functional>
#include <vector>

#include "uassoc/netmodel.hpp"
#include "uassoc/solvers.hpp"

namespace uassoc {

/// Two BSs at +-d on the x axis with unit power, two MUs at +-delta*d.
struct LinearNetParams {
  double d = 100.0;          ///< BS half-separation, meters
  double delta = 0.5;        ///< MU offset fraction, in (0,1)
  double gamma = 3.0;
  double noise_dbw = -90.0;

  void validate() const;
};

/// f1 assigns both MUs to the left BS (right BS idles); f2 assigns each MU to
/// its near BS (both BSs active).
enum class LinearWinner { F1, F2 };

struct ThresholdReport {
  double lhs = 0.0;
  LinearWinner winner = LinearWinner::F2;
  // The three SINR terms the closed forms are built from:
  //   a_term = (1-delta)^-gamma / (N d^gamma)        near MU under f1
  //   b_term = (1+delta)^-gamma / (N d^gamma)        far MU under f1
  //   c_term = (1-delta)^-gamma / ((1+delta)^-gamma + N d^gamma)   either MU under f2
  double a_term = 0.0;
  double b_term = 0.0;
  double c_term = 0.0;
};

/// Closed-form decision rule for sum-rate maximization with deactivation:
/// lhs = sqrt((1+A)(1+B)) / (1+C)^2, and f1 wins iff lhs > 1.
/// Equality resolves to f2 (prefer load balancing).
ThresholdReport rate_threshold(const LinearNetParams& p);

/// Closed-form decision rule for sum-delay minimization with deactivation:
/// lhs = [ln(1+A) ln(1+B)] / [ln(1+C) ln((1+A)(1+B))], f1 wins iff lhs > 1.
ThresholdReport delay_threshold(const LinearNetParams& p);

struct BoundaryPoint {
  double noise_dbw = 0.0;
  double delta_star = 0.0;
};

struct DecisionBoundary {
  std::vector<BoundaryPoint> rate;
  std::vector<BoundaryPoint> delay;
};

/// For each noise value, bisects delta over the grid's bracketing intervals to
/// locate lhs = 1 crossings of both criteria. Absent crossings are omitted.
DecisionBoundary decision_boundary(double gamma, double d, const std::vector<double>& delta_grid,
                                   const std::vector<double>& noise_grid_dbw);

enum class DeactObjective { RATE, DELAY };

/// Enumerates every assignment, scoring each with evaluate_deactivated.
/// objective_value is the winner's deactivated sum rate (RATE) or sum delay
/// (DELAY); eval holds the conventional all-active evaluation.
SolveReport brute_force_deactivated(const Scenario& s, DeactObjective objective);

/// Interference-activation coupling score for an active-set pattern:
/// sum over ordered BS pairs of coupling(rho_a, rho_b) * d(a,b) * z_a * z_b.
/// Scoring helper only; not an optimization objective.
double activation_penalty(const Scenario& s, const std::vector<uint8_t>& active,
                          const std::function<double(double, double)>& coupling);

}  // namespace uassoc
