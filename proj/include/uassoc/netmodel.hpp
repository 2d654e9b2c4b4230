#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uassoc/matrix.hpp"

namespace uassoc {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double distance(const Point& a, const Point& b);

/// Pathloss is meaningless in the near field; separations below this clamp
/// are evaluated at the clamp instead, which also removes the d=0 singularity.
inline constexpr double kMinDistanceM = 1.0;

/// Guard for the combinatorial solvers: refuse instances with more than this
/// many assignments to enumerate.
inline constexpr double kEnumerationCap = 1e7;

double dbw_to_watts(double dbw);
double watts_to_dbw(double watts);

/// Axis-aligned bounding rectangle, origin at the lower-left corner.
struct Arena {
  Point origin;
  double width = 0.0;
  double height = 0.0;

  bool contains(const Point& p) const;
};

/// A physical problem instance: geometry, transmit powers, noise, pathloss.
/// Immutable by convention once constructed; all operations below are pure.
struct Scenario {
  std::vector<Point> bs_positions;
  std::vector<Point> mu_positions;
  std::vector<double> powers;  ///< per-BS transmit power, linear units
  double noise_w = 0.0;        ///< noise power, linear watts
  double gamma = 3.0;          ///< pathloss exponent, >= 2
  Arena arena;

  // Generation provenance, recorded in scenario files.
  std::string prng = "splitmix64";
  std::optional<uint64_t> seed;

  int num_bs() const { return static_cast<int>(bs_positions.size()); }
  int num_mu() const { return static_cast<int>(mu_positions.size()); }

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// Instantaneous per-link rates r[p][a] (nats per channel use) and SINRs under
/// the all-BSs-active interference model.
struct RateTable {
  Matrix rates;
  Matrix sinrs;
};

/// Integral association: one BS index per MU.
struct Assignment {
  std::vector<int> bs_of_mu;

  int num_mu() const { return static_cast<int>(bs_of_mu.size()); }
  void validate(int n_bs) const;

  bool operator==(const Assignment& other) const = default;
};

struct EvalResult {
  std::vector<double> per_mu_rate;  ///< R_p after multiplexing
  double sum_rate = 0.0;
  double sum_delay = 0.0;
  std::vector<int> occupancy;       ///< MUs per BS
  std::vector<uint8_t> active_set;  ///< 1 iff occupancy > 0
};

/// Large-scale pathloss attenuation max(d, d_min)^(-gamma).
double attenuation(const Point& y, const Point& y2, double gamma);

/// Rates and SINRs for every MU-BS pair; interference sums over all other BSs.
RateTable rate_table(const Scenario& s);

/// Per-MU rates, sum rate and sum delay of an assignment under equal resource
/// multiplexing, with the all-active interference model.
EvalResult evaluate(const Scenario& s, const RateTable& rt, const Assignment& f);

/// Same as evaluate(), but idle BSs (no associated MUs) do not transmit, so
/// interference sums only over the active set minus the serving BS.
EvalResult evaluate_deactivated(const Scenario& s, const Assignment& f);

std::vector<int> occupancy_of(const Assignment& f, int n_bs);

}  // namespace uassoc
