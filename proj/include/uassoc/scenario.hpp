#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uassoc/deactivation.hpp"
#include "uassoc/netmodel.hpp"

namespace uassoc {

/// Thrown on malformed scenario files or invalid generator/harness
/// configuration. Messages carry the offending field path.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ScenarioKind { RANDOM, CONSTRUCTED_4X4, LINEAR };

struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::RANDOM;

  // RANDOM parameters.
  int n_bs = 1;
  int mu_per_bs_ratio = 5;
  double arena_size_m = 1000.0;  ///< square arena side
  std::vector<double> power_choices = {50.0, 125.0, 250.0};
  double noise_dbw = -90.0;
  double gamma = 3.0;
  uint64_t seed = 0;

  // LINEAR parameters.
  LinearNetParams linear;

  void validate() const;
};

/// BS and MU positions i.i.d. uniform over the arena, powers sampled uniformly
/// from power_choices; |U| = ratio * n_bs. Pure function of the spec.
Scenario random_scenario(const ScenarioSpec& spec);

/// Canonical 4-BS / 4-MU topology on a 100 m x 100 m arena with unit powers
/// and gamma = 3: the MUs sit in a loose cluster around one BS, each tilted
/// toward a distinct far BS, so pure assignment-cost minimization collapses
/// everyone onto the near BS while congestion-dominated weightings spread the
/// MUs one per BS.
Scenario constructed_topology();

/// The two-BS linear network embedded as 1-D points on the x axis.
Scenario linear_scenario(const LinearNetParams& p);

void save_scenario(const Scenario& s, const std::string& path);
Scenario load_scenario(const std::string& path);

std::string scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const std::string& text);

}  // namespace uassoc
