#pragma once

// Reference oracles for the test suites. Everything here recomputes results
// from first principles (its own SINR arithmetic, exhaustive enumeration,
// vertex enumeration) and must stay independent of the library code paths it
// cross-checks.

#include <optional>
#include <vector>

#include "uassoc/lp.hpp"
#include "uassoc/netmodel.hpp"
#include "uassoc/scenario.hpp"

namespace oracles {

enum class Objective { SUM_RATE, SUM_DELAY, SUM_RATE_DEACT, SUM_DELAY_DEACT };

/// Sum rate or sum delay of one assignment, recomputed from the scenario
/// geometry with its own attenuation/SINR arithmetic.
double eval_assignment(const uassoc::Scenario& s, const uassoc::Assignment& f, Objective obj);

struct Best {
  uassoc::Assignment assignment;
  double value = 0.0;
};

/// Exhaustive search over every assignment (lexicographic tie-break).
Best exhaustive(const uassoc::Scenario& s, Objective obj);

/// Global minimum of a small LP by brute-force vertex enumeration: every
/// square subsystem of tight constraints is solved and feasibility-checked.
/// Intended for models with <= 6 variables.
std::optional<double> lp_minimum_by_vertex_enumeration(const uassoc::LPModel& m);

/// Random scenario fixture with the given counts (positions uniform in a
/// square arena, powers drawn from {50,125,250}).
uassoc::Scenario random_instance(int n_bs, int n_mu, uint64_t seed, double arena_m = 1000.0);

}  // namespace oracles
