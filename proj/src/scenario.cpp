#include "uassoc/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "uassoc/rng.hpp"

namespace uassoc {

using nlohmann::json;

void ScenarioSpec::validate() const {
  switch (kind) {
    case ScenarioKind::RANDOM:
      if (n_bs < 1) throw ConfigError("n_bs: must be >= 1");
      if (mu_per_bs_ratio < 1) throw ConfigError("mu_per_bs_ratio: must be >= 1");
      if (!(arena_size_m > 0.0)) throw ConfigError("arena_size_m: must be positive");
      if (power_choices.empty()) throw ConfigError("power_choices: must be non-empty");
      for (double p : power_choices)
        if (!(p > 0.0)) throw ConfigError("power_choices: entries must be positive");
      if (!(gamma >= 2.0)) throw ConfigError("gamma: must be >= 2");
      break;
    case ScenarioKind::CONSTRUCTED_4X4:
      break;
    case ScenarioKind::LINEAR:
      linear.validate();
      break;
  }
}

Scenario random_scenario(const ScenarioSpec& spec) {
  spec.validate();
  if (spec.kind != ScenarioKind::RANDOM)
    throw ConfigError("random_scenario: spec kind must be RANDOM");

  // Independent streams per draw category keep the layout stable if counts change.
  SplitMix64 bs_rng = SplitMix64::stream(spec.seed, 0);
  SplitMix64 mu_rng = SplitMix64::stream(spec.seed, 1);
  SplitMix64 pow_rng = SplitMix64::stream(spec.seed, 2);

  Scenario s;
  s.arena = {{0.0, 0.0}, spec.arena_size_m, spec.arena_size_m};
  s.gamma = spec.gamma;
  s.noise_w = dbw_to_watts(spec.noise_dbw);
  s.seed = spec.seed;

  const int n_mu = spec.n_bs * spec.mu_per_bs_ratio;
  for (int a = 0; a < spec.n_bs; ++a) {
    s.bs_positions.push_back({bs_rng.uniform(0.0, spec.arena_size_m),
                              bs_rng.uniform(0.0, spec.arena_size_m)});
    s.powers.push_back(spec.power_choices[pow_rng.next_below(static_cast<int>(spec.power_choices.size()))]);
  }
  for (int p = 0; p < n_mu; ++p) {
    s.mu_positions.push_back({mu_rng.uniform(0.0, spec.arena_size_m),
                              mu_rng.uniform(0.0, spec.arena_size_m)});
  }
  s.validate();
  return s;
}

Scenario constructed_topology() {
  // One BS with a loose MU cluster around it, the other three spread out.
  // Each clustered MU leans toward a distinct far BS: with pure
  // assignment-cost weighting everyone collapses onto BS 0, while
  // congestion-dominated weightings peel them off one per BS.
  Scenario s;
  s.arena = {{0.0, 0.0}, 100.0, 100.0};
  s.gamma = 3.0;
  s.noise_w = dbw_to_watts(-90.0);
  s.bs_positions = {{20.0, 50.0}, {55.0, 12.0}, {55.0, 88.0}, {90.0, 50.0}};
  s.powers = {1.0, 1.0, 1.0, 1.0};
  s.mu_positions = {{16.0, 50.0}, {34.0, 35.0}, {34.0, 65.0}, {53.0, 50.0}};
  s.validate();
  return s;
}

Scenario linear_scenario(const LinearNetParams& p) {
  p.validate();
  Scenario s;
  s.arena = {{-p.d - 1.0, -1.0}, 2.0 * (p.d + 1.0), 2.0};
  s.gamma = p.gamma;
  s.noise_w = dbw_to_watts(p.noise_dbw);
  s.bs_positions = {{-p.d, 0.0}, {p.d, 0.0}};
  s.powers = {1.0, 1.0};
  s.mu_positions = {{-p.delta * p.d, 0.0}, {p.delta * p.d, 0.0}};
  s.validate();
  return s;
}

// ---------------------------------------------------------------------------
// JSON interchange
// ---------------------------------------------------------------------------

namespace {

const json& require_field(const json& j, const char* field, const std::string& path) {
  if (!j.contains(field))
    throw ConfigError(path.empty() ? std::string(field) + ": missing required field"
                                   : path + "." + field + ": missing required field");
  return j.at(field);
}

double number_at(const json& j, const char* field, const std::string& path) {
  const json& v = require_field(j, field, path);
  if (!v.is_number())
    throw ConfigError((path.empty() ? std::string(field) : path + "." + field) + ": expected a number");
  return v.get<double>();
}

}  // namespace

std::string scenario_to_json(const Scenario& s) {
  json j;
  j["arena_m"] = {s.arena.width, s.arena.height};
  j["arena_origin_m"] = {s.arena.origin.x, s.arena.origin.y};
  j["gamma"] = s.gamma;
  // Zero noise has no dBW representation; store null and restore 0 W on load.
  if (s.noise_w > 0.0)
    j["noise_dbw"] = watts_to_dbw(s.noise_w);
  else
    j["noise_dbw"] = nullptr;
  j["bs"] = json::array();
  for (int a = 0; a < s.num_bs(); ++a) {
    j["bs"].push_back({{"pos_m", {s.bs_positions[a].x, s.bs_positions[a].y}},
                       {"power", s.powers[a]}});
  }
  j["mu"] = json::array();
  for (int p = 0; p < s.num_mu(); ++p)
    j["mu"].push_back({{"pos_m", {s.mu_positions[p].x, s.mu_positions[p].y}}});
  j["prng"] = s.prng;
  if (s.seed)
    j["seed"] = *s.seed;
  else
    j["seed"] = nullptr;
  return j.dump(2) + "\n";
}

Scenario scenario_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("scenario: invalid JSON: ") + e.what());
  }
  Scenario s;

  const json& arena = require_field(j, "arena_m", "");
  if (!arena.is_array() || arena.size() != 2)
    throw ConfigError("arena_m: expected [width, height]");
  s.arena.width = arena[0].get<double>();
  s.arena.height = arena[1].get<double>();
  if (j.contains("arena_origin_m")) {
    const json& origin = j.at("arena_origin_m");
    if (!origin.is_array() || origin.size() != 2)
      throw ConfigError("arena_origin_m: expected [x, y]");
    s.arena.origin = {origin[0].get<double>(), origin[1].get<double>()};
  }

  s.gamma = number_at(j, "gamma", "");

  const json& noise = require_field(j, "noise_dbw", "");
  if (noise.is_null())
    s.noise_w = 0.0;
  else if (noise.is_number())
    s.noise_w = dbw_to_watts(noise.get<double>());
  else
    throw ConfigError("noise_dbw: expected a number or null");

  const json& bs = require_field(j, "bs", "");
  if (!bs.is_array() || bs.empty()) throw ConfigError("bs: expected a non-empty array");
  for (size_t a = 0; a < bs.size(); ++a) {
    const std::string path = "bs[" + std::to_string(a) + "]";
    const json& pos = require_field(bs[a], "pos_m", path);
    if (!pos.is_array() || pos.size() != 2) throw ConfigError(path + ".pos_m: expected [x, y]");
    s.bs_positions.push_back({pos[0].get<double>(), pos[1].get<double>()});
    const double power = number_at(bs[a], "power", path);
    if (!(power > 0.0)) throw ConfigError(path + ".power: must be positive");
    s.powers.push_back(power);
  }

  const json& mu = require_field(j, "mu", "");
  if (!mu.is_array() || mu.empty()) throw ConfigError("mu: expected a non-empty array");
  for (size_t p = 0; p < mu.size(); ++p) {
    const std::string path = "mu[" + std::to_string(p) + "]";
    const json& pos = require_field(mu[p], "pos_m", path);
    if (!pos.is_array() || pos.size() != 2) throw ConfigError(path + ".pos_m: expected [x, y]");
    s.mu_positions.push_back({pos[0].get<double>(), pos[1].get<double>()});
  }

  if (j.contains("prng") && j.at("prng").is_string()) s.prng = j.at("prng").get<std::string>();
  if (j.contains("seed") && j.at("seed").is_number()) s.seed = j.at("seed").get<uint64_t>();

  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("scenario: ") + e.what());
  }
  return s;
}

void save_scenario(const Scenario& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open for writing: " + path);
  out << scenario_to_json(s);
  if (!out) throw ConfigError("write failed: " + path);
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return scenario_from_json(buffer.str());
}

}  // namespace uassoc
