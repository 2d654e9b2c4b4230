#include "uassoc/harness.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace uassoc {

using nlohmann::json;

namespace {

std::string fmt(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string csv_quote(const std::string& s) {
  if (s.empty()) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

const char* winner_name(LinearWinner w) { return w == LinearWinner::F1 ? "f1" : "f2"; }

json winner_json(LinearWinner w) { return winner_name(w); }

json optional_double(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

}  // namespace

void SweepConfig::validate(bool scaling) const {
  if (scenario_file.has_value() == generator.has_value())
    throw ConfigError("scenario: provide exactly one of \"file\" or \"generator\"");
  if (generator) generator->validate();
  if (beta_grid.empty()) throw ConfigError("beta_grid: must be non-empty");
  for (size_t i = 0; i < beta_grid.size(); ++i) {
    if (!(beta_grid[i] >= 0.0 && beta_grid[i] <= 1.0))
      throw ConfigError("beta_grid[" + std::to_string(i) + "]: must lie in [0,1]");
    if (i > 0 && !(beta_grid[i] > beta_grid[i - 1]))
      throw ConfigError("beta_grid: must be sorted ascending with unique entries");
  }
  if (hst_seeds.empty()) throw ConfigError("hst_seeds: must be non-empty");
  if (replications < 1) throw ConfigError("replications: must be >= 1");
  if (solver.starts < 1) throw ConfigError("solver.starts: must be >= 1");
  if (solver.max_iter < 1) throw ConfigError("solver.max_iter: must be >= 1");
  if (!(solver.tol > 0.0)) throw ConfigError("solver.tol: must be positive");
  if (scaling) {
    if (!generator || generator->kind != ScenarioKind::RANDOM)
      throw ConfigError("scaling: requires a generator of kind \"random\"");
    if (sizes.empty()) throw ConfigError("sizes: must be non-empty");
    for (int n : sizes)
      if (n < 1) throw ConfigError("sizes: entries must be >= 1");
  }
}

namespace {

struct ScenarioWithSeed {
  Scenario scenario;
  std::optional<uint64_t> seed;
};

ScenarioWithSeed scenario_for(const SweepConfig& cfg, int replication) {
  if (cfg.scenario_file) return {load_scenario(*cfg.scenario_file), std::nullopt};
  ScenarioSpec spec = *cfg.generator;
  switch (spec.kind) {
    case ScenarioKind::RANDOM:
      spec.seed = spec.seed + static_cast<uint64_t>(replication);
      return {random_scenario(spec), spec.seed};
    case ScenarioKind::CONSTRUCTED_4X4:
      return {constructed_topology(), std::nullopt};
    case ScenarioKind::LINEAR:
      return {linear_scenario(spec.linear), std::nullopt};
  }
  throw ConfigError("generator.kind: unknown kind");
}

bool needs_enumeration(Formulation f) {
  return f == Formulation::C1R || f == Formulation::C1D || f == Formulation::C1R_DEACT ||
         f == Formulation::C1D_DEACT;
}

SolveReport dispatch(Formulation f, const Scenario& s, const RateTable& rt, double beta,
                     uint64_t hst_seed, const SolverOpts& opts) {
  switch (f) {
    case Formulation::C1R: return solve_c1r(s, rt);
    case Formulation::C1D: return solve_c1d(s, rt);
    case Formulation::Q1D: return solve_q1d(s, rt, opts);
    case Formulation::Q2D: return solve_q2d(s, rt, beta, opts);
    case Formulation::L2D: {
      const HSTree tree = build_hst(LabelMetric::unit(s.num_bs()), hst_seed);
      return solve_l2d(s, rt, beta, tree);
    }
    case Formulation::MINDIST: return heuristic(s, rt, HeuristicKind::MINDIST);
    case Formulation::MAXSINR: return heuristic(s, rt, HeuristicKind::MAXSINR);
    case Formulation::C1R_DEACT: return brute_force_deactivated(s, DeactObjective::RATE);
    case Formulation::C1D_DEACT: return brute_force_deactivated(s, DeactObjective::DELAY);
  }
  throw ConfigError("formulation: unknown");
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

CompareRow run_one(Formulation f, double beta, std::optional<uint64_t> hst_seed,
                   const ScenarioWithSeed& sw, const RateTable& rt, const SweepConfig& cfg,
                   int replication) {
  CompareRow row;
  row.formulation = f;
  row.beta = beta;
  row.replication = replication;
  row.scenario_seed = sw.seed;
  row.solver_seed = cfg.solver.seed;
  row.hst_seed = hst_seed;
  try {
    const SolveReport report =
        dispatch(f, sw.scenario, rt, beta, hst_seed.value_or(cfg.hst_seeds.front()), cfg.solver);
    row.objective = report.objective_value;
    row.sum_rate = report.eval.sum_rate;
    row.sum_delay = report.eval.sum_delay;
    row.occupancy = report.eval.occupancy;
    row.assignment = report.rounded.bs_of_mu;
    row.iterations = report.iterations;
    row.wall_time_s = report.wall_time_s;
  } catch (const std::exception& e) {
    row.error = e.what();
    row.objective = row.sum_rate = row.sum_delay = kNaN;
    row.wall_time_s = kNaN;
  }
  return row;
}

}  // namespace

std::vector<CompareRow> run_compare(const SweepConfig& cfg) {
  cfg.validate(false);
  std::vector<CompareRow> rows;
  for (int rep = 0; rep < cfg.replications; ++rep) {
    const ScenarioWithSeed sw = scenario_for(cfg, rep);
    const RateTable rt = rate_table(sw.scenario);

    // Refuse oversized enumeration upfront rather than emitting error rows:
    // silently skipping a requested exact solve would be worse than stopping.
    const double n_assignments = std::pow(static_cast<double>(sw.scenario.num_bs()),
                                          static_cast<double>(sw.scenario.num_mu()));
    for (Formulation f : cfg.formulations) {
      if (needs_enumeration(f) && n_assignments > kEnumerationCap)
        throw ConfigError("formulations: " + formulation_name(f) +
                          " requested but the instance exceeds the enumeration cap");
    }

    for (Formulation f : cfg.formulations) {
      for (double beta : cfg.beta_grid) {
        if (f == Formulation::L2D) {
          for (uint64_t hst_seed : cfg.hst_seeds)
            rows.push_back(run_one(f, beta, hst_seed, sw, rt, cfg, rep));
        } else {
          rows.push_back(run_one(f, beta, std::nullopt, sw, rt, cfg, rep));
        }
      }
    }
  }
  return rows;
}

std::vector<ScalingRow> run_scaling(const SweepConfig& cfg) {
  cfg.validate(true);
  std::vector<ScalingRow> rows;
  for (int n_bs : cfg.sizes) {
    for (int rep = 0; rep < cfg.replications; ++rep) {
      ScenarioSpec spec = *cfg.generator;
      spec.n_bs = n_bs;
      spec.seed = spec.seed + static_cast<uint64_t>(n_bs) * 1000003ULL + static_cast<uint64_t>(rep);
      const Scenario s = random_scenario(spec);
      const RateTable rt = rate_table(s);
      const double n_mu = s.num_mu();

      ScalingRow row;
      row.n_bs = n_bs;
      row.n_mu = s.num_mu();
      row.replication = rep;
      row.scenario_seed = spec.seed;

      row.q1d_delay_per_mu = solve_q1d(s, rt, cfg.solver).eval.sum_delay / n_mu;

      double best_delay = std::numeric_limits<double>::infinity();
      double best_beta = cfg.beta_grid.front();
      for (double beta : cfg.beta_grid) {  // ascending: ties keep the smaller beta
        const double delay = solve_q2d(s, rt, beta, cfg.solver).eval.sum_delay;
        if (delay < best_delay) {
          best_delay = delay;
          best_beta = beta;
        }
      }
      row.q2d_delay_per_mu = best_delay / n_mu;
      row.q2d_best_beta = best_beta;

      row.mindist_delay_per_mu = heuristic(s, rt, HeuristicKind::MINDIST).eval.sum_delay / n_mu;
      row.maxsinr_delay_per_mu = heuristic(s, rt, HeuristicKind::MAXSINR).eval.sum_delay / n_mu;
      rows.push_back(row);
    }
  }
  return rows;
}

LinearGrids default_linear_grids() {
  LinearGrids grids;
  for (int i = 1; i <= 19; ++i) grids.delta_grid.push_back(i * 0.05);
  for (int n = -120; n <= -60; n += 5) grids.noise_grid_dbw.push_back(n);
  return grids;
}

namespace {

LinearSweepRow linear_sweep_row(const LinearNetParams& p, double param) {
  LinearSweepRow row;
  row.param = param;
  const ThresholdReport rate = rate_threshold(p);
  const ThresholdReport delay = delay_threshold(p);
  row.lhs_rate = rate.lhs;
  row.winner_rate = rate.winner;
  row.lhs_delay = delay.lhs;
  row.winner_delay = delay.winner;

  const Scenario s = linear_scenario(p);
  const Assignment f1{{0, 0}};
  const Assignment f2{{0, 1}};
  const EvalResult e1 = evaluate_deactivated(s, f1);
  const EvalResult e2 = evaluate_deactivated(s, f2);
  row.brute_rate = e1.sum_rate > e2.sum_rate ? LinearWinner::F1 : LinearWinner::F2;
  row.brute_delay = e1.sum_delay < e2.sum_delay ? LinearWinner::F1 : LinearWinner::F2;
  return row;
}

}  // namespace

LinearExampleResult run_linear_example(const LinearNetParams& params, const LinearGrids& grids) {
  params.validate();
  if (grids.delta_grid.empty() || grids.noise_grid_dbw.empty())
    throw ConfigError("linear-example: grids must be non-empty");

  LinearExampleResult result;
  result.params = params;
  for (double delta : grids.delta_grid) {
    LinearNetParams p = params;
    p.delta = delta;
    result.delta_sweep.push_back(linear_sweep_row(p, delta));
  }
  for (double noise : grids.noise_grid_dbw) {
    LinearNetParams p = params;
    p.noise_dbw = noise;
    result.noise_sweep.push_back(linear_sweep_row(p, noise));
  }
  result.boundary = decision_boundary(params.gamma, params.d, grids.delta_grid, grids.noise_grid_dbw);
  return result;
}

// ---------------------------------------------------------------------------
// Writers
// ---------------------------------------------------------------------------

std::string compare_to_csv(const std::vector<CompareRow>& rows, bool include_timing) {
  std::ostringstream out;
  out << "formulation,beta,replication,scenario_seed,solver_seed,hst_seed,objective,sum_rate,"
         "sum_delay,occupancy,assignment,iterations";
  if (include_timing) out << ",wall_time_s";
  out << ",error\n";
  for (const CompareRow& r : rows) {
    out << formulation_name(r.formulation) << ',' << fmt(r.beta) << ',' << r.replication << ','
        << (r.scenario_seed ? std::to_string(*r.scenario_seed) : "") << ',' << r.solver_seed << ','
        << (r.hst_seed ? std::to_string(*r.hst_seed) : "") << ',' << fmt(r.objective) << ','
        << fmt(r.sum_rate) << ',' << fmt(r.sum_delay) << ',' << join_ints(r.occupancy) << ','
        << join_ints(r.assignment) << ',' << r.iterations;
    if (include_timing) out << ',' << fmt(r.wall_time_s);
    out << ',' << csv_quote(r.error) << '\n';
  }
  return out.str();
}

std::string compare_to_json(const std::vector<CompareRow>& rows, bool include_timing) {
  json arr = json::array();
  for (const CompareRow& r : rows) {
    json j;
    j["formulation"] = formulation_name(r.formulation);
    j["beta"] = optional_double(r.beta);
    j["replication"] = r.replication;
    j["scenario_seed"] = r.scenario_seed ? json(*r.scenario_seed) : json(nullptr);
    j["solver_seed"] = r.solver_seed;
    j["hst_seed"] = r.hst_seed ? json(*r.hst_seed) : json(nullptr);
    j["objective"] = optional_double(r.objective);
    j["sum_rate"] = optional_double(r.sum_rate);
    j["sum_delay"] = optional_double(r.sum_delay);
    j["occupancy"] = r.occupancy;
    j["assignment"] = r.assignment;
    j["iterations"] = r.iterations;
    if (include_timing) j["wall_time_s"] = optional_double(r.wall_time_s);
    j["error"] = r.error;
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

std::string scaling_to_csv(const std::vector<ScalingRow>& rows) {
  std::ostringstream out;
  out << "n_bs,n_mu,replication,scenario_seed,q1d_delay_per_mu,q2d_delay_per_mu,q2d_best_beta,"
         "mindist_delay_per_mu,maxsinr_delay_per_mu\n";
  for (const ScalingRow& r : rows) {
    out << r.n_bs << ',' << r.n_mu << ',' << r.replication << ',' << r.scenario_seed << ','
        << fmt(r.q1d_delay_per_mu) << ',' << fmt(r.q2d_delay_per_mu) << ',' << fmt(r.q2d_best_beta)
        << ',' << fmt(r.mindist_delay_per_mu) << ',' << fmt(r.maxsinr_delay_per_mu) << '\n';
  }
  return out.str();
}

std::string scaling_to_json(const std::vector<ScalingRow>& rows) {
  json arr = json::array();
  for (const ScalingRow& r : rows) {
    json j;
    j["n_bs"] = r.n_bs;
    j["n_mu"] = r.n_mu;
    j["replication"] = r.replication;
    j["scenario_seed"] = r.scenario_seed;
    j["q1d_delay_per_mu"] = r.q1d_delay_per_mu;
    j["q2d_delay_per_mu"] = r.q2d_delay_per_mu;
    j["q2d_best_beta"] = r.q2d_best_beta;
    j["mindist_delay_per_mu"] = r.mindist_delay_per_mu;
    j["maxsinr_delay_per_mu"] = r.maxsinr_delay_per_mu;
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

std::string linear_example_to_csv(const LinearExampleResult& r) {
  std::ostringstream out;
  out << "# linear-example gamma=" << fmt(r.params.gamma) << " d=" << fmt(r.params.d)
      << " noise_dbw=" << fmt(r.params.noise_dbw) << " delta=" << fmt(r.params.delta) << "\n";
  out << "# delta_sweep (noise_dbw fixed)\n";
  out << "delta,lhs_rate,winner_rate,lhs_delay,winner_delay,brute_rate_winner,brute_delay_winner\n";
  for (const LinearSweepRow& row : r.delta_sweep) {
    out << fmt(row.param) << ',' << fmt(row.lhs_rate) << ',' << winner_name(row.winner_rate) << ','
        << fmt(row.lhs_delay) << ',' << winner_name(row.winner_delay) << ','
        << winner_name(row.brute_rate) << ',' << winner_name(row.brute_delay) << '\n';
  }
  out << "# noise_sweep (delta fixed)\n";
  out << "noise_dbw,lhs_rate,winner_rate,lhs_delay,winner_delay,brute_rate_winner,brute_delay_winner\n";
  for (const LinearSweepRow& row : r.noise_sweep) {
    out << fmt(row.param) << ',' << fmt(row.lhs_rate) << ',' << winner_name(row.winner_rate) << ','
        << fmt(row.lhs_delay) << ',' << winner_name(row.winner_delay) << ','
        << winner_name(row.brute_rate) << ',' << winner_name(row.brute_delay) << '\n';
  }
  out << "# boundary\n";
  out << "criterion,noise_dbw,delta_star\n";
  for (const BoundaryPoint& p : r.boundary.rate)
    out << "rate," << fmt(p.noise_dbw) << ',' << fmt(p.delta_star) << '\n';
  for (const BoundaryPoint& p : r.boundary.delay)
    out << "delay," << fmt(p.noise_dbw) << ',' << fmt(p.delta_star) << '\n';
  return out.str();
}

std::string linear_example_to_json(const LinearExampleResult& r) {
  json j;
  j["params"] = {{"gamma", r.params.gamma},
                 {"d", r.params.d},
                 {"noise_dbw", r.params.noise_dbw},
                 {"delta", r.params.delta}};
  auto sweep = [](const std::vector<LinearSweepRow>& rows, const char* key) {
    json arr = json::array();
    for (const LinearSweepRow& row : rows) {
      arr.push_back({{key, row.param},
                     {"lhs_rate", row.lhs_rate},
                     {"winner_rate", winner_json(row.winner_rate)},
                     {"lhs_delay", row.lhs_delay},
                     {"winner_delay", winner_json(row.winner_delay)},
                     {"brute_rate_winner", winner_json(row.brute_rate)},
                     {"brute_delay_winner", winner_json(row.brute_delay)}});
    }
    return arr;
  };
  j["delta_sweep"] = sweep(r.delta_sweep, "delta");
  j["noise_sweep"] = sweep(r.noise_sweep, "noise_dbw");
  json boundary = json::array();
  for (const BoundaryPoint& p : r.boundary.rate)
    boundary.push_back({{"criterion", "rate"}, {"noise_dbw", p.noise_dbw}, {"delta_star", p.delta_star}});
  for (const BoundaryPoint& p : r.boundary.delay)
    boundary.push_back({{"criterion", "delay"}, {"noise_dbw", p.noise_dbw}, {"delta_star", p.delta_star}});
  j["boundary"] = boundary;
  return j.dump(2) + "\n";
}

std::string report_to_csv(const SolveReport& report, bool include_timing) {
  std::ostringstream out;
  out << "formulation,beta,objective,sum_rate,sum_delay,occupancy,assignment,iterations";
  if (include_timing) out << ",wall_time_s";
  out << '\n';
  out << formulation_name(report.formulation) << ',' << fmt(report.beta) << ','
      << fmt(report.objective_value) << ',' << fmt(report.eval.sum_rate) << ','
      << fmt(report.eval.sum_delay) << ',' << join_ints(report.eval.occupancy) << ','
      << join_ints(report.rounded.bs_of_mu) << ',' << report.iterations;
  if (include_timing) out << ',' << fmt(report.wall_time_s);
  out << '\n';
  return out.str();
}

std::string report_to_json(const SolveReport& report, bool include_timing) {
  json j;
  j["formulation"] = formulation_name(report.formulation);
  j["beta"] = optional_double(report.beta);
  j["objective"] = optional_double(report.objective_value);
  j["sum_rate"] = report.eval.sum_rate;
  j["sum_delay"] = report.eval.sum_delay;
  j["per_mu_rate"] = report.eval.per_mu_rate;
  j["occupancy"] = report.eval.occupancy;
  j["assignment"] = report.rounded.bs_of_mu;
  j["iterations"] = report.iterations;
  if (include_timing) j["wall_time_s"] = report.wall_time_s;
  if (report.fractional) {
    json rows_json = json::array();
    for (int p = 0; p < report.fractional->num_mu(); ++p) {
      json row = json::array();
      for (int a = 0; a < report.fractional->num_bs(); ++a) row.push_back(report.fractional->x(p, a));
      rows_json.push_back(row);
    }
    j["fractional"] = rows_json;
  }
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Config (de)serialization
// ---------------------------------------------------------------------------

namespace {

ScenarioKind kind_from_name(const std::string& name) {
  if (name == "random") return ScenarioKind::RANDOM;
  if (name == "constructed_4x4") return ScenarioKind::CONSTRUCTED_4X4;
  if (name == "linear") return ScenarioKind::LINEAR;
  throw ConfigError("generator.kind: unknown kind \"" + name + "\"");
}

std::string kind_name(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::RANDOM: return "random";
    case ScenarioKind::CONSTRUCTED_4X4: return "constructed_4x4";
    case ScenarioKind::LINEAR: return "linear";
  }
  return "?";
}

ScenarioSpec generator_from_json(const json& g) {
  ScenarioSpec spec;
  if (!g.contains("kind")) throw ConfigError("generator.kind: missing required field");
  spec.kind = kind_from_name(g.at("kind").get<std::string>());
  if (g.contains("n_bs")) spec.n_bs = g.at("n_bs").get<int>();
  if (g.contains("mu_per_bs_ratio")) spec.mu_per_bs_ratio = g.at("mu_per_bs_ratio").get<int>();
  if (g.contains("arena_size_m")) spec.arena_size_m = g.at("arena_size_m").get<double>();
  if (g.contains("power_choices"))
    spec.power_choices = g.at("power_choices").get<std::vector<double>>();
  if (g.contains("noise_dbw")) spec.noise_dbw = g.at("noise_dbw").get<double>();
  if (g.contains("gamma")) spec.gamma = g.at("gamma").get<double>();
  if (g.contains("seed")) spec.seed = g.at("seed").get<uint64_t>();
  if (g.contains("d")) spec.linear.d = g.at("d").get<double>();
  if (g.contains("delta")) spec.linear.delta = g.at("delta").get<double>();
  spec.linear.gamma = spec.gamma;
  spec.linear.noise_dbw = spec.noise_dbw;
  return spec;
}

json generator_to_json(const ScenarioSpec& spec) {
  json g;
  g["kind"] = kind_name(spec.kind);
  g["n_bs"] = spec.n_bs;
  g["mu_per_bs_ratio"] = spec.mu_per_bs_ratio;
  g["arena_size_m"] = spec.arena_size_m;
  g["power_choices"] = spec.power_choices;
  g["noise_dbw"] = spec.noise_dbw;
  g["gamma"] = spec.gamma;
  g["seed"] = spec.seed;
  if (spec.kind == ScenarioKind::LINEAR) {
    g["d"] = spec.linear.d;
    g["delta"] = spec.linear.delta;
  }
  return g;
}

}  // namespace

SweepConfig sweep_config_from_json(const std::string& text, bool scaling) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  SweepConfig cfg;
  try {
    if (!j.contains("scenario")) throw ConfigError("scenario: missing required field");
    const json& sc = j.at("scenario");
    if (sc.contains("file")) cfg.scenario_file = sc.at("file").get<std::string>();
    if (sc.contains("generator")) cfg.generator = generator_from_json(sc.at("generator"));

    if (j.contains("formulations"))
      for (const auto& name : j.at("formulations"))
        cfg.formulations.push_back(formulation_from_name(name.get<std::string>()));

    if (j.contains("beta_grid")) {
      cfg.beta_grid = j.at("beta_grid").get<std::vector<double>>();
    } else if (scaling) {
      cfg.beta_grid.clear();
      for (int i = 0; i <= 20; ++i) cfg.beta_grid.push_back(i / 20.0);
    }

    if (j.contains("hst_seeds")) cfg.hst_seeds = j.at("hst_seeds").get<std::vector<uint64_t>>();
    if (j.contains("replications")) cfg.replications = j.at("replications").get<int>();
    if (j.contains("sizes")) {
      cfg.sizes = j.at("sizes").get<std::vector<int>>();
    } else if (scaling) {
      for (int n = 1; n <= 20; ++n) cfg.sizes.push_back(n);
    }
    if (j.contains("include_timing")) cfg.include_timing = j.at("include_timing").get<bool>();

    if (j.contains("solver")) {
      const json& s = j.at("solver");
      if (s.contains("starts")) cfg.solver.starts = s.at("starts").get<int>();
      if (s.contains("max_iter")) cfg.solver.max_iter = s.at("max_iter").get<int>();
      if (s.contains("tol")) cfg.solver.tol = s.at("tol").get<double>();
      if (s.contains("seed")) cfg.solver.seed = s.at("seed").get<uint64_t>();
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  cfg.validate(scaling);
  return cfg;
}

std::string sweep_config_to_json(const SweepConfig& cfg) {
  json j;
  json sc;
  if (cfg.scenario_file) sc["file"] = *cfg.scenario_file;
  if (cfg.generator) sc["generator"] = generator_to_json(*cfg.generator);
  j["scenario"] = sc;
  json names = json::array();
  for (Formulation f : cfg.formulations) names.push_back(formulation_name(f));
  j["formulations"] = names;
  j["beta_grid"] = cfg.beta_grid;
  j["hst_seeds"] = cfg.hst_seeds;
  j["replications"] = cfg.replications;
  if (!cfg.sizes.empty()) j["sizes"] = cfg.sizes;
  j["include_timing"] = cfg.include_timing;
  j["solver"] = {{"starts", cfg.solver.starts},
                 {"max_iter", cfg.solver.max_iter},
                 {"tol", cfg.solver.tol},
                 {"seed", cfg.solver.seed}};
  return j.dump(2) + "\n";
}

}  // namespace uassoc
