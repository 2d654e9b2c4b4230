// Command-line front end: scenario generation, single solves, formulation
// comparisons, scaling studies and the linear-network deactivation example.
//
// Exit codes: 0 success, 2 configuration error, 3 solver error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "uassoc/harness.hpp"

using namespace uassoc;

namespace {

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ConfigError("cannot open for writing: " + out_path);
  out << text;
  if (!out) throw ConfigError("write failed: " + out_path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::CSV;
  if (name == "json") return OutputFormat::JSON;
  throw ConfigError("format: expected csv or json");
}

// The sidecar records the fully resolved configuration next to the table.
void write_sidecar(const SweepConfig& cfg, const std::string& out_path) {
  if (out_path.empty()) return;
  std::ofstream out(out_path + ".config.json");
  if (out) out << sweep_config_to_json(cfg);
}

struct CommonArgs {
  std::string out;
  std::string format = "csv";
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Downlink user-association solvers and experiment harness"};
  app.require_subcommand(1);

  // --- generate ---
  auto* generate = app.add_subcommand("generate", "Generate a scenario JSON file");
  std::string gen_kind = "random";
  ScenarioSpec gen_spec;
  std::string gen_out;
  generate->add_option("--kind", gen_kind, "random, constructed_4x4, or linear")
      ->check(CLI::IsMember({"random", "constructed_4x4", "linear"}));
  generate->add_option("--n-bs", gen_spec.n_bs, "number of BSs (random)");
  generate->add_option("--ratio", gen_spec.mu_per_bs_ratio, "MUs per BS (random)");
  generate->add_option("--arena-size", gen_spec.arena_size_m, "square arena side, meters (random)");
  generate->add_option("--powers", gen_spec.power_choices, "discrete power choices (random)");
  generate->add_option("--noise-dbw", gen_spec.noise_dbw, "noise power, dBW");
  generate->add_option("--gamma", gen_spec.gamma, "pathloss exponent");
  generate->add_option("--seed", gen_spec.seed, "generator seed (random)");
  generate->add_option("--d", gen_spec.linear.d, "BS half-separation, meters (linear)");
  generate->add_option("--delta", gen_spec.linear.delta, "MU offset fraction (linear)");
  generate->add_option("--out", gen_out, "output path")->required();

  // --- solve ---
  auto* solve = app.add_subcommand("solve", "Solve one formulation on a scenario file");
  std::string solve_scenario, solve_formulation;
  double solve_beta = 0.0;
  uint64_t solve_hst_seed = 1;
  SolverOpts solve_opts;
  bool solve_timing = false;
  CommonArgs solve_common;
  solve->add_option("--scenario", solve_scenario, "scenario JSON file")->required();
  solve->add_option("--formulation", solve_formulation, "c1r,c1d,q1d,q2d,l2d,mindist,maxsinr")
      ->required();
  solve->add_option("--beta", solve_beta, "split-term weight (q2d, l2d)");
  solve->add_option("--hst-seed", solve_hst_seed, "HST construction seed (l2d)");
  solve->add_option("--seed", solve_opts.seed, "solver seed");
  solve->add_option("--starts", solve_opts.starts, "multi-start count (q1d)");
  solve->add_option("--max-iter", solve_opts.max_iter, "iteration cap");
  solve->add_option("--tol", solve_opts.tol, "objective decrease tolerance");
  solve->add_flag("--timing", solve_timing, "include wall time in the output");
  solve->add_option("--out", solve_common.out, "output path (default stdout)");
  solve->add_option("--format", solve_common.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // --- compare ---
  auto* compare = app.add_subcommand("compare", "Run a formulation comparison from a config file");
  std::string compare_config;
  CommonArgs compare_common;
  compare->add_option("--config", compare_config, "JSON config file")->required();
  compare->add_option("--out", compare_common.out, "output path (default stdout)");
  compare->add_option("--format", compare_common.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // --- scaling ---
  auto* scaling = app.add_subcommand("scaling", "Run a random-network scaling study");
  std::string scaling_config;
  CommonArgs scaling_common;
  scaling->add_option("--config", scaling_config, "JSON config file")->required();
  scaling->add_option("--out", scaling_common.out, "output path (default stdout)");
  scaling->add_option("--format", scaling_common.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // --- linear-example ---
  auto* linear = app.add_subcommand("linear-example", "Two-BS linear network deactivation sweeps");
  LinearNetParams linear_params;
  CommonArgs linear_common;
  linear->add_option("--gamma", linear_params.gamma, "pathloss exponent");
  linear->add_option("--d", linear_params.d, "BS half-separation, meters");
  linear->add_option("--noise-dbw", linear_params.noise_dbw, "noise power, dBW");
  linear->add_option("--delta", linear_params.delta, "MU offset fraction");
  linear->add_option("--out", linear_common.out, "output path (default stdout)");
  linear->add_option("--format", linear_common.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*generate) {
      gen_spec.kind = gen_kind == "random"            ? ScenarioKind::RANDOM
                      : gen_kind == "constructed_4x4" ? ScenarioKind::CONSTRUCTED_4X4
                                                      : ScenarioKind::LINEAR;
      gen_spec.linear.gamma = gen_spec.gamma;
      gen_spec.linear.noise_dbw = gen_spec.noise_dbw;
      Scenario s;
      switch (gen_spec.kind) {
        case ScenarioKind::RANDOM: s = random_scenario(gen_spec); break;
        case ScenarioKind::CONSTRUCTED_4X4: s = constructed_topology(); break;
        case ScenarioKind::LINEAR: s = linear_scenario(gen_spec.linear); break;
      }
      save_scenario(s, gen_out);
      std::cerr << "wrote " << gen_out << " (" << s.num_bs() << " BS, " << s.num_mu() << " MU)\n";
    } else if (*solve) {
      const Scenario s = load_scenario(solve_scenario);
      const RateTable rt = rate_table(s);
      const Formulation f = formulation_from_name(solve_formulation);
      SolveReport report;
      switch (f) {
        case Formulation::C1R: report = solve_c1r(s, rt); break;
        case Formulation::C1D: report = solve_c1d(s, rt); break;
        case Formulation::Q1D: report = solve_q1d(s, rt, solve_opts); break;
        case Formulation::Q2D: report = solve_q2d(s, rt, solve_beta, solve_opts); break;
        case Formulation::L2D: {
          const HSTree tree = build_hst(LabelMetric::unit(s.num_bs()), solve_hst_seed);
          report = solve_l2d(s, rt, solve_beta, tree);
          break;
        }
        case Formulation::MINDIST: report = heuristic(s, rt, HeuristicKind::MINDIST); break;
        case Formulation::MAXSINR: report = heuristic(s, rt, HeuristicKind::MAXSINR); break;
        case Formulation::C1R_DEACT: report = brute_force_deactivated(s, DeactObjective::RATE); break;
        case Formulation::C1D_DEACT: report = brute_force_deactivated(s, DeactObjective::DELAY); break;
      }
      const std::string text = parse_format(solve_common.format) == OutputFormat::CSV
                                   ? report_to_csv(report, solve_timing)
                                   : report_to_json(report, solve_timing);
      write_output(text, solve_common.out);
    } else if (*compare) {
      const SweepConfig cfg = sweep_config_from_json(read_file(compare_config), false);
      const auto rows = run_compare(cfg);
      const std::string text = parse_format(compare_common.format) == OutputFormat::CSV
                                   ? compare_to_csv(rows, cfg.include_timing)
                                   : compare_to_json(rows, cfg.include_timing);
      write_output(text, compare_common.out);
      write_sidecar(cfg, compare_common.out);
    } else if (*scaling) {
      const SweepConfig cfg = sweep_config_from_json(read_file(scaling_config), true);
      const auto rows = run_scaling(cfg);
      const std::string text = parse_format(scaling_common.format) == OutputFormat::CSV
                                   ? scaling_to_csv(rows)
                                   : scaling_to_json(rows);
      write_output(text, scaling_common.out);
      write_sidecar(cfg, scaling_common.out);
    } else if (*linear) {
      const LinearExampleResult result = run_linear_example(linear_params, default_linear_grids());
      const std::string text = parse_format(linear_common.format) == OutputFormat::CSV
                                   ? linear_example_to_csv(result)
                                   : linear_example_to_json(result);
      write_output(text, linear_common.out);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const EnumerationCapError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
