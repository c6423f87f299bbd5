// Experiment harness CLI: runs sweep specs against the market solvers and
// writes CSV result tables plus optional ndjson traces.
//
// Exit codes: 0 success, 1 configuration error, 2 solver error in any cell.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "scmarket/experiment.hpp"
#include "scmarket/oracle.hpp"

namespace {

scmarket::ExperimentSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return scmarket::experiment_spec_from_json(j);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

/// Re-checks rsr cells against the exhaustive two-stage oracle where the
/// desk-scale guards allow it.
int oracle_spot_check(const scmarket::ExperimentSpec& spec) {
  using namespace scmarket;
  int failures = 0;
  for (std::size_t vi = 0; vi < spec.sweep.values.size(); ++vi) {
    const auto plan = detail::plan_cell(spec, vi, "rsr");
    if (plan.params.customer_count > 3) {
      std::cout << "oracle: skip sweep value " << plan.sweep_value << " (N > 3)\n";
      continue;
    }
    const MarketInstance inst = generate_instance(plan.params, plan.instance_seed);
    const PriceSchedule prices{plan.price_slope, plan.pricing.offset};
    RsrOptions opts = plan.pricing.follower;
    opts.grid_depth = plan.grid_depth;
    const RsrResult res = rsr(inst, prices, opts);
    oracle::OracleGrid grid;
    grid.g_points = plan.grid_depth;
    grid.h_points = plan.grid_depth;
    const auto ref = oracle::brute_force_two_stage(inst, prices, grid);
    const double rel =
        std::abs(res.objective - ref.value) / std::max(1.0, std::abs(ref.value));
    const bool ok = rel <= 1e-5;
    std::cout << "oracle: sweep value " << plan.sweep_value << "  solver "
              << res.objective << "  oracle " << ref.value << "  rel_err " << rel
              << (ok ? "  ok" : "  MISMATCH") << '\n';
    if (!ok) ++failures;
  }
  return failures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust model-rental market solvers and experiment harness"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string out_dir = ".";
  std::uint64_t seed_override = 0;
  bool has_seed_override = false;
  int parallel = 1;
  bool with_oracle = false;
  bool with_traces = false;

  CLI::App* run = app.add_subcommand("run", "Execute an experiment spec and write CSV results");
  run->add_option("--spec", spec_path, "Path to the JSON experiment spec")->required();
  run->add_option("--out", out_dir, "Output directory");
  run->add_option("--seed", seed_override, "Override the spec's root seed")
      ->each([&](const std::string&) { has_seed_override = true; });
  run->add_option("--parallel", parallel, "Worker threads for sweep cells")
      ->check(CLI::PositiveNumber);
  run->add_flag("--oracle", with_oracle, "Cross-check rsr cells against the brute-force oracle");
  run->add_flag("--traces", with_traces, "Write per-run ndjson traces next to the CSV");

  CLI::App* validate = app.add_subcommand("validate", "Parse and validate an experiment spec");
  validate->add_option("--spec", spec_path, "Path to the JSON experiment spec")->required();

  CLI::App* list = app.add_subcommand("list-experiments", "List the built-in experiment specs");
  std::string write_dir;
  list->add_option("--write", write_dir, "Also write each built-in spec as JSON into this directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      const auto spec = load_spec(spec_path);
      std::cout << "ok: " << spec.name << " (" << spec.sweep.values.size() << " sweep values, "
                << spec.algorithms.size() << " algorithms)\n";
      return 0;
    }
    if (list->parsed()) {
      for (const auto& spec : scmarket::builtin_experiments()) {
        std::cout << spec.name << "  [" << spec.sweep.axis << " x "
                  << spec.sweep.values.size() << ", algorithms:";
        for (const auto& a : spec.algorithms) std::cout << ' ' << a;
        std::cout << "]\n";
        if (!write_dir.empty()) {
          std::filesystem::create_directories(write_dir);
          write_file(std::filesystem::path(write_dir) / (spec.name + ".json"),
                     scmarket::to_json(spec).dump(2) + "\n");
        }
      }
      return 0;
    }

    // run
    scmarket::ExperimentSpec spec = load_spec(spec_path);
    if (has_seed_override) spec.seed = seed_override;
    const auto rows = scmarket::run_experiment(spec, parallel);

    std::filesystem::create_directories(out_dir);
    const std::string csv_name =
        spec.output_path.empty() ? spec.name + ".csv" : spec.output_path;
    const auto csv_path = std::filesystem::path(out_dir) / csv_name;
    write_file(csv_path, scmarket::to_csv(rows));
    std::cout << "wrote " << csv_path.string() << " (" << rows.size() << " rows)\n";
    if (with_traces) {
      const auto trace_path = std::filesystem::path(out_dir) / (spec.name + "_trace.ndjson");
      write_file(trace_path, scmarket::to_trace_ndjson(rows));
      std::cout << "wrote " << trace_path.string() << '\n';
    }

    int failures = 0;
    for (const auto& row : rows) {
      if (row.status != "ok") {
        std::cerr << "cell failed: " << row.algorithm << " @ " << row.sweep_value << ": "
                  << row.status << '\n';
        ++failures;
      }
    }
    if (with_oracle) failures += oracle_spot_check(spec);
    return failures == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
