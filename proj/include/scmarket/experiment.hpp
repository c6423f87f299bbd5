#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "scmarket/baselines.hpp"
#include "scmarket/io.hpp"
#include "scmarket/market.hpp"
#include "scmarket/pricing.hpp"
#include "scmarket/rng.hpp"
#include "scmarket/rsr.hpp"

namespace scmarket {

/// Instance-generator knobs. Defaults are the benchmark setup: -77 dBm
/// noise, path-loss exponent 3, A = 100, b1 = 100, energy budget 5 with
/// deviation 2, distance deviation 500 around an average of 750, durations
/// in [0, 100]. Model laws: speed 10 - 2(u-1), compressibility 1/u, base
/// charge 5u, fine-tuning cost 2u, pretraining cost 10.
struct GeneratorParams {
  int customer_count = 5;
  int model_count = 2;
  double avg_distance = 750;
  bool homogeneous = false;  ///< fix every distance to avg_distance
  double nominal_energy = 5;
  double energy_deviation = 2;
  double distance_deviation = 500;
  double noise_dbm = -77;
  double path_loss_exp = 3;
  double utility_coeff = 100;
  double energy_price = 100;
  double t_min = 0;
  double t_max = 100;
  double gamma = 1;
  double eta_budget = 1;
  EnergyMode energy_mode = EnergyMode::AdversarialReduction;
  double ssl_cost = 10;
  double speed_base = 10;
  double speed_step = 2;
  double compressibility_scale = 1;  ///< a_u = scale / u
  double base_charge_unit = 5;       ///< H_u = unit * u
  double finetune_unit = 2;          ///< b2_u = unit * u
};

/// Deterministic instance from (params, seed). Distances draw uniformly in
/// [0.5, 1.5] * avg_distance unless homogeneous.
inline MarketInstance generate_instance(const GeneratorParams& p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  MarketInstance inst;
  const double noise = dbm_to_watts(p.noise_dbm);
  for (int n = 1; n <= p.customer_count; ++n) {
    Customer c;
    c.index = n;
    c.nominal_distance =
        p.homogeneous ? p.avg_distance : rng.uniform(0.5 * p.avg_distance, 1.5 * p.avg_distance);
    c.nominal_energy = p.nominal_energy;
    c.distance_deviation = p.distance_deviation;
    c.energy_deviation = p.energy_deviation;
    c.noise_power = noise;
    inst.customers.push_back(c);
  }
  for (int u = 1; u <= p.model_count; ++u) {
    ScModel m;
    m.index = u;
    m.encoding_speed = p.speed_base - p.speed_step * (u - 1);
    m.compressibility = p.compressibility_scale / u;
    m.base_charge = p.base_charge_unit * u;
    m.finetune_unit_cost = p.finetune_unit * u;
    inst.models.push_back(m);
  }
  inst.utility_coeff = p.utility_coeff;
  inst.energy_price = p.energy_price;
  inst.ssl_cost = p.ssl_cost;
  inst.path_loss_exp = p.path_loss_exp;
  inst.t_min = p.t_min;
  inst.t_max = p.t_max;
  inst.gamma = std::min<double>(p.gamma, p.customer_count);
  inst.eta_budget = std::min<double>(p.eta_budget, p.customer_count);
  inst.energy_mode = p.energy_mode;
  inst.validate();
  return inst;
}

struct SweepSpec {
  std::string axis;
  std::vector<double> values;
};

struct ExperimentSpec {
  std::string name;
  GeneratorParams instance;
  /// When set, every cell runs against this exact instance instead of the
  /// generator; only non-instance sweep axes are allowed then.
  std::optional<MarketInstance> fixed_instance;
  SweepSpec sweep;
  std::vector<std::string> algorithms;
  std::uint64_t seed = 0;
  std::string output_path;     ///< optional; defaults to "<name>.csv"
  double price_slope = 20;     ///< fixed customer-side zeta
  PricingConfig pricing;
  int near_opt_intervals = 1000;
  int grid_depth = 11;

  void validate() const;
};

inline const std::vector<std::string>& known_sweep_axes() {
  static const std::vector<std::string> axes = {
      "customer_count", "model_count",  "avg_distance",      "distance_deviation",
      "energy_budget",  "price_slope",  "num_starts",        "seed",
      "near_opt_intervals"};
  return axes;
}

inline const std::vector<std::string>& known_algorithms() {
  static const std::vector<std::string> algos = {"rsr", "greedy", "static_env_opt", "imp",
                                                 "near_opt"};
  return algos;
}

inline void ExperimentSpec::validate() const {
  if (name.empty()) throw std::invalid_argument("spec.name: must be non-empty");
  if (sweep.values.empty()) throw std::invalid_argument("spec.sweep.values: must be non-empty");
  const auto& axes = known_sweep_axes();
  if (std::find(axes.begin(), axes.end(), sweep.axis) == axes.end())
    throw std::invalid_argument("spec.sweep.axis: unknown axis '" + sweep.axis + "'");
  if (fixed_instance) {
    fixed_instance->validate();
    static const std::vector<std::string> instance_axes = {
        "customer_count", "model_count", "avg_distance", "distance_deviation",
        "energy_budget"};
    if (std::find(instance_axes.begin(), instance_axes.end(), sweep.axis) !=
        instance_axes.end()) {
      throw std::invalid_argument("spec.sweep.axis: axis '" + sweep.axis +
                                  "' cannot vary a fixed instance");
    }
  }
  if (algorithms.empty()) throw std::invalid_argument("spec.algorithms: must be non-empty");
  const auto& algos = known_algorithms();
  for (const std::string& a : algorithms) {
    if (std::find(algos.begin(), algos.end(), a) == algos.end())
      throw std::invalid_argument("spec.algorithms: unknown algorithm '" + a + "'");
  }
  pricing.validate();
}

/// One row of the result table.
struct CellResult {
  std::string experiment;
  double sweep_value = 0;
  std::string algorithm;
  std::uint64_t seed = 0;
  double customer_profit = 0;
  double seller_profit = 0;
  double objective = 0;
  long follower_calls = 0;
  long wall_time_ms = 0;
  bool converged = true;
  double gap = 0;
  std::string status = "ok";
  // Optional per-run traces for the ndjson sink.
  std::vector<BoundsRecord> rsr_trace;
  std::vector<PriceEvaluation> price_trace;
};

inline constexpr const char* kCsvHeader =
    "experiment,sweep_value,algorithm,seed,customer_profit,seller_profit,objective,"
    "follower_calls,wall_time_ms,converged,gap,status";

inline std::string to_csv(const std::vector<CellResult>& rows) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const CellResult& r : rows) {
    out += r.experiment;
    out += ',';
    out += format_double(r.sweep_value);
    out += ',';
    out += r.algorithm;
    out += ',';
    out += std::to_string(r.seed);
    out += ',';
    out += format_double(r.customer_profit);
    out += ',';
    out += format_double(r.seller_profit);
    out += ',';
    out += format_double(r.objective);
    out += ',';
    out += std::to_string(r.follower_calls);
    out += ',';
    out += std::to_string(r.wall_time_ms);
    out += ',';
    out += (r.converged ? "true" : "false");
    out += ',';
    out += format_double(r.gap);
    out += ',';
    out += r.status;
    out += '\n';
  }
  return out;
}

/// Line-delimited JSON trace records (solver bounds and pricing iterates).
inline std::string to_trace_ndjson(const std::vector<CellResult>& rows) {
  std::string out;
  for (const CellResult& r : rows) {
    for (const BoundsRecord& b : r.rsr_trace) {
      nlohmann::json j{{"experiment", r.experiment},
                       {"sweep_value", r.sweep_value},
                       {"algorithm", r.algorithm},
                       {"iteration", b.iteration},
                       {"lb", b.lb},
                       {"ub", b.ub},
                       {"scenario", b.scenario_kind == ScenarioKind::Optimality
                                        ? "optimality"
                                        : "feasibility"}};
      out += j.dump();
      out += '\n';
    }
    for (const PriceEvaluation& e : r.price_trace) {
      nlohmann::json j{{"experiment", r.experiment}, {"sweep_value", r.sweep_value},
                       {"algorithm", r.algorithm},   {"start", e.start_id},
                       {"iteration", e.iteration},   {"zeta", e.zeta},
                       {"profit", e.profit}};
      out += j.dump();
      out += '\n';
    }
  }
  return out;
}

namespace detail {

struct CellPlan {
  std::size_t value_index = 0;
  double sweep_value = 0;
  std::string algorithm;
  GeneratorParams params;
  PricingConfig pricing;
  double price_slope = 20;
  int near_opt_intervals = 1000;
  int grid_depth = 11;
  std::uint64_t instance_seed = 0;
};

inline CellPlan plan_cell(const ExperimentSpec& spec, std::size_t value_index,
                          const std::string& algorithm) {
  CellPlan plan;
  plan.value_index = value_index;
  plan.sweep_value = spec.sweep.values[value_index];
  plan.algorithm = algorithm;
  plan.params = spec.instance;
  plan.pricing = spec.pricing;
  plan.price_slope = spec.price_slope;
  plan.near_opt_intervals = spec.near_opt_intervals;
  plan.grid_depth = spec.grid_depth;
  plan.instance_seed = derive_stream(spec.seed, spec.name, value_index);

  const double v = plan.sweep_value;
  const std::string& axis = spec.sweep.axis;
  if (axis == "customer_count") plan.params.customer_count = static_cast<int>(v);
  else if (axis == "model_count") plan.params.model_count = static_cast<int>(v);
  else if (axis == "avg_distance") plan.params.avg_distance = v;
  else if (axis == "distance_deviation") plan.params.distance_deviation = v;
  else if (axis == "energy_budget") plan.params.nominal_energy = v;
  else if (axis == "price_slope") plan.price_slope = v;
  else if (axis == "num_starts") plan.pricing.num_starts = static_cast<int>(v);
  else if (axis == "near_opt_intervals") plan.near_opt_intervals = static_cast<int>(v);
  else if (axis == "seed") {
    plan.instance_seed = static_cast<std::uint64_t>(v);
    plan.pricing.seed = static_cast<std::uint64_t>(v);
  }
  return plan;
}

inline double sum_base_charges_of(const std::vector<int>& selection,
                                  const MarketInstance& inst) {
  double total = 0;
  for (int psi : selection) total += inst.model(psi).base_charge;
  return total;
}

inline CellResult run_cell(const ExperimentSpec& spec, const CellPlan& plan) {
  CellResult row;
  row.experiment = spec.name;
  row.sweep_value = plan.sweep_value;
  row.algorithm = plan.algorithm;
  row.seed = spec.seed;
  const auto start = std::chrono::steady_clock::now();
  try {
    const MarketInstance inst = spec.fixed_instance
                                    ? *spec.fixed_instance
                                    : generate_instance(plan.params, plan.instance_seed);
    const PriceSchedule prices{plan.price_slope, plan.pricing.offset};
    RsrOptions follower = plan.pricing.follower;
    follower.grid_depth = plan.grid_depth;

    if (plan.algorithm == "rsr") {
      const RsrResult res = rsr(inst, prices, follower);
      row.objective = res.objective;
      row.converged = res.converged;
      row.gap = res.gap();
      row.customer_profit = -res.objective;
      // No surviving feasible scenario (objective +inf) means nobody rents.
      const CustomerDecision dec = res.durations.empty()
                                       ? CustomerDecision{}
                                       : CustomerDecision{res.selection, res.durations};
      row.seller_profit = seller_profit(dec, prices, inst).profit;
      row.rsr_trace = res.state.trace;
    } else if (plan.algorithm == "greedy" || plan.algorithm == "static_env_opt") {
      const CustomerDecision dec = plan.algorithm == "greedy" ? greedy_select(inst, prices)
                                                              : static_env_opt(inst, prices);
      const EvaluationReport rep = evaluate_worst_case(dec, Recourse::FixedDuration, inst,
                                                       prices, plan.grid_depth, plan.algorithm);
      row.customer_profit = rep.worst_case_profit;
      row.objective = -rep.worst_case_profit;
      row.seller_profit =
          seller_profit(CustomerDecision{rep.selection, rep.durations}, prices, inst).profit;
    } else if (plan.algorithm == "imp" || plan.algorithm == "near_opt") {
      PricingConfig cfg = plan.pricing;
      cfg.follower = follower;
      const PricingResult res = plan.algorithm == "imp"
                                    ? imp(inst, cfg)
                                    : near_opt(inst, plan.near_opt_intervals, cfg);
      row.seller_profit = res.best_profit;
      row.objective = res.best_profit;
      row.follower_calls = res.follower_calls;
      row.customer_profit =
          res.best_decisions.model_choice.empty()
              ? -std::numeric_limits<double>::infinity()
              : -(sum_base_charges_of(res.best_decisions.model_choice, inst) +
                  res.best_customer_objective);
      row.price_trace = res.trace;
    } else {
      throw std::invalid_argument("unknown algorithm '" + plan.algorithm + "'");
    }
  } catch (const std::exception& e) {
    row.status = std::string("error: ") + e.what();
    row.customer_profit = row.seller_profit = row.objective =
        std::numeric_limits<double>::quiet_NaN();
    row.converged = false;
  }
  row.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return row;
}

}  // namespace detail

/// Executes every sweep-value x algorithm cell. All algorithms within one
/// sweep value share the same generated instance; cells are independent and
/// run on a small pool when parallelism > 1. Failures never abort the sweep:
/// they surface in the row's status column.
inline std::vector<CellResult> run_experiment(const ExperimentSpec& spec, int parallelism = 1) {
  spec.validate();
  std::vector<detail::CellPlan> plans;
  for (std::size_t vi = 0; vi < spec.sweep.values.size(); ++vi)
    for (const std::string& algo : spec.algorithms)
      plans.push_back(detail::plan_cell(spec, vi, algo));

  std::vector<CellResult> rows(plans.size());
  if (parallelism <= 1) {
    for (std::size_t i = 0; i < plans.size(); ++i) rows[i] = detail::run_cell(spec, plans[i]);
    return rows;
  }
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= plans.size()) break;
      rows[i] = detail::run_cell(spec, plans[i]);
    }
  };
  std::vector<std::thread> pool;
  const int threads = std::min<int>(parallelism, static_cast<int>(plans.size()));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return rows;
}

// ---------------------------------------------------------------------------
// ExperimentSpec JSON
// ---------------------------------------------------------------------------

inline GeneratorParams generator_params_from_json(const nlohmann::json& j,
                                                  const std::string& path) {
  using namespace jsonio;
  check_keys(j,
             {"customer_count", "model_count", "avg_distance", "homogeneous",
              "nominal_energy", "energy_deviation", "distance_deviation", "noise_dbm",
              "path_loss_exp", "utility_coeff", "energy_price", "t_min", "t_max", "gamma",
              "eta_budget", "energy_mode", "ssl_cost", "speed_base", "speed_step",
              "compressibility_scale", "base_charge_unit", "finetune_unit"},
             path);
  GeneratorParams p;
  p.customer_count = get_int_or(j, "customer_count", path, p.customer_count);
  p.model_count = get_int_or(j, "model_count", path, p.model_count);
  p.avg_distance = get_number_or(j, "avg_distance", path, p.avg_distance);
  p.homogeneous = get_bool_or(j, "homogeneous", path, p.homogeneous);
  p.nominal_energy = get_number_or(j, "nominal_energy", path, p.nominal_energy);
  p.energy_deviation = get_number_or(j, "energy_deviation", path, p.energy_deviation);
  p.distance_deviation = get_number_or(j, "distance_deviation", path, p.distance_deviation);
  p.noise_dbm = get_number_or(j, "noise_dbm", path, p.noise_dbm);
  p.path_loss_exp = get_number_or(j, "path_loss_exp", path, p.path_loss_exp);
  p.utility_coeff = get_number_or(j, "utility_coeff", path, p.utility_coeff);
  p.energy_price = get_number_or(j, "energy_price", path, p.energy_price);
  p.t_min = get_number_or(j, "t_min", path, p.t_min);
  p.t_max = get_number_or(j, "t_max", path, p.t_max);
  p.gamma = get_number_or(j, "gamma", path, p.gamma);
  p.eta_budget = get_number_or(j, "eta_budget", path, p.eta_budget);
  if (j.contains("energy_mode")) {
    const nlohmann::json& mode = j["energy_mode"];
    if (!mode.is_string()) throw std::invalid_argument(path + ".energy_mode: expected a string");
    p.energy_mode = energy_mode_from_string(mode.get<std::string>(), path + ".energy_mode");
  }
  p.ssl_cost = get_number_or(j, "ssl_cost", path, p.ssl_cost);
  p.speed_base = get_number_or(j, "speed_base", path, p.speed_base);
  p.speed_step = get_number_or(j, "speed_step", path, p.speed_step);
  p.compressibility_scale =
      get_number_or(j, "compressibility_scale", path, p.compressibility_scale);
  p.base_charge_unit = get_number_or(j, "base_charge_unit", path, p.base_charge_unit);
  p.finetune_unit = get_number_or(j, "finetune_unit", path, p.finetune_unit);
  return p;
}

inline PricingConfig pricing_config_from_json(const nlohmann::json& j, const std::string& path) {
  using namespace jsonio;
  check_keys(j,
             {"zeta_lo", "zeta_hi", "step", "fd_delta", "max_num", "num_starts", "offset",
              "seed", "start_jitter", "rsr_tol", "rsr_max_iter"},
             path);
  PricingConfig cfg;
  cfg.zeta_lo = get_number_or(j, "zeta_lo", path, cfg.zeta_lo);
  cfg.zeta_hi = get_number_or(j, "zeta_hi", path, cfg.zeta_hi);
  cfg.step = get_number_or(j, "step", path, cfg.step);
  cfg.fd_delta = get_number_or(j, "fd_delta", path, cfg.fd_delta);
  cfg.max_num = get_int_or(j, "max_num", path, cfg.max_num);
  cfg.num_starts = get_int_or(j, "num_starts", path, cfg.num_starts);
  cfg.offset = get_number_or(j, "offset", path, cfg.offset);
  cfg.seed = static_cast<std::uint64_t>(get_number_or(j, "seed", path, 0));
  cfg.start_jitter = get_number_or(j, "start_jitter", path, cfg.start_jitter);
  cfg.follower.tol = get_number_or(j, "rsr_tol", path, cfg.follower.tol);
  cfg.follower.max_iter = get_int_or(j, "rsr_max_iter", path, cfg.follower.max_iter);
  return cfg;
}

inline ExperimentSpec experiment_spec_from_json(const nlohmann::json& j) {
  using namespace jsonio;
  const std::string path = "spec";
  check_keys(j,
             {"name", "instance", "sweep", "algorithms", "seed", "output_path", "price_slope",
              "pricing", "near_opt_intervals", "grid_depth"},
             path);
  ExperimentSpec spec;
  const nlohmann::json& name = require(j, "name", path);
  if (!name.is_string()) throw std::invalid_argument("spec.name: expected a string");
  spec.name = name.get<std::string>();
  if (j.contains("instance")) {
    // A literal market instance carries a customers array; anything else is
    // read as generator parameters.
    if (j["instance"].is_object() && j["instance"].contains("customers")) {
      spec.fixed_instance = market_instance_from_json(j["instance"], path + ".instance");
    } else {
      spec.instance = generator_params_from_json(j["instance"], path + ".instance");
    }
  }
  const nlohmann::json& sweep = require(j, "sweep", path);
  check_keys(sweep, {"axis", "values"}, path + ".sweep");
  const nlohmann::json& axis = require(sweep, "axis", path + ".sweep");
  if (!axis.is_string()) throw std::invalid_argument("spec.sweep.axis: expected a string");
  spec.sweep.axis = axis.get<std::string>();
  const nlohmann::json& values = require(sweep, "values", path + ".sweep");
  if (!values.is_array()) throw std::invalid_argument("spec.sweep.values: expected an array");
  for (const auto& v : values) {
    if (!v.is_number()) throw std::invalid_argument("spec.sweep.values: expected numbers");
    spec.sweep.values.push_back(v.get<double>());
  }
  const nlohmann::json& algos = require(j, "algorithms", path);
  if (!algos.is_array()) throw std::invalid_argument("spec.algorithms: expected an array");
  for (const auto& a : algos) {
    if (!a.is_string()) throw std::invalid_argument("spec.algorithms: expected strings");
    spec.algorithms.push_back(a.get<std::string>());
  }
  spec.seed = static_cast<std::uint64_t>(get_number_or(j, "seed", path, 0));
  if (j.contains("output_path")) {
    const nlohmann::json& op = j["output_path"];
    if (!op.is_string()) throw std::invalid_argument("spec.output_path: expected a string");
    spec.output_path = op.get<std::string>();
  }
  spec.price_slope = get_number_or(j, "price_slope", path, spec.price_slope);
  if (j.contains("pricing"))
    spec.pricing = pricing_config_from_json(j["pricing"], path + ".pricing");
  spec.near_opt_intervals = get_int_or(j, "near_opt_intervals", path, spec.near_opt_intervals);
  spec.grid_depth = get_int_or(j, "grid_depth", path, spec.grid_depth);
  spec.validate();
  return spec;
}

inline nlohmann::json to_json(const ExperimentSpec& spec) {
  nlohmann::json j;
  j["name"] = spec.name;
  j["seed"] = spec.seed;
  j["sweep"] = {{"axis", spec.sweep.axis}, {"values", spec.sweep.values}};
  j["algorithms"] = spec.algorithms;
  j["price_slope"] = spec.price_slope;
  j["near_opt_intervals"] = spec.near_opt_intervals;
  j["grid_depth"] = spec.grid_depth;
  if (spec.fixed_instance) {
    j["instance"] = to_json(*spec.fixed_instance);
  } else {
    const GeneratorParams& p = spec.instance;
    nlohmann::json inst;
    inst["customer_count"] = p.customer_count;
    inst["model_count"] = p.model_count;
    inst["avg_distance"] = p.avg_distance;
    inst["homogeneous"] = p.homogeneous;
    inst["nominal_energy"] = p.nominal_energy;
    inst["energy_deviation"] = p.energy_deviation;
    inst["distance_deviation"] = p.distance_deviation;
    inst["gamma"] = p.gamma;
    inst["eta_budget"] = p.eta_budget;
    inst["energy_mode"] = to_string(p.energy_mode);
    j["instance"] = inst;
  }
  nlohmann::json pricing;
  pricing["num_starts"] = spec.pricing.num_starts;
  pricing["max_num"] = spec.pricing.max_num;
  pricing["step"] = spec.pricing.step;
  pricing["fd_delta"] = spec.pricing.fd_delta;
  pricing["offset"] = spec.pricing.offset;
  pricing["seed"] = spec.pricing.seed;
  j["pricing"] = pricing;
  if (!spec.output_path.empty()) j["output_path"] = spec.output_path;
  return j;
}

/// The benchmark suite: customer-side profit sweeps, seller-side pricing
/// sweeps and the pricing cost comparison.
inline std::vector<ExperimentSpec> builtin_experiments() {
  std::vector<ExperimentSpec> specs;
  auto customers = [&](std::string name, std::string axis, std::vector<double> values) {
    ExperimentSpec s;
    s.name = std::move(name);
    s.sweep = SweepSpec{std::move(axis), std::move(values)};
    s.algorithms = {"rsr", "static_env_opt", "greedy"};
    s.seed = 7;
    specs.push_back(std::move(s));
  };
  customers("customers-by-count", "customer_count", {3, 5, 7});
  customers("customers-by-models", "model_count", {1, 2, 3});
  customers("customers-by-distance", "avg_distance", {750, 1250, 1750});
  customers("customers-by-deviation", "distance_deviation", {250, 500, 750, 1000});
  customers("customers-by-price", "price_slope", {10, 20, 40, 80});
  customers("customers-by-energy", "energy_budget", {3, 5, 7, 9});

  auto seller = [&](std::string name, std::string axis, std::vector<double> values,
                    std::vector<std::string> algorithms) {
    ExperimentSpec s;
    s.name = std::move(name);
    s.sweep = SweepSpec{std::move(axis), std::move(values)};
    s.algorithms = std::move(algorithms);
    s.seed = 7;
    s.instance.customer_count = 3;
    s.instance.homogeneous = true;
    specs.push_back(std::move(s));
  };
  seller("seller-by-count", "customer_count", {1, 3, 5}, {"imp", "near_opt"});
  seller("seller-by-models", "model_count", {1, 2, 3}, {"imp", "near_opt"});
  seller("seller-by-distance", "avg_distance", {750, 1250, 1750}, {"imp", "near_opt"});
  seller("seller-by-seed", "seed", {0, 1, 2, 3}, {"imp"});
  seller("seller-by-starts", "num_starts", {1, 3, 5, 7}, {"imp"});
  seller("seller-cost", "near_opt_intervals", {1000, 4000}, {"imp", "near_opt"});
  return specs;
}

}  // namespace scmarket
