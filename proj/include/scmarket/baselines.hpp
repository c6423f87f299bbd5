#pragma once

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "scmarket/market.hpp"
#include "scmarket/scalar_opt.hpp"
#include "scmarket/uncertainty.hpp"

namespace scmarket {

/// How durations behave when a fixed selection is stress-tested: held at the
/// decided values (truncated to the realized energy cap) or re-optimized per
/// realization (the two-stage semantics).
enum class Recourse { FixedDuration, AdaptiveDuration };

struct EvaluationReport {
  std::string algorithm;
  std::vector<int> selection;
  std::vector<double> durations;  ///< at the worst realization, per recourse
  Realization worst_realization;
  double worst_case_profit = 0;
  Recourse recourse = Recourse::FixedDuration;
};

/// Customers rent the cheapest-priced model (ties to the lowest index) and
/// optimize the duration at the nominal environment.
inline CustomerDecision greedy_select(const MarketInstance& inst,
                                      const PriceSchedule& prices) {
  int cheapest = 1;
  for (int u = 2; u <= inst.model_count(); ++u)
    if (prices.price(u) < prices.price(cheapest)) cheapest = u;

  CustomerDecision dec;
  for (const Customer& cust : inst.customers) {
    const ScModel& model = inst.model(cheapest);
    const auto opt = optimal_duration(make_duration_problem(
        inst, cust, model, prices.price(cheapest), cust.nominal_distance,
        cust.nominal_energy));
    if (!opt) {
      throw std::runtime_error("greedy_select: customer " + std::to_string(cust.index) +
                               " cannot afford the minimum duration at nominal");
    }
    dec.model_choice.push_back(cheapest);
    dec.duration.push_back(opt->tau);
  }
  return dec;
}

/// Exact deterministic-case optimum: ignores environment fluctuation and
/// minimizes the nominal cost, which separates per customer.
inline CustomerDecision static_env_opt(const MarketInstance& inst,
                                       const PriceSchedule& prices) {
  CustomerDecision dec;
  for (const Customer& cust : inst.customers) {
    int best_u = 0;
    double best_cost = std::numeric_limits<double>::infinity();
    double best_tau = 0;
    for (int u = 1; u <= inst.model_count(); ++u) {
      const ScModel& model = inst.model(u);
      const auto opt = optimal_duration(make_duration_problem(
          inst, cust, model, prices.price(u), cust.nominal_distance, cust.nominal_energy));
      if (!opt) continue;
      const double cost = model.base_charge + opt->value;
      if (cost < best_cost) {
        best_cost = cost;
        best_u = u;
        best_tau = opt->tau;
      }
    }
    if (best_u == 0) {
      throw std::runtime_error("static_env_opt: customer " + std::to_string(cust.index) +
                               " has no nominally feasible model");
    }
    dec.model_choice.push_back(best_u);
    dec.duration.push_back(best_tau);
  }
  return dec;
}

/// Stress-tests a fixed selection against the adversary. Under
/// FixedDuration the decided durations are kept but truncated to the
/// realized energy cap (never below zero), so the evaluation is total;
/// under AdaptiveDuration durations are re-optimized per realization and the
/// profit can be -infinity if some realization empties a duration interval.
inline EvaluationReport evaluate_worst_case(const CustomerDecision& dec,
                                            Recourse recourse,
                                            const MarketInstance& inst,
                                            const PriceSchedule& prices,
                                            int grid_depth = 11,
                                            std::string algorithm = {}) {
  const int n = inst.customer_count();
  EvaluationReport rep;
  rep.algorithm = std::move(algorithm);
  rep.selection = dec.model_choice;
  rep.recourse = recourse;

  double base = 0;
  for (int psi : dec.model_choice) base += inst.model(psi).base_charge;

  if (recourse == Recourse::AdaptiveDuration) {
    const WorstCase wc = worst_case_search(dec.model_choice, inst, prices, grid_depth);
    rep.worst_realization = wc.realization;
    if (!wc.feasible) {
      rep.durations = dec.duration;
      rep.worst_case_profit = -std::numeric_limits<double>::infinity();
      return rep;
    }
    rep.durations = wc.durations;
    rep.worst_case_profit = -(base + wc.value);
    return rep;
  }

  auto truncated_tau = [&](int i, double g, double h) {
    const Customer& cust = inst.customers[static_cast<std::size_t>(i)];
    const ScModel& model = inst.model(dec.model_choice[static_cast<std::size_t>(i)]);
    const double d = realize_distance(cust, g);
    const double q = realize_energy(cust, h, inst.energy_mode);
    const double rate = energy_rate(model, d, cust.noise_power, inst.path_loss_exp);
    double tau = dec.duration[static_cast<std::size_t>(i)];
    if (rate > 0) tau = std::min(tau, q / rate);
    return std::max(tau, 0.0);
  };
  auto cell_value = [&](int i, double g, double h) {
    const Customer& cust = inst.customers[static_cast<std::size_t>(i)];
    const ScModel& model = inst.model(dec.model_choice[static_cast<std::size_t>(i)]);
    const double d = realize_distance(cust, g);
    return customer_net_cost(model, prices.price(model.index), truncated_tau(i, g, h), d,
                             cust.noise_power, inst);
  };
  const AdversaryResult worst =
      detail::maximize_over_budgets(n, inst.gamma, inst.eta_budget, grid_depth, cell_value);
  rep.worst_realization = worst.realization;
  rep.durations.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rep.durations[static_cast<std::size_t>(i)] =
        truncated_tau(i, worst.realization.g[static_cast<std::size_t>(i)],
                      worst.realization.h[static_cast<std::size_t>(i)]);
  }
  rep.worst_case_profit = -(base + worst.value);
  return rep;
}

}  // namespace scmarket
