#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "scmarket/market.hpp"
#include "scmarket/rng.hpp"
#include "scmarket/scalar_opt.hpp"
#include "scmarket/uncertainty.hpp"

namespace scmarket {

/// Thrown by the master problem when feasibility cuts exclude every
/// selection (no model works for some customer under a generated scenario).
struct NoFeasibleSelection : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ScenarioKind { Optimality, Feasibility };

/// One column-and-constraint scenario: a realization produced by a
/// subproblem solve. Optimality scenarios carry the objective cut;
/// Feasibility scenarios only restrict the admissible selections.
struct Scenario {
  Realization realization;
  ScenarioKind kind = ScenarioKind::Optimality;
};

struct BoundsRecord {
  int iteration = 0;
  double lb = 0;
  double ub = 0;
  ScenarioKind scenario_kind = ScenarioKind::Optimality;
};

struct CcgState {
  std::vector<Scenario> scenarios;
  double lb = -std::numeric_limits<double>::infinity();
  double ub = std::numeric_limits<double>::infinity();
  int iteration = 0;
  std::vector<BoundsRecord> trace;
};

struct MasterSolution {
  std::vector<int> selection;
  double alpha = 0;  ///< worst pooled-scenario cost of the selection
  /// Per optimality scenario, the per-customer optimal durations.
  std::vector<std::vector<double>> scenario_durations;
  double objective = 0;  ///< sum of base charges + alpha; the lower bound
};

struct RsrOptions {
  double tol = 1e-4;
  int max_iter = 50;
  long enumeration_limit = 100000;
  int grid_depth = 11;
};

struct RsrResult {
  std::vector<int> selection;
  std::vector<double> durations;  ///< recourse durations at the worst surviving scenario
  double objective = std::numeric_limits<double>::infinity();
  Realization worst_realization;
  CcgState state;
  bool converged = false;

  double gap() const { return (state.ub - state.lb) / std::max(1.0, std::abs(state.lb)); }
};

namespace detail {

inline double sum_base_charges(const std::vector<int>& selection,
                               const MarketInstance& inst) {
  double total = 0;
  for (int psi : selection) total += inst.model(psi).base_charge;
  return total;
}

}  // namespace detail

/// Solves the master problem over selections and per-scenario durations.
/// Per-scenario durations decouple (each scenario owns its duration
/// variables), so the inner minimization is closed-form and only the
/// selection vector needs searching: exhaustively when U^N is within
/// enumeration_limit, otherwise by coordinate descent with restarts (inexact).
/// With no optimality scenario the objective keeps only the base charges.
inline MasterSolution solve_master(const std::vector<Scenario>& scenarios,
                                   const MarketInstance& inst,
                                   const PriceSchedule& prices,
                                   long enumeration_limit = 100000) {
  const int n = inst.customer_count();
  const int u_count = inst.model_count();
  constexpr double inf = std::numeric_limits<double>::infinity();

  // value[l][n][u-1]: inner duration optimum of customer n on model u under
  // scenario l; infeasible combinations are +inf (excluded selections).
  struct Cell {
    double value = 0;
    double tau = 0;
    bool feasible = false;
  };
  std::vector<std::vector<std::vector<Cell>>> cells(scenarios.size());
  for (std::size_t l = 0; l < scenarios.size(); ++l) {
    cells[l].resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const Customer& cust = inst.customers[static_cast<std::size_t>(i)];
      const double d = realize_distance(cust, scenarios[l].realization.g[static_cast<std::size_t>(i)]);
      const double q = realize_energy(cust, scenarios[l].realization.h[static_cast<std::size_t>(i)],
                                      inst.energy_mode);
      auto& row = cells[l][static_cast<std::size_t>(i)];
      row.resize(static_cast<std::size_t>(u_count));
      for (int u = 1; u <= u_count; ++u) {
        const auto opt = optimal_duration(
            make_duration_problem(inst, cust, inst.model(u), prices.price(u), d, q));
        if (opt) row[static_cast<std::size_t>(u - 1)] = Cell{opt->value, opt->tau, true};
      }
    }
  }

  // A (customer, model) pair is admissible only if it survives every pooled
  // scenario, of either kind.
  std::vector<std::vector<bool>> admissible(static_cast<std::size_t>(n),
                                            std::vector<bool>(static_cast<std::size_t>(u_count), true));
  for (std::size_t l = 0; l < scenarios.size(); ++l)
    for (int i = 0; i < n; ++i)
      for (int u = 0; u < u_count; ++u)
        if (!cells[l][static_cast<std::size_t>(i)][static_cast<std::size_t>(u)].feasible)
          admissible[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)] = false;
  for (int i = 0; i < n; ++i) {
    if (std::none_of(admissible[static_cast<std::size_t>(i)].begin(),
                     admissible[static_cast<std::size_t>(i)].end(), [](bool b) { return b; })) {
      throw NoFeasibleSelection("every model violates a feasibility cut for customer " +
                                std::to_string(i + 1));
    }
  }

  // alpha(selection) = max over optimality scenarios of the summed inner
  // optima; +inf when the selection is inadmissible somewhere.
  auto alpha_of = [&](const std::vector<int>& sel) -> double {
    double alpha = -inf;
    bool any_optimality = false;
    for (std::size_t l = 0; l < scenarios.size(); ++l) {
      double total = 0;
      bool ok = true;
      for (int i = 0; i < n; ++i) {
        const Cell& c = cells[l][static_cast<std::size_t>(i)]
                             [static_cast<std::size_t>(sel[static_cast<std::size_t>(i)] - 1)];
        if (!c.feasible) {
          ok = false;
          break;
        }
        total += c.value;
      }
      if (!ok) return inf;
      if (scenarios[l].kind == ScenarioKind::Optimality) {
        any_optimality = true;
        alpha = std::max(alpha, total);
      }
    }
    return any_optimality ? alpha : 0.0;  // empty pool: only base charges remain
  };
  auto objective_of = [&](const std::vector<int>& sel) {
    return detail::sum_base_charges(sel, inst) + alpha_of(sel);
  };

  std::vector<int> best_sel;
  double best_obj = inf;

  double combos = 1;
  for (int i = 0; i < n && combos <= static_cast<double>(enumeration_limit); ++i)
    combos *= u_count;
  if (combos <= static_cast<double>(enumeration_limit)) {
    std::vector<int> sel(static_cast<std::size_t>(n), 1);
    while (true) {
      const double obj = objective_of(sel);
      if (obj < best_obj) {
        best_obj = obj;
        best_sel = sel;
      }
      int pos = n - 1;
      while (pos >= 0 && sel[static_cast<std::size_t>(pos)] == u_count) {
        sel[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++sel[static_cast<std::size_t>(pos)];
    }
  } else {
    // Coordinate descent with deterministic random restarts. Inexact; used
    // only beyond the enumeration limit.
    SplitMix64 rng(0x5ca1ab1eu);
    constexpr int restarts = 16;
    for (int r = 0; r < restarts; ++r) {
      std::vector<int> sel(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        int u;
        do {
          u = rng.uniform_int(1, u_count);
        } while (!admissible[static_cast<std::size_t>(i)][static_cast<std::size_t>(u - 1)]);
        sel[static_cast<std::size_t>(i)] = u;
      }
      double obj = objective_of(sel);
      bool improved = true;
      while (improved) {
        improved = false;
        for (int i = 0; i < n; ++i) {
          int best_u = sel[static_cast<std::size_t>(i)];
          double best_here = obj;
          for (int u = 1; u <= u_count; ++u) {
            sel[static_cast<std::size_t>(i)] = u;
            const double cand = objective_of(sel);
            if (cand < best_here) {
              best_here = cand;
              best_u = u;
              improved = true;
            }
          }
          sel[static_cast<std::size_t>(i)] = best_u;
          obj = best_here;
        }
      }
      if (obj < best_obj || (obj == best_obj && (best_sel.empty() || sel < best_sel))) {
        best_obj = obj;
        best_sel = sel;
      }
    }
  }

  if (best_sel.empty() || !std::isfinite(best_obj)) {
    throw NoFeasibleSelection("feasibility cuts exclude every selection");
  }

  MasterSolution out;
  out.selection = best_sel;
  out.alpha = alpha_of(best_sel);
  out.objective = best_obj;
  for (std::size_t l = 0; l < scenarios.size(); ++l) {
    if (scenarios[l].kind != ScenarioKind::Optimality) continue;
    std::vector<double> taus(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      taus[static_cast<std::size_t>(i)] =
          cells[l][static_cast<std::size_t>(i)]
               [static_cast<std::size_t>(best_sel[static_cast<std::size_t>(i)] - 1)]
                   .tau;
    out.scenario_durations.push_back(std::move(taus));
  }
  return out;
}

/// Adversarial subproblem for a fixed selection; +inf value plus the witness
/// realization when the selection is not robustly feasible.
inline WorstCase solve_subproblem(const std::vector<int>& selection,
                                  const MarketInstance& inst,
                                  const PriceSchedule& prices,
                                  int grid_depth = 11) {
  return worst_case_search(selection, inst, prices, grid_depth);
}

/// Column-and-constraint generation over model selections: alternates the
/// master problem with the adversarial subproblem, accumulating optimality
/// and feasibility scenarios until the relative bound gap closes. The first
/// master solve runs against a synthetic nominal scenario (g = h = 0), which
/// is always a member of the uncertainty set.
inline RsrResult rsr(const MarketInstance& inst, const PriceSchedule& prices,
                     const RsrOptions& opts = {}) {
  inst.validate();
  validate_prices(prices, inst);
  if (!(opts.tol > 0)) throw std::invalid_argument("rsr: tol must be > 0");

  const int n = inst.customer_count();
  RsrResult res;
  CcgState& state = res.state;
  state.scenarios.push_back(Scenario{nominal_realization(n), ScenarioKind::Optimality});

  std::vector<int> last_selection;
  for (int iter = 1; iter <= opts.max_iter; ++iter) {
    state.iteration = iter;
    const MasterSolution ms =
        solve_master(state.scenarios, inst, prices, opts.enumeration_limit);
    state.lb = ms.objective;
    last_selection = ms.selection;

    const WorstCase wc = solve_subproblem(ms.selection, inst, prices, opts.grid_depth);
    const ScenarioKind kind = wc.feasible ? ScenarioKind::Optimality : ScenarioKind::Feasibility;
    if (wc.feasible) {
      const double candidate = wc.value + detail::sum_base_charges(ms.selection, inst);
      if (candidate < state.ub) {
        state.ub = candidate;
        res.selection = ms.selection;
        res.durations = wc.durations;
        res.worst_realization = wc.realization;
      }
    }
    const bool duplicate =
        std::any_of(state.scenarios.begin(), state.scenarios.end(),
                    [&](const Scenario& s) { return s.realization == wc.realization; });
    if (!duplicate) state.scenarios.push_back(Scenario{wc.realization, kind});
    state.trace.push_back(BoundsRecord{iter, state.lb, state.ub, kind});

    if (state.ub - state.lb <= opts.tol * std::max(1.0, std::abs(state.lb))) {
      res.converged = true;
      break;
    }
  }
  if (res.selection.empty()) res.selection = last_selection;  // never saw a feasible ub
  res.objective = state.ub;
  return res;
}

}  // namespace scmarket
