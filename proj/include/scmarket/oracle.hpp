#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "scmarket/market.hpp"
#include "scmarket/scalar_opt.hpp"

// Brute-force reference implementations used to certify the solvers at desk
// scale. Deliberately built on market formulas and the closed-form duration
// optimum only: no code is shared with the uncertainty, rsr or pricing
// modules, so these are an independent route to the same values.

namespace scmarket::oracle {

struct OracleGrid {
  int tau_points = 101;
  int g_points = 11;
  int h_points = 11;
  int zeta_points = 101;

  void validate() const {
    if (tau_points < 2 || g_points < 2 || h_points < 2 || zeta_points < 2)
      throw std::invalid_argument("OracleGrid: every resolution must be >= 2");
  }
};

/// Grid minimization of a duration problem; independent check of the
/// closed-form projection.
inline DurationOptimum brute_force_duration(const DurationProblem& prob, int tau_points) {
  if (tau_points < 2) throw std::invalid_argument("brute_force_duration: tau_points >= 2");
  const double hi = prob.upper_limit();
  if (prob.t_min > hi) throw std::invalid_argument("brute_force_duration: empty interval");
  DurationOptimum best{prob.t_min, prob.objective(prob.t_min)};
  for (int i = 1; i < tau_points; ++i) {
    const double tau = prob.t_min + (hi - prob.t_min) * i / (tau_points - 1);
    const double v = prob.objective(tau);
    if (v < best.value) best = DurationOptimum{tau, v};
  }
  return best;
}

namespace detail {

/// All grid vectors x with x_i = u_i/(points-1) and sum x <= budget,
/// ascending lexicographic, stored as integer units.
inline std::vector<std::vector<int>> budget_grid(int n, int points, double budget) {
  const int den = points - 1;
  const int max_units = std::min<int>(n * den, static_cast<int>(std::floor(budget * den + 1e-9)));
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int used) -> void {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (int u = 0; u <= std::min(den, max_units - used); ++u) {
      cur[static_cast<std::size_t>(pos)] = u;
      self(self, pos + 1, used + u);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace detail

struct TwoStageResult {
  std::vector<int> selection;
  double value = std::numeric_limits<double>::infinity();
  Realization realization;
};

/// Exhaustive min-max: every selection against every (g, h) grid-point pair
/// in the budget polytopes, inner durations by the closed form.
inline TwoStageResult brute_force_two_stage(const MarketInstance& inst,
                                            const PriceSchedule& prices,
                                            const OracleGrid& grid) {
  grid.validate();
  const int n = inst.customer_count();
  const int u_count = inst.model_count();
  if (n > 3) throw std::invalid_argument("brute_force_two_stage: N <= 3 guard");
  double combos = 1;
  for (int i = 0; i < n; ++i) combos *= u_count;
  if (combos > 10000) throw std::invalid_argument("brute_force_two_stage: U^N <= 10000 guard");

  const auto g_grid = detail::budget_grid(n, grid.g_points, inst.gamma);
  const auto h_grid = detail::budget_grid(n, grid.h_points, inst.eta_budget);
  const int g_den = grid.g_points - 1, h_den = grid.h_points - 1;
  constexpr double inf = std::numeric_limits<double>::infinity();

  // cell[n][u][ig][ih] = inner duration optimum (+inf when infeasible).
  std::vector<double> cell(static_cast<std::size_t>(n * u_count * grid.g_points * grid.h_points));
  auto cell_at = [&](int i, int u, int ig, int ih) -> double& {
    return cell[static_cast<std::size_t>(
        ((i * u_count + (u - 1)) * grid.g_points + ig) * grid.h_points + ih)];
  };
  for (int i = 0; i < n; ++i) {
    const Customer& cust = inst.customers[static_cast<std::size_t>(i)];
    for (int u = 1; u <= u_count; ++u) {
      const ScModel& model = inst.model(u);
      for (int ig = 0; ig <= g_den; ++ig) {
        const double d = cust.nominal_distance +
                         (ig / static_cast<double>(g_den)) * cust.distance_deviation;
        for (int ih = 0; ih <= h_den; ++ih) {
          const double dev = (ih / static_cast<double>(h_den)) * cust.energy_deviation;
          const double q = inst.energy_mode == EnergyMode::Additive
                               ? cust.nominal_energy + dev
                               : cust.nominal_energy - dev;
          const auto opt = optimal_duration(
              make_duration_problem(inst, cust, model, prices.price(u), d, q));
          cell_at(i, u, ig, ih) = opt ? opt->value : inf;
        }
      }
    }
  }

  TwoStageResult best;
  std::vector<int> sel(static_cast<std::size_t>(n), 1);
  while (true) {
    double base = 0;
    for (int psi : sel) base += inst.model(psi).base_charge;

    double worst = -inf;
    const std::vector<int>* worst_g = nullptr;
    const std::vector<int>* worst_h = nullptr;
    for (const auto& gv : g_grid) {
      for (const auto& hv : h_grid) {
        double total = 0;
        for (int i = 0; i < n; ++i) {
          total += cell_at(i, sel[static_cast<std::size_t>(i)],
                           gv[static_cast<std::size_t>(i)], hv[static_cast<std::size_t>(i)]);
          if (total == inf) break;
        }
        if (total > worst) {
          worst = total;
          worst_g = &gv;
          worst_h = &hv;
        }
      }
    }
    if (base + worst < best.value) {
      best.value = base + worst;
      best.selection = sel;
      best.realization = nominal_realization(n);
      for (int i = 0; i < n; ++i) {
        best.realization.g[static_cast<std::size_t>(i)] =
            (*worst_g)[static_cast<std::size_t>(i)] / static_cast<double>(g_den);
        best.realization.h[static_cast<std::size_t>(i)] =
            (*worst_h)[static_cast<std::size_t>(i)] / static_cast<double>(h_den);
      }
    }

    int pos = n - 1;
    while (pos >= 0 && sel[static_cast<std::size_t>(pos)] == u_count) {
      sel[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++sel[static_cast<std::size_t>(pos)];
  }
  return best;
}

struct SellerScanResult {
  double zeta = 0;
  double profit = -std::numeric_limits<double>::infinity();
};

/// Dense scan of the seller profit (grid.zeta_points evenly spaced slopes)
/// with the customers responding through the brute-force two-stage solve;
/// reference for the pricing algorithms.
inline SellerScanResult brute_force_seller(const MarketInstance& inst, double zeta_lo,
                                           double zeta_hi, double offset,
                                           const OracleGrid& grid) {
  const int zeta_points = grid.zeta_points;
  if (zeta_points < 2 || zeta_points > 10000)
    throw std::invalid_argument("brute_force_seller: zeta_points in [2, 10000]");
  SellerScanResult best;
  for (int i = 0; i < zeta_points; ++i) {
    const double zeta = zeta_lo + (zeta_hi - zeta_lo) * i / (zeta_points - 1);
    const PriceSchedule prices{zeta, offset};
    const TwoStageResult follower = brute_force_two_stage(inst, prices, grid);
    double profit;
    if (!std::isfinite(follower.value)) {
      profit = seller_profit(CustomerDecision{}, prices, inst).profit;
    } else {
      CustomerDecision dec{follower.selection, {}};
      for (int c = 0; c < inst.customer_count(); ++c) {
        const Customer& cust = inst.customers[static_cast<std::size_t>(c)];
        const ScModel& model = inst.model(follower.selection[static_cast<std::size_t>(c)]);
        const double d = cust.nominal_distance +
                         follower.realization.g[static_cast<std::size_t>(c)] * cust.distance_deviation;
        const double dev =
            follower.realization.h[static_cast<std::size_t>(c)] * cust.energy_deviation;
        const double q = inst.energy_mode == EnergyMode::Additive ? cust.nominal_energy + dev
                                                                  : cust.nominal_energy - dev;
        dec.duration.push_back(
            optimal_duration(
                make_duration_problem(inst, cust, model, prices.price(model.index), d, q))
                ->tau);
      }
      profit = seller_profit(dec, prices, inst).profit;
    }
    if (profit > best.profit) {
      best.profit = profit;
      best.zeta = zeta;
    }
  }
  return best;
}

}  // namespace scmarket::oracle
