#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "scmarket/market.hpp"
#include "scmarket/scalar_opt.hpp"

namespace scmarket {

/// The budgeted uncertainty set {x in [0,1]^n : sum x <= budget}.
struct BudgetPolytope {
  int dim = 0;
  double budget = 0;

  void validate() const {
    if (dim < 1) throw std::invalid_argument("BudgetPolytope: dim must be >= 1");
    if (budget < 0 || budget > dim)
      throw std::invalid_argument("BudgetPolytope: budget must be in [0, dim]");
  }
};

inline double realize_distance(const Customer& cust, double g) {
  return cust.nominal_distance + g * cust.distance_deviation;
}

inline double realize_energy(const Customer& cust, double h, EnergyMode mode) {
  return mode == EnergyMode::Additive
             ? cust.nominal_energy + h * cust.energy_deviation
             : cust.nominal_energy - h * cust.energy_deviation;
}

/// Enumerates all vertices of the budget polytope: every 0/1 vector with at
/// most floor(budget) ones, plus, when the budget is fractional, each such
/// vector with floor(budget) ones extended by one extra coordinate at the
/// fractional remainder. Sorted lexicographically, deduplicated.
inline std::vector<std::vector<double>> vertex_candidates(const BudgetPolytope& poly) {
  poly.validate();
  if (poly.dim > 20)
    throw std::invalid_argument("vertex_candidates: dimension guard (dim <= 20)");
  const int n = poly.dim;
  const int whole = static_cast<int>(std::floor(poly.budget + 1e-9));
  const double frac = poly.budget - whole;
  const bool has_frac = frac > 1e-12;

  std::vector<std::vector<double>> verts;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int ones = __builtin_popcount(mask);
    if (ones > whole) continue;
    std::vector<double> v(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) v[static_cast<std::size_t>(i)] = 1.0;
    if (ones == whole && has_frac) {
      for (int t = 0; t < n; ++t) {
        if (mask & (1u << t)) continue;
        std::vector<double> w = v;
        w[static_cast<std::size_t>(t)] = frac;
        verts.push_back(std::move(w));
      }
    }
    verts.push_back(std::move(v));
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return verts;
}

/// Outcome of the adversary's search over the two budget polytopes. An
/// infinite value flags that the realization makes some customer's duration
/// interval empty (the realization is then the infeasibility witness).
struct AdversaryResult {
  double value = -std::numeric_limits<double>::infinity();
  Realization realization;
};

namespace detail {

/// Maximizes sum_n cell_value(n, g_n, h_n) over the product of the two
/// budget polytopes. cell_value returns +infinity for cells the customer
/// cannot operate in; the adversary prefers those. Candidates are the vertex
/// products plus, for small dimensions, the full uniform grid (solved exactly
/// by a two-budget allocation DP over grid units). Ties resolve toward
/// lexicographically smaller realizations, so a vacuous energy move comes
/// back as h = 0.
inline AdversaryResult maximize_over_budgets(
    int n, double gamma, double eta, int grid_depth,
    const std::function<double(int, double, double)>& cell_value) {
  AdversaryResult best;

  const auto g_verts = vertex_candidates(BudgetPolytope{n, std::min<double>(gamma, n)});
  const auto h_verts = vertex_candidates(BudgetPolytope{n, std::min<double>(eta, n)});
  if (g_verts.size() * h_verts.size() > 4'000'000)
    throw std::length_error("worst_case_search: vertex product too large");

  // Per-(g,h) vertex pair evaluation, g-major lexicographic order.
  for (const auto& g : g_verts) {
    for (const auto& h : h_verts) {
      double total = 0;
      for (int i = 0; i < n; ++i) {
        total += cell_value(i, g[static_cast<std::size_t>(i)], h[static_cast<std::size_t>(i)]);
        if (std::isinf(total)) break;
      }
      if (total > best.value) {
        best.value = total;
        best.realization = Realization{g, h};
      }
    }
  }

  if (n > 4 || grid_depth < 2) return best;

  // Exact maximization over the uniform grid: allocate integer grid units of
  // deviation across customers.
  const int den = grid_depth - 1;
  const int gu = std::min<int>(n * den, static_cast<int>(std::floor(gamma * den + 1e-9)));
  const int hu = std::min<int>(n * den, static_cast<int>(std::floor(eta * den + 1e-9)));

  std::vector<std::vector<double>> cells(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& tab = cells[static_cast<std::size_t>(i)];
    tab.resize(static_cast<std::size_t>((den + 1) * (den + 1)));
    for (int a = 0; a <= den; ++a)
      for (int b = 0; b <= den; ++b)
        tab[static_cast<std::size_t>(a * (den + 1) + b)] =
            cell_value(i, a / static_cast<double>(den), b / static_cast<double>(den));
  }

  const double neg_inf = -std::numeric_limits<double>::infinity();
  const int states = (gu + 1) * (hu + 1);
  std::vector<double> dp(static_cast<std::size_t>(states), neg_inf);
  dp[0] = 0;
  // choice[i][state] = packed (a_units, b_units) taken by customer i.
  std::vector<std::vector<std::uint16_t>> choice(
      static_cast<std::size_t>(n),
      std::vector<std::uint16_t>(static_cast<std::size_t>(states), 0));
  std::vector<double> next(static_cast<std::size_t>(states));
  for (int i = 0; i < n; ++i) {
    std::fill(next.begin(), next.end(), neg_inf);
    const auto& tab = cells[static_cast<std::size_t>(i)];
    auto& ch = choice[static_cast<std::size_t>(i)];
    for (int sa = 0; sa <= gu; ++sa) {
      for (int sb = 0; sb <= hu; ++sb) {
        const int s = sa * (hu + 1) + sb;
        const int amax = std::min(sa, den), bmax = std::min(sb, den);
        for (int a = 0; a <= amax; ++a) {
          const double* row = &tab[static_cast<std::size_t>(a * (den + 1))];
          const int sprev_base = (sa - a) * (hu + 1);
          for (int b = 0; b <= bmax; ++b) {
            const double prev = dp[static_cast<std::size_t>(sprev_base + sb - b)];
            if (prev == neg_inf) continue;
            const double cand = prev + row[b];
            if (cand > next[static_cast<std::size_t>(s)]) {
              next[static_cast<std::size_t>(s)] = cand;
              ch[static_cast<std::size_t>(s)] = static_cast<std::uint16_t>((a << 8) | b);
            }
          }
        }
      }
    }
    dp.swap(next);
  }

  int best_state = -1;
  double best_grid = neg_inf;
  for (int s = 0; s < states; ++s) {
    if (dp[static_cast<std::size_t>(s)] > best_grid) {
      best_grid = dp[static_cast<std::size_t>(s)];
      best_state = s;
    }
  }
  if (best_state >= 0 && best_grid > best.value) {
    Realization real = nominal_realization(n);
    int sa = best_state / (hu + 1), sb = best_state % (hu + 1);
    for (int i = n - 1; i >= 0; --i) {
      const std::uint16_t packed =
          choice[static_cast<std::size_t>(i)][static_cast<std::size_t>(sa * (hu + 1) + sb)];
      const int a = packed >> 8, b = packed & 0xff;
      real.g[static_cast<std::size_t>(i)] = a / static_cast<double>(den);
      real.h[static_cast<std::size_t>(i)] = b / static_cast<double>(den);
      sa -= a;
      sb -= b;
    }
    best.value = best_grid;
    best.realization = std::move(real);
  }
  return best;
}

}  // namespace detail

/// Result of the adversarial subproblem for a fixed model selection.
struct WorstCase {
  bool feasible = true;
  Realization realization;  ///< worst case, or the infeasibility witness
  double value = 0;         ///< sum of inner duration optima; +inf if infeasible
  std::vector<double> durations;  ///< inner minimizers at the worst realization
};

/// Finds the environment realization maximizing the customers' best-response
/// cost for a fixed selection. Searches vertex products of the two budget
/// polytopes, refined by a uniform grid (exactly, via the allocation DP) when
/// the instance has at most 4 customers. Exactness beyond that candidate set
/// is certified only against the brute-force oracle at desk scale.
inline WorstCase worst_case_search(const std::vector<int>& selection,
                                   const MarketInstance& inst,
                                   const PriceSchedule& prices,
                                   int grid_depth = 11) {
  const int n = inst.customer_count();
  if (static_cast<int>(selection.size()) != n)
    throw std::invalid_argument("worst_case_search: selection size mismatch");

  auto cell_value = [&](int i, double g, double h) -> double {
    const Customer& cust = inst.customers[static_cast<std::size_t>(i)];
    const ScModel& model = inst.model(selection[static_cast<std::size_t>(i)]);
    const double d = realize_distance(cust, g);
    const double q = realize_energy(cust, h, inst.energy_mode);
    const auto opt = optimal_duration(
        make_duration_problem(inst, cust, model, prices.price(model.index), d, q));
    return opt ? opt->value : std::numeric_limits<double>::infinity();
  };

  const AdversaryResult res =
      detail::maximize_over_budgets(n, inst.gamma, inst.eta_budget, grid_depth, cell_value);

  WorstCase out;
  out.realization = res.realization;
  out.value = res.value;
  if (std::isinf(res.value)) {
    out.feasible = false;
    return out;
  }
  out.durations.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Customer& cust = inst.customers[static_cast<std::size_t>(i)];
    const ScModel& model = inst.model(selection[static_cast<std::size_t>(i)]);
    const double d = realize_distance(cust, res.realization.g[static_cast<std::size_t>(i)]);
    const double q =
        realize_energy(cust, res.realization.h[static_cast<std::size_t>(i)], inst.energy_mode);
    out.durations[static_cast<std::size_t>(i)] =
        optimal_duration(
            make_duration_problem(inst, cust, model, prices.price(model.index), d, q))
            ->tau;
  }
  return out;
}

}  // namespace scmarket
