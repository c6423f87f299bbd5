#pragma once

// Shared helpers for the test suites: deterministic random instances sized
// for the brute-force oracles.

#include <vector>

#include "scmarket/experiment.hpp"
#include "scmarket/market.hpp"
#include "scmarket/rng.hpp"

namespace scmarket::testing {

/// Random desk-scale instance: N <= max_customers, U <= max_models, integer
/// budgets in {0, 1}, t_min = 0 so every selection stays feasible.
inline MarketInstance random_instance(SplitMix64& rng, int max_customers = 3,
                                      int max_models = 2) {
  GeneratorParams p;
  p.customer_count = rng.uniform_int(1, max_customers);
  p.model_count = rng.uniform_int(1, max_models);
  p.avg_distance = rng.uniform(400, 1600);
  p.homogeneous = false;
  p.nominal_energy = rng.uniform(2.5, 8);
  p.energy_deviation = rng.uniform(0, 2);
  p.distance_deviation = rng.uniform(0, 800);
  p.gamma = rng.uniform_int(0, 1);
  p.eta_budget = rng.uniform_int(0, 1);
  p.energy_mode =
      rng.uniform() < 0.5 ? EnergyMode::AdversarialReduction : EnergyMode::Additive;
  return generate_instance(p, rng.next());
}

inline PriceSchedule random_prices(SplitMix64& rng) {
  return PriceSchedule{rng.uniform(5, 80), rng.uniform(0.5, 3)};
}

/// The default customer-side setup (5 customers, 2 models).
inline MarketInstance default_customer_instance(std::uint64_t seed = 7,
                                                bool homogeneous = true) {
  GeneratorParams p;
  p.homogeneous = homogeneous;
  return generate_instance(p, seed);
}

/// The default seller-side setup (3 customers, 2 models).
inline MarketInstance default_seller_instance(std::uint64_t seed = 7) {
  GeneratorParams p;
  p.customer_count = 3;
  p.homogeneous = true;
  return generate_instance(p, seed);
}

}  // namespace scmarket::testing
