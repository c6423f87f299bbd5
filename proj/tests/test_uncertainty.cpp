#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "scmarket/rng.hpp"
#include "scmarket/uncertainty.hpp"
#include "test_support.hpp"

using namespace scmarket;
using Catch::Approx;

namespace {

Customer benchmark_customer(int index = 1) {
  Customer c;
  c.index = index;
  c.nominal_distance = 750;
  c.nominal_energy = 5;
  c.distance_deviation = 500;
  c.energy_deviation = 2;
  c.noise_power = 2e-11;
  return c;
}

MarketInstance single_customer_instance() {
  MarketInstance inst;
  inst.customers = {benchmark_customer()};
  inst.models = {ScModel{1, 10, 1, 5, 2}};
  inst.utility_coeff = 100;
  inst.energy_price = 100;
  inst.ssl_cost = 10;
  inst.path_loss_exp = 3;
  inst.t_min = 0;
  inst.t_max = 100;
  inst.gamma = 1;
  inst.eta_budget = 1;
  inst.energy_mode = EnergyMode::AdversarialReduction;
  return inst;
}

}  // namespace

TEST_CASE("realize distance and energy") {
  const Customer c = benchmark_customer();
  CHECK(realize_distance(c, 0) == 750.0);
  CHECK(realize_distance(c, 1) == 1250.0);
  CHECK(realize_distance(c, 0.5) == 1000.0);
  CHECK(realize_energy(c, 0, EnergyMode::Additive) == 5.0);
  CHECK(realize_energy(c, 0, EnergyMode::AdversarialReduction) == 5.0);
  CHECK(realize_energy(c, 1, EnergyMode::AdversarialReduction) == 3.0);
  CHECK(realize_energy(c, 1, EnergyMode::Additive) == 7.0);
}

TEST_CASE("vertex candidates") {
  using Vecs = std::set<std::vector<double>>;
  SECTION("one dimension, unit budget") {
    const auto v = vertex_candidates(BudgetPolytope{1, 1});
    CHECK(Vecs(v.begin(), v.end()) == Vecs{{0.0}, {1.0}});
  }
  SECTION("two dimensions, integral budget") {
    const auto v = vertex_candidates(BudgetPolytope{2, 1});
    CHECK(Vecs(v.begin(), v.end()) == Vecs{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}});
  }
  SECTION("fractional budget adds one fractional coordinate") {
    const auto v = vertex_candidates(BudgetPolytope{2, 1.5});
    CHECK(Vecs(v.begin(), v.end()) ==
          Vecs{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 0.5}, {0.5, 1.0}});
  }
  SECTION("at most one fractional coordinate, all inside the polytope") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = rng.uniform_int(1, 6);
      const double budget = rng.uniform(0, n);
      const auto verts = vertex_candidates(BudgetPolytope{n, budget});
      CHECK(!verts.empty());
      for (const auto& v : verts) {
        double sum = 0;
        int fractional = 0;
        for (double x : v) {
          CHECK(x >= 0.0);
          CHECK(x <= 1.0);
          if (x != 0.0 && x != 1.0) {
            ++fractional;
            CHECK(x == Approx(budget - std::floor(budget + 1e-9)).margin(1e-12));
          }
          sum += x;
        }
        CHECK(fractional <= 1);
        CHECK(sum <= budget + 1e-12);
      }
    }
  }
  SECTION("dimension guard") {
    CHECK_THROWS_AS(vertex_candidates(BudgetPolytope{21, 1}), std::invalid_argument);
  }
}

TEST_CASE("worst case search") {
  const PriceSchedule prices{20, 1};

  SECTION("no budget collapses to the nominal point") {
    MarketInstance inst = single_customer_instance();
    inst.gamma = 0;
    inst.eta_budget = 0;
    const WorstCase wc = worst_case_search({1}, inst, prices);
    REQUIRE(wc.feasible);
    CHECK(wc.realization == nominal_realization(1));
    const Customer& c = inst.customers[0];
    const auto nominal = optimal_duration(make_duration_problem(
        inst, c, inst.model(1), prices.price(1), c.nominal_distance, c.nominal_energy));
    CHECK(wc.value == Approx(nominal->value));
    CHECK(wc.durations[0] == Approx(nominal->tau));
  }

  SECTION("single customer with a binding cap maxes both deviations") {
    MarketInstance inst = single_customer_instance();
    inst.customers[0].nominal_energy = 1.2;
    inst.customers[0].energy_deviation = 0.9;
    const WorstCase wc = worst_case_search({1}, inst, prices);
    REQUIRE(wc.feasible);
    CHECK(wc.realization.g[0] == 1.0);
    CHECK(wc.realization.h[0] == 1.0);

    // Exhaustive 101x101 grid of the uncertainty square.
    double grid_max = -1e300;
    const Customer& c = inst.customers[0];
    for (int i = 0; i <= 100; ++i) {
      for (int j = 0; j <= 100; ++j) {
        const double d = realize_distance(c, i / 100.0);
        const double q = realize_energy(c, j / 100.0, inst.energy_mode);
        const auto opt = optimal_duration(
            make_duration_problem(inst, c, inst.model(1), prices.price(1), d, q));
        REQUIRE(opt);
        grid_max = std::max(grid_max, opt->value);
      }
    }
    CHECK(wc.value >= grid_max - 1e-12);
  }

  SECTION("two customers, one unit of budget: deviation concentrates") {
    MarketInstance inst = single_customer_instance();
    inst.customers = {benchmark_customer(1), benchmark_customer(2)};
    inst.customers[0].nominal_distance = 800;
    inst.customers[1].nominal_distance = 1200;
    inst.gamma = 1;
    inst.eta_budget = 0;
    const WorstCase wc = worst_case_search({1, 1}, inst, prices);
    REQUIRE(wc.feasible);

    auto value_at = [&](double g0, double g1) {
      double total = 0;
      for (int i = 0; i < 2; ++i) {
        const Customer& c = inst.customers[static_cast<std::size_t>(i)];
        const double d = realize_distance(c, i == 0 ? g0 : g1);
        total += optimal_duration(make_duration_problem(inst, c, inst.model(1),
                                                        prices.price(1), d, c.nominal_energy))
                     ->value;
      }
      return total;
    };
    const double v10 = value_at(1, 0), v01 = value_at(0, 1);
    CHECK(wc.value == Approx(std::max(v10, v01)));
    if (v10 > v01) {
      CHECK(wc.realization.g == std::vector<double>{1.0, 0.0});
    } else {
      CHECK(wc.realization.g == std::vector<double>{0.0, 1.0});
    }
  }

  SECTION("additive energy mode returns an all-zero h") {
    SplitMix64 rng(32);
    for (int trial = 0; trial < 30; ++trial) {
      MarketInstance inst = testing::random_instance(rng, 3, 2);
      inst.energy_mode = EnergyMode::Additive;
      std::vector<int> sel;
      for (int i = 0; i < inst.customer_count(); ++i)
        sel.push_back(rng.uniform_int(1, inst.model_count()));
      const WorstCase wc = worst_case_search(sel, inst, testing::random_prices(rng));
      REQUIRE(wc.feasible);
      for (double h : wc.realization.h) CHECK(h == 0.0);
    }
  }

  SECTION("returned realizations respect the budgets") {
    SplitMix64 rng(33);
    for (int trial = 0; trial < 50; ++trial) {
      MarketInstance inst = testing::random_instance(rng, 4, 2);
      std::vector<int> sel;
      for (int i = 0; i < inst.customer_count(); ++i)
        sel.push_back(rng.uniform_int(1, inst.model_count()));
      const WorstCase wc = worst_case_search(sel, inst, testing::random_prices(rng));
      double sg = 0, sh = 0;
      for (double g : wc.realization.g) sg += g;
      for (double h : wc.realization.h) sh += h;
      CHECK(sg <= inst.gamma + 1e-12);
      CHECK(sh <= inst.eta_budget + 1e-12);
    }
  }

  SECTION("dominates every point of a dense grid at matching depth") {
    SplitMix64 rng(34);
    const int wanted_sizes[] = {3, 3, 2, 2, 1, 1};
    for (int target : wanted_sizes) {
      MarketInstance inst = testing::random_instance(rng, 3, 2);
      while (inst.customer_count() != target) inst = testing::random_instance(rng, 3, 2);
      const PriceSchedule p = testing::random_prices(rng);
      std::vector<int> sel;
      for (int i = 0; i < inst.customer_count(); ++i)
        sel.push_back(rng.uniform_int(1, inst.model_count()));
      const int depth = 21;
      const WorstCase wc = worst_case_search(sel, inst, p, depth);
      REQUIRE(wc.feasible);

      const int n = inst.customer_count();
      double grid_max = -1e300;
      std::vector<int> gi(static_cast<std::size_t>(n), 0), hi(static_cast<std::size_t>(n), 0);
      auto value_of = [&]() {
        double total = 0;
        for (int i = 0; i < n; ++i) {
          const Customer& c = inst.customers[static_cast<std::size_t>(i)];
          const double d = realize_distance(c, gi[static_cast<std::size_t>(i)] / 20.0);
          const double q =
              realize_energy(c, hi[static_cast<std::size_t>(i)] / 20.0, inst.energy_mode);
          const auto opt = optimal_duration(make_duration_problem(
              inst, c, inst.model(sel[static_cast<std::size_t>(i)]),
              p.price(sel[static_cast<std::size_t>(i)]), d, q));
          if (!opt) return std::numeric_limits<double>::infinity();
          total += opt->value;
        }
        return total;
      };
      auto within = [&](const std::vector<int>& v, double budget) {
        int sum = 0;
        for (int x : v) sum += x;
        return sum <= static_cast<int>(std::floor(budget * 20 + 1e-9));
      };
      // Odometer over the product grid.
      while (true) {
        if (within(gi, inst.gamma) && within(hi, inst.eta_budget))
          grid_max = std::max(grid_max, value_of());
        int pos = 2 * n - 1;
        while (pos >= 0) {
          auto& vec = pos < n ? gi : hi;
          int& x = vec[static_cast<std::size_t>(pos % n)];
          if (x < 20) {
            ++x;
            break;
          }
          x = 0;
          --pos;
        }
        if (pos < 0) break;
      }
      CHECK(wc.value >= grid_max - 1e-12);
      CHECK(wc.value == Approx(grid_max).epsilon(1e-6));
    }
  }

  SECTION("infeasible selections produce a witness") {
    MarketInstance inst = single_customer_instance();
    inst.t_min = 2;
    inst.customers[0].nominal_energy = 0.5;
    inst.customers[0].energy_deviation = 0.4;
    const WorstCase wc = worst_case_search({1}, inst, prices);
    CHECK_FALSE(wc.feasible);
    CHECK(std::isinf(wc.value));
    // The witness itself must make the duration interval empty.
    const Customer& c = inst.customers[0];
    const double d = realize_distance(c, wc.realization.g[0]);
    const double q = realize_energy(c, wc.realization.h[0], inst.energy_mode);
    CHECK_FALSE(optimal_duration(
        make_duration_problem(inst, c, inst.model(1), prices.price(1), d, q)));
  }
}
