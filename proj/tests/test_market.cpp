#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "scmarket/io.hpp"
#include "scmarket/market.hpp"
#include "scmarket/rng.hpp"
#include "test_support.hpp"

using namespace scmarket;
using Catch::Approx;

TEST_CASE("dbm_to_watts") {
  CHECK(dbm_to_watts(30.0) == Approx(1.0));
  CHECK(dbm_to_watts(0.0) == Approx(1.0e-3));
  // Independent arithmetic route: 10^(-10.7) = exp(-10.7 ln 10).
  const double expected = std::exp(-10.7 * std::log(10.0));
  CHECK(dbm_to_watts(-77.0) == Approx(expected).margin(1e-15));
  CHECK(dbm_to_watts(-77.0) == Approx(1.9953e-11).margin(1e-15));
}

TEST_CASE("transmission energy per bit") {
  CHECK(transmission_energy_per_bit(0, 3, 1, 1) == 0.0);
  CHECK(transmission_energy_per_bit(2, 3, 1, 0.5) == Approx(4.0));
  const double direct = 750.0 * 750.0 * 750.0 * 1.9953e-11;
  CHECK(transmission_energy_per_bit(750, 3, 1.9953e-11, 1) == Approx(direct).epsilon(1e-6));
  CHECK(transmission_energy_per_bit(750, 3, 1.9953e-11, 1) ==
        Approx(8.4177e-3).margin(1e-7));
  CHECK_THROWS_AS(transmission_energy_per_bit(-1, 3, 1, 1), std::invalid_argument);

  SECTION("strictly increasing in d and a") {
    SplitMix64 rng(11);
    for (int i = 0; i < 200; ++i) {
      const double d = rng.uniform(1, 2000), eps = rng.uniform(1, 4);
      const double noise = rng.uniform(1e-12, 1e-9), a = rng.uniform(0.05, 2);
      const double base = transmission_energy_per_bit(d, eps, noise, a);
      CHECK(transmission_energy_per_bit(d * 1.01, eps, noise, a) > base);
      CHECK(transmission_energy_per_bit(d, eps, noise, a * 1.01) > base);
    }
  }
}

TEST_CASE("transmission cost") {
  CHECK(transmission_cost(100, 10, 0, 8.4177e-3) == 0.0);
  CHECK(transmission_cost(1, 2, 3, 4) == Approx(24.0));
  CHECK(transmission_cost(100, 10, 10, 8.4177e-3) == Approx(84.177).margin(1e-3));

  SECTION("homogeneous in tau for power-of-two scalings") {
    SplitMix64 rng(12);
    for (int i = 0; i < 100; ++i) {
      const double b1 = rng.uniform(1, 200), k = rng.uniform(0.5, 20);
      const double tau = rng.uniform(0, 100), e = rng.uniform(1e-6, 1e-1);
      for (double t : {2.0, 4.0, 0.5}) {
        CHECK(transmission_cost(b1, k, t * tau, e) == t * transmission_cost(b1, k, tau, e));
      }
    }
  }
}

TEST_CASE("customer net cost") {
  MarketInstance inst = testing::default_customer_instance();
  const double beta = 2.0;

  SECTION("tau = 0 vanishes") {
    CHECK(customer_net_cost(inst.model(1), beta, 0, 750, 1e-11, inst) == 0.0);
  }
  SECTION("closed-form point") {
    // k=1, beta=2, A=100, zero transmission cost, tau=49.
    MarketInstance one = inst;
    one.models = {ScModel{1, 1.0, 1.0, 0.0, 0.0}};
    const double got = customer_net_cost(one.model(1), 2.0, 49, 1e-9, 1e-30, one);
    CHECK(got == Approx(98.0 - 100.0 * std::log(50.0)).margin(1e-2));
  }
  SECTION("strictly increasing in distance") {
    SplitMix64 rng(13);
    for (int i = 0; i < 100; ++i) {
      const double d = rng.uniform(100, 1500), tau = rng.uniform(0.1, 50);
      const double lo = customer_net_cost(inst.model(1), beta, tau, d, 2e-11, inst);
      const double hi = customer_net_cost(inst.model(1), beta, tau, d + 50, 2e-11, inst);
      CHECK(hi > lo);
    }
  }
  SECTION("midpoint convexity in tau") {
    SplitMix64 rng(14);
    for (int i = 0; i < 300; ++i) {
      const double d = rng.uniform(100, 2000), b = rng.uniform(0.5, 50);
      const double t1 = rng.uniform(0, 100), t2 = rng.uniform(0, 100);
      const int u = rng.uniform_int(1, inst.model_count());
      auto f = [&](double tau) {
        return customer_net_cost(inst.model(u), b, tau, d, 2e-11, inst);
      };
      CHECK(f(0.5 * (t1 + t2)) <= 0.5 * (f(t1) + f(t2)) + 1e-9);
    }
  }
}

TEST_CASE("customer total profit") {
  MarketInstance inst = testing::default_customer_instance();
  const PriceSchedule prices{20, 1};
  const int n = inst.customer_count();
  std::vector<double> d, q;
  for (const Customer& c : inst.customers) {
    d.push_back(c.nominal_distance);
    q.push_back(c.nominal_energy);
  }

  SECTION("all tau = 0 with zero base charges") {
    MarketInstance free = inst;
    for (ScModel& m : free.models) m.base_charge = 0;
    CustomerDecision dec{std::vector<int>(n, 1), std::vector<double>(n, 0.0)};
    CHECK(customer_total_profit(dec, d, q, free, prices) == 0.0);
  }
  SECTION("negation of H + R") {
    CustomerDecision dec{std::vector<int>(n, 2), std::vector<double>(n, 1.5)};
    double expected = 0;
    for (int i = 0; i < n; ++i) {
      const Customer& c = inst.customers[static_cast<std::size_t>(i)];
      expected -= inst.model(2).base_charge +
                  customer_net_cost(inst.model(2), prices.price(2), 1.5,
                                    c.nominal_distance, c.noise_power, inst);
    }
    CHECK(customer_total_profit(dec, d, q, inst, prices) == Approx(expected));
  }
  SECTION("energy violation is signalled") {
    CustomerDecision dec{std::vector<int>(n, 1), std::vector<double>(n, 1.0)};
    std::vector<double> tiny_q(static_cast<std::size_t>(n), 1e-6);
    CHECK_THROWS_AS(customer_total_profit(dec, d, tiny_q, inst, prices), std::domain_error);
  }
}

TEST_CASE("rent count") {
  CustomerDecision dec{{1, 2, 1}, {1, 1, 1}};
  CHECK(rent_count(dec, 1) == 2);
  CHECK(rent_count(dec, 2) == 1);
  CHECK(rent_count(dec, 3) == 0);
  CustomerDecision all_one{{1, 1, 1, 1}, {1, 1, 1, 1}};
  CHECK(rent_count(all_one, 1) == 4);
}

TEST_CASE("seller model cost and profit") {
  MarketInstance inst = testing::default_seller_instance();
  // b3 = 10, b2_u = 2u with the default generator laws.
  SECTION("cost with no renters is b3 only") {
    CustomerDecision none{{}, {}};
    CHECK(seller_model_cost(1, none, inst) == Approx(10.0));
    double total = 0;
    for (int u = 1; u <= inst.model_count(); ++u) total += seller_model_cost(u, none, inst);
    CHECK(total == Approx(2 * 10.0));
  }
  SECTION("cost counts renters") {
    CustomerDecision dec{{1, 1, 1}, {1, 1, 1}};
    CHECK(seller_model_cost(1, dec, inst) == Approx(2.0 * 3 + 10.0));
  }
  SECTION("all zero durations collapse to -U*b3") {
    CustomerDecision dec{{1, 1, 1}, {0, 0, 0}};
    const SellerOutcome out = seller_profit(dec, PriceSchedule{20, 1}, inst);
    CHECK(out.revenue == 0.0);
    CHECK(out.profit == Approx(-2 * 10.0));
  }
  SECTION("single renter") {
    MarketInstance one = inst;
    one.customers.resize(1);
    one.models.resize(1);
    one.models[0].finetune_unit_cost = 2;
    const PriceSchedule prices{4, 1};  // beta_1 = 5
    CustomerDecision dec{{1}, {10}};
    const SellerOutcome out = seller_profit(dec, prices, one);
    CHECK(out.revenue == Approx(50.0));
    CHECK(out.training_cost == Approx(12.0));
    CHECK(out.profit == Approx(38.0));
  }
  SECTION("revenue matches the per-model regrouping") {
    SplitMix64 rng(15);
    for (int trial = 0; trial < 100; ++trial) {
      MarketInstance random = testing::random_instance(rng, 3, 2);
      const PriceSchedule prices = testing::random_prices(rng);
      CustomerDecision dec;
      for (int i = 0; i < random.customer_count(); ++i) {
        dec.model_choice.push_back(rng.uniform_int(1, random.model_count()));
        dec.duration.push_back(rng.uniform(0, 50));
      }
      const SellerOutcome out = seller_profit(dec, prices, random);
      double by_model = 0;
      for (int u = 1; u <= random.model_count(); ++u) {
        double dur = 0;
        for (std::size_t i = 0; i < dec.model_choice.size(); ++i)
          if (dec.model_choice[i] == u) dur += dec.duration[i];
        by_model += dur * prices.price(u);
      }
      CHECK(out.revenue == Approx(by_model).epsilon(1e-12));
    }
  }
}

TEST_CASE("market instance json") {
  MarketInstance inst = testing::default_customer_instance();

  SECTION("round trip") {
    const nlohmann::json j = to_json(inst);
    const MarketInstance back = market_instance_from_json(j);
    CHECK(to_json(back) == j);
  }
  SECTION("field-path error on invariant violation") {
    nlohmann::json j = to_json(inst);
    j["models"][0]["encoding_speed"] = -1.0;
    CHECK_THROWS_WITH(market_instance_from_json(j),
                      Catch::Matchers::ContainsSubstring("models[0].encoding_speed"));
  }
  SECTION("speed ordering enforced") {
    nlohmann::json j = to_json(inst);
    j["models"][1]["encoding_speed"] = j["models"][0]["encoding_speed"];
    CHECK_THROWS_WITH(market_instance_from_json(j),
                      Catch::Matchers::ContainsSubstring("models[1].encoding_speed"));
  }
  SECTION("unknown key rejected") {
    nlohmann::json j = to_json(inst);
    j["surprise"] = 1;
    CHECK_THROWS_WITH(market_instance_from_json(j),
                      Catch::Matchers::ContainsSubstring("surprise"));
  }
  SECTION("missing field rejected") {
    nlohmann::json j = to_json(inst);
    j.erase("gamma");
    CHECK_THROWS_WITH(market_instance_from_json(j),
                      Catch::Matchers::ContainsSubstring("gamma"));
  }
  SECTION("adversarial mode requires positive worst-case energy") {
    nlohmann::json j = to_json(inst);
    j["customers"][0]["energy_deviation"] = 99.0;
    CHECK_THROWS_WITH(market_instance_from_json(j),
                      Catch::Matchers::ContainsSubstring("customers[0].energy_deviation"));
  }
}
