#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace scmarket {

/// Sign convention for the energy-budget deviation. Additive reads the
/// uncertainty set as printed (q = q_hat + h*theta, extra charge never hurts);
/// AdversarialReduction models partially charged devices (q = q_hat - h*theta),
/// which is the convention that gives the adversary a real energy move.
enum class EnergyMode { Additive, AdversarialReduction };

/// One rentable semantic-communication model. Larger index = more capable:
/// within an instance, encoding speed and compressibility both decrease
/// strictly with the index.
struct ScModel {
  int index = 0;              ///< 1-based model identity u
  double encoding_speed = 0;  ///< k_u, data-units per time-unit
  double compressibility = 0; ///< a_u, energy-scale factor (smaller = better)
  double base_charge = 0;     ///< H_u, fixed charge for renting
  double finetune_unit_cost = 0; ///< b2_u, per renting customer
};

struct Customer {
  int index = 0;                 ///< n, 1-based
  double nominal_distance = 0;   ///< d_hat, meters
  double nominal_energy = 0;     ///< q_hat, energy-units
  double distance_deviation = 0; ///< r_tilde, max distance deviation
  double energy_deviation = 0;   ///< theta_tilde, max energy deviation
  double noise_power = 0;        ///< N_n, watts at the associated base station
};

/// Linear rental price schedule beta_u = slope * u + offset.
struct PriceSchedule {
  double slope = 0;  ///< zeta, currency per time-unit per model-index
  double offset = 0; ///< eta_price, currency per time-unit

  double price(int model_index) const { return slope * model_index + offset; }
};

struct MarketInstance {
  std::vector<Customer> customers;
  std::vector<ScModel> models;
  double utility_coeff = 0;  ///< A, shared by all customers
  double energy_price = 0;   ///< b1, currency per energy-unit
  double ssl_cost = 0;       ///< b3, pretraining cost term per model
  double path_loss_exp = 0;  ///< epsilon
  double t_min = 0;          ///< minimum rent duration
  double t_max = 0;          ///< maximum rent duration
  double gamma = 0;          ///< distance-uncertainty budget
  double eta_budget = 0;     ///< energy-uncertainty budget
  EnergyMode energy_mode = EnergyMode::AdversarialReduction;

  int customer_count() const { return static_cast<int>(customers.size()); }
  int model_count() const { return static_cast<int>(models.size()); }

  /// Access by 1-based model index.
  const ScModel& model(int u) const { return models.at(static_cast<std::size_t>(u - 1)); }

  /// Checks every domain invariant; throws std::invalid_argument with a
  /// field-path message on the first violation.
  void validate() const;
};

/// An adversarial environment point: per-customer deviation fractions.
struct Realization {
  std::vector<double> g; ///< distance deviation fractions in [0,1]
  std::vector<double> h; ///< energy deviation fractions in [0,1]

  bool operator==(const Realization&) const = default;
};

inline Realization nominal_realization(int n) {
  return Realization{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
}

/// First-stage model choices plus rental durations for all customers.
struct CustomerDecision {
  std::vector<int> model_choice;  ///< psi_n, 1-based model index per customer
  std::vector<double> duration;   ///< tau_n per customer
};

struct SellerOutcome {
  double revenue = 0;
  double training_cost = 0;
  double profit = 0;
};

// ---------------------------------------------------------------------------
// Closed-form cost formulas
// ---------------------------------------------------------------------------

/// dBm -> watts.
inline double dbm_to_watts(double p_dbm) {
  return std::pow(10.0, (p_dbm - 30.0) / 10.0);
}

/// Transmission energy per data-unit: d^eps * noise * a.
inline double transmission_energy_per_bit(double d, double eps, double noise,
                                          double a) {
  if (d < 0) throw std::invalid_argument("transmission_energy_per_bit: d < 0");
  return std::pow(d, eps) * noise * a;
}

/// Cost of transmitting k*tau data-units at e_bit energy each: b1 * k*tau * e_bit.
inline double transmission_cost(double b1, double k, double tau, double e_bit) {
  return b1 * k * tau * e_bit;
}

/// Energy drained per time-unit of rental: k * d^eps * noise * a. The energy
/// budget constraint is energy_rate(...) * tau <= q.
inline double energy_rate(const ScModel& model, double d, double noise,
                          double eps) {
  return model.encoding_speed * std::pow(d, eps) * noise * model.compressibility;
}

/// Net rental cost R(psi, tau) = C_trans + tau*beta - A*ln(1 + k*tau).
/// Natural logarithm; the log base only rescales the utility coefficient.
inline double customer_net_cost(const ScModel& model, double beta, double tau,
                                double d, double noise,
                                const MarketInstance& inst) {
  const double e_bit =
      transmission_energy_per_bit(d, inst.path_loss_exp, noise, model.compressibility);
  const double c_trans = transmission_cost(inst.energy_price, model.encoding_speed, tau, e_bit);
  return c_trans + tau * beta -
         inst.utility_coeff * std::log1p(model.encoding_speed * tau);
}

/// Total customer-side profit -sum_n [H_psi + R_n] under realized distances d
/// and energy budgets q. Throws std::domain_error when some customer's
/// decision drains more energy than the realized budget allows.
inline double customer_total_profit(const CustomerDecision& dec,
                                    const std::vector<double>& d,
                                    const std::vector<double>& q,
                                    const MarketInstance& inst,
                                    const PriceSchedule& prices) {
  double cost = 0;
  for (int n = 0; n < inst.customer_count(); ++n) {
    const std::size_t i = static_cast<std::size_t>(n);
    const ScModel& model = inst.model(dec.model_choice[i]);
    const Customer& cust = inst.customers[i];
    const double tau = dec.duration[i];
    const double drain = energy_rate(model, d[i], cust.noise_power, inst.path_loss_exp) * tau;
    if (drain > q[i] * (1.0 + 1e-9) + 1e-12) {
      throw std::domain_error("customer_total_profit: energy budget violated for customer " +
                              std::to_string(cust.index));
    }
    cost += model.base_charge +
            customer_net_cost(model, prices.price(model.index), tau, d[i],
                              cust.noise_power, inst);
  }
  return -cost;
}

/// Number of customers whose choice is model u.
inline int rent_count(const CustomerDecision& dec, int u) {
  int count = 0;
  for (int psi : dec.model_choice) count += (psi == u);
  return count;
}

/// Seller-side cost of model u: b2_u * (renting customers) + b3. The SSL term
/// b3 is charged once per model, matching the sum over all models in the
/// seller objective.
inline double seller_model_cost(int u, const CustomerDecision& dec,
                                const MarketInstance& inst) {
  return inst.model(u).finetune_unit_cost * rent_count(dec, u) + inst.ssl_cost;
}

/// Seller revenue, training cost and profit at the given customer decisions.
/// A zero-duration decision is no rental: it contributes no revenue and
/// triggers no fine-tuning cost (this is what makes "all tau = 0" collapse to
/// profit = -U*b3).
inline SellerOutcome seller_profit(const CustomerDecision& dec,
                                   const PriceSchedule& prices,
                                   const MarketInstance& inst) {
  SellerOutcome out;
  CustomerDecision renters;
  for (std::size_t i = 0; i < dec.model_choice.size(); ++i) {
    if (dec.duration[i] > 0) {
      renters.model_choice.push_back(dec.model_choice[i]);
      renters.duration.push_back(dec.duration[i]);
      out.revenue += dec.duration[i] * prices.price(dec.model_choice[i]);
    }
  }
  for (int u = 1; u <= inst.model_count(); ++u) {
    out.training_cost += seller_model_cost(u, renters, inst);
  }
  out.profit = out.revenue - out.training_cost;
  return out;
}

// ---------------------------------------------------------------------------

inline void MarketInstance::validate() const {
  auto fail = [](const std::string& path, const std::string& what) {
    throw std::invalid_argument(path + ": " + what);
  };
  if (customers.empty()) fail("customers", "must be non-empty");
  if (models.empty()) fail("models", "must be non-empty");
  for (std::size_t i = 0; i < models.size(); ++i) {
    const std::string path = "models[" + std::to_string(i) + "]";
    const ScModel& m = models[i];
    if (m.index != static_cast<int>(i) + 1) fail(path + ".index", "must equal position + 1");
    if (!(m.encoding_speed > 0)) fail(path + ".encoding_speed", "must be > 0");
    if (!(m.compressibility > 0)) fail(path + ".compressibility", "must be > 0");
    if (m.base_charge < 0) fail(path + ".base_charge", "must be >= 0");
    if (m.finetune_unit_cost < 0) fail(path + ".finetune_unit_cost", "must be >= 0");
    if (i > 0) {
      if (!(m.encoding_speed < models[i - 1].encoding_speed))
        fail(path + ".encoding_speed", "must decrease strictly with the model index");
      if (!(m.compressibility < models[i - 1].compressibility))
        fail(path + ".compressibility", "must decrease strictly with the model index");
    }
  }
  for (std::size_t i = 0; i < customers.size(); ++i) {
    const std::string path = "customers[" + std::to_string(i) + "]";
    const Customer& c = customers[i];
    if (c.index != static_cast<int>(i) + 1) fail(path + ".index", "must equal position + 1");
    if (!(c.nominal_distance > 0)) fail(path + ".nominal_distance", "must be > 0");
    if (!(c.nominal_energy > 0)) fail(path + ".nominal_energy", "must be > 0");
    if (c.distance_deviation < 0) fail(path + ".distance_deviation", "must be >= 0");
    if (c.energy_deviation < 0) fail(path + ".energy_deviation", "must be >= 0");
    if (!(c.noise_power > 0)) fail(path + ".noise_power", "must be > 0");
    if (energy_mode == EnergyMode::AdversarialReduction &&
        !(c.nominal_energy - c.energy_deviation > 0)) {
      fail(path + ".energy_deviation",
           "worst-case energy budget must stay positive in AdversarialReduction mode");
    }
  }
  if (utility_coeff < 0) fail("utility_coeff", "must be >= 0");
  if (energy_price < 0) fail("energy_price", "must be >= 0");
  if (ssl_cost < 0) fail("ssl_cost", "must be >= 0");
  if (!(path_loss_exp >= 1)) fail("path_loss_exp", "must be >= 1");
  if (!(t_min >= 0)) fail("t_min", "must be >= 0");
  if (!(t_min < t_max)) fail("t_max", "must be > t_min");
  if (gamma < 0) fail("gamma", "must be >= 0");
  if (gamma > customer_count()) fail("gamma", "must be <= customer count");
  if (eta_budget < 0) fail("eta_budget", "must be >= 0");
  if (eta_budget > customer_count()) fail("eta_budget", "must be <= customer count");
}

/// Checks that the schedule prices every model in the instance positively.
inline void validate_prices(const PriceSchedule& prices, const MarketInstance& inst) {
  for (int u = 1; u <= inst.model_count(); ++u) {
    if (!(prices.price(u) > 0)) {
      throw std::invalid_argument("price schedule: beta_" + std::to_string(u) +
                                  " = " + std::to_string(prices.price(u)) +
                                  " must be > 0");
    }
  }
}

}  // namespace scmarket
