#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "scmarket/market.hpp"

namespace scmarket {

/// Shortest round-trip decimal representation; keeps CSV output byte-stable.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string to_string(EnergyMode mode) {
  return mode == EnergyMode::Additive ? "Additive" : "AdversarialReduction";
}

inline EnergyMode energy_mode_from_string(const std::string& s, const std::string& path) {
  if (s == "Additive") return EnergyMode::Additive;
  if (s == "AdversarialReduction") return EnergyMode::AdversarialReduction;
  throw std::invalid_argument(path + ": unknown energy mode '" + s +
                              "' (expected Additive or AdversarialReduction)");
}

namespace jsonio {

/// Rejects keys outside the allowed set; errors carry the config path.
inline void check_keys(const nlohmann::json& j, std::initializer_list<const char*> allowed,
                       const std::string& path) {
  if (!j.is_object()) throw std::invalid_argument(path + ": expected an object");
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* key : allowed)
      if (item.key() == key) known = true;
    if (!known) throw std::invalid_argument(path + "." + item.key() + ": unknown key");
  }
}

inline const nlohmann::json& require(const nlohmann::json& j, const char* key,
                                     const std::string& path) {
  const auto it = j.find(key);
  if (it == j.end()) throw std::invalid_argument(path + "." + key + ": missing");
  return *it;
}

inline double get_number(const nlohmann::json& j, const char* key, const std::string& path) {
  const nlohmann::json& v = require(j, key, path);
  if (!v.is_number()) throw std::invalid_argument(path + "." + key + ": expected a number");
  return v.get<double>();
}

inline double get_number_or(const nlohmann::json& j, const char* key, const std::string& path,
                            double fallback) {
  const auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_number()) throw std::invalid_argument(path + "." + key + ": expected a number");
  return it->get<double>();
}

inline int get_int_or(const nlohmann::json& j, const char* key, const std::string& path,
                      int fallback) {
  const auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_number_integer()) throw std::invalid_argument(path + "." + key + ": expected an integer");
  return it->get<int>();
}

inline bool get_bool_or(const nlohmann::json& j, const char* key, const std::string& path,
                        bool fallback) {
  const auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_boolean()) throw std::invalid_argument(path + "." + key + ": expected a boolean");
  return it->get<bool>();
}

}  // namespace jsonio

inline nlohmann::json to_json(const MarketInstance& inst) {
  nlohmann::json j;
  j["customers"] = nlohmann::json::array();
  for (const Customer& c : inst.customers) {
    j["customers"].push_back({{"index", c.index},
                              {"nominal_distance", c.nominal_distance},
                              {"nominal_energy", c.nominal_energy},
                              {"distance_deviation", c.distance_deviation},
                              {"energy_deviation", c.energy_deviation},
                              {"noise_power", c.noise_power}});
  }
  j["models"] = nlohmann::json::array();
  for (const ScModel& m : inst.models) {
    j["models"].push_back({{"index", m.index},
                           {"encoding_speed", m.encoding_speed},
                           {"compressibility", m.compressibility},
                           {"base_charge", m.base_charge},
                           {"finetune_unit_cost", m.finetune_unit_cost}});
  }
  j["utility_coeff"] = inst.utility_coeff;
  j["energy_price"] = inst.energy_price;
  j["ssl_cost"] = inst.ssl_cost;
  j["path_loss_exp"] = inst.path_loss_exp;
  j["t_min"] = inst.t_min;
  j["t_max"] = inst.t_max;
  j["gamma"] = inst.gamma;
  j["eta_budget"] = inst.eta_budget;
  j["energy_mode"] = to_string(inst.energy_mode);
  return j;
}

/// Parses and fully validates a MarketInstance; any violation is reported
/// with the offending field path.
inline MarketInstance market_instance_from_json(const nlohmann::json& j,
                                                const std::string& path = "instance") {
  using namespace jsonio;
  check_keys(j,
             {"customers", "models", "utility_coeff", "energy_price", "ssl_cost",
              "path_loss_exp", "t_min", "t_max", "gamma", "eta_budget", "energy_mode"},
             path);
  MarketInstance inst;
  const nlohmann::json& customers = require(j, "customers", path);
  if (!customers.is_array()) throw std::invalid_argument(path + ".customers: expected an array");
  for (std::size_t i = 0; i < customers.size(); ++i) {
    const std::string cpath = path + ".customers[" + std::to_string(i) + "]";
    const nlohmann::json& c = customers[i];
    check_keys(c,
               {"index", "nominal_distance", "nominal_energy", "distance_deviation",
                "energy_deviation", "noise_power"},
               cpath);
    Customer cust;
    cust.index = static_cast<int>(get_number(c, "index", cpath));
    cust.nominal_distance = get_number(c, "nominal_distance", cpath);
    cust.nominal_energy = get_number(c, "nominal_energy", cpath);
    cust.distance_deviation = get_number(c, "distance_deviation", cpath);
    cust.energy_deviation = get_number(c, "energy_deviation", cpath);
    cust.noise_power = get_number(c, "noise_power", cpath);
    inst.customers.push_back(cust);
  }
  const nlohmann::json& models = require(j, "models", path);
  if (!models.is_array()) throw std::invalid_argument(path + ".models: expected an array");
  for (std::size_t i = 0; i < models.size(); ++i) {
    const std::string mpath = path + ".models[" + std::to_string(i) + "]";
    const nlohmann::json& m = models[i];
    check_keys(m, {"index", "encoding_speed", "compressibility", "base_charge",
                   "finetune_unit_cost"},
               mpath);
    ScModel model;
    model.index = static_cast<int>(get_number(m, "index", mpath));
    model.encoding_speed = get_number(m, "encoding_speed", mpath);
    model.compressibility = get_number(m, "compressibility", mpath);
    model.base_charge = get_number(m, "base_charge", mpath);
    model.finetune_unit_cost = get_number(m, "finetune_unit_cost", mpath);
    inst.models.push_back(model);
  }
  inst.utility_coeff = get_number(j, "utility_coeff", path);
  inst.energy_price = get_number(j, "energy_price", path);
  inst.ssl_cost = get_number(j, "ssl_cost", path);
  inst.path_loss_exp = get_number(j, "path_loss_exp", path);
  inst.t_min = get_number(j, "t_min", path);
  inst.t_max = get_number(j, "t_max", path);
  inst.gamma = get_number(j, "gamma", path);
  inst.eta_budget = get_number(j, "eta_budget", path);
  const nlohmann::json& mode = require(j, "energy_mode", path);
  if (!mode.is_string()) throw std::invalid_argument(path + ".energy_mode: expected a string");
  inst.energy_mode = energy_mode_from_string(mode.get<std::string>(), path + ".energy_mode");

  try {
    inst.validate();
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + "." + e.what());
  }
  return inst;
}

}  // namespace scmarket
