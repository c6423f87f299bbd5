#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "scmarket/market.hpp"
#include "scmarket/rng.hpp"
#include "scmarket/rsr.hpp"

namespace scmarket {

struct PricingConfig {
  double zeta_lo = 10.0;
  double zeta_hi = 1000.0;
  double step = 25.0;        ///< chi, ascent step on the price slope
  double fd_delta = 1.0;     ///< delta, half-width of the central difference
  int max_num = 150;         ///< total follower-iteration budget across starts
  int num_starts = 3;
  double offset = 1.0;       ///< eta_price, schedule intercept
  std::uint64_t seed = 0;    ///< drives the start-point jitter
  double start_jitter = 0.25; ///< jitter amplitude as a fraction of start spacing
  RsrOptions follower;       ///< settings for the customers' best response

  void validate() const {
    if (!(zeta_lo < zeta_hi)) throw std::invalid_argument("PricingConfig: zeta_lo must be < zeta_hi");
    if (!(step > 0)) throw std::invalid_argument("PricingConfig: step must be > 0");
    if (!(fd_delta > 0) || fd_delta >= (zeta_hi - zeta_lo) / 2)
      throw std::invalid_argument("PricingConfig: fd_delta must be in (0, (zeta_hi - zeta_lo)/2)");
    if (num_starts < 1) throw std::invalid_argument("PricingConfig: num_starts must be >= 1");
    if (max_num < 0) throw std::invalid_argument("PricingConfig: max_num must be >= 0");
    if (start_jitter < 0 || start_jitter > 0.5)
      throw std::invalid_argument("PricingConfig: start_jitter must be in [0, 0.5]");
  }
};

/// One follower evaluation observed by the ascent: iteration 0 is the
/// start-point evaluation, later iterations contribute the two probe points.
struct PriceEvaluation {
  int start_id = 0;
  int iteration = 0;
  double zeta = 0;
  double profit = 0;
};

struct PricingResult {
  double best_zeta = 0;
  double best_profit = -std::numeric_limits<double>::infinity();
  std::vector<PriceEvaluation> trace;
  long follower_calls = 0;
  CustomerDecision best_decisions;  ///< follower response at best_zeta
  double best_customer_objective = std::numeric_limits<double>::infinity();
};

/// Follower best response and the induced seller profit at a given slope.
struct FollowerResponse {
  CustomerDecision decisions;  ///< empty when no selection is robustly feasible
  double objective = std::numeric_limits<double>::infinity();  ///< min-max customer cost
  double profit = 0;           ///< seller profit
};

inline FollowerResponse follower_response(double zeta, const MarketInstance& inst,
                                          const PricingConfig& cfg) {
  const PriceSchedule prices{zeta, cfg.offset};
  FollowerResponse out;
  try {
    const RsrResult res = rsr(inst, prices, cfg.follower);
    if (std::isfinite(res.objective)) {
      out.decisions = CustomerDecision{res.selection, res.durations};
      out.objective = res.objective;
    }
  } catch (const NoFeasibleSelection&) {
    // Customers walk away; the seller still carries the pretraining cost.
  }
  out.profit = seller_profit(out.decisions, prices, inst).profit;
  return out;
}

/// Seller profit at a slope, with the customers responding via the robust
/// solver; durations are taken at the converged worst-case scenario.
inline std::pair<double, CustomerDecision> seller_profit_at(double zeta,
                                                            const MarketInstance& inst,
                                                            const PricingConfig& cfg) {
  if (zeta < cfg.zeta_lo || zeta > cfg.zeta_hi)
    throw std::invalid_argument("seller_profit_at: zeta outside the allowed range");
  const FollowerResponse r = follower_response(zeta, inst, cfg);
  return {r.profit, r.decisions};
}

/// Start points: evenly spaced over the range, plus a seed-driven jitter of
/// up to start_jitter of the spacing. A single start sits at the midpoint.
inline std::vector<double> imp_starts(const PricingConfig& cfg) {
  std::vector<double> starts;
  const int n = cfg.num_starts;
  const double width = cfg.zeta_hi - cfg.zeta_lo;
  for (int j = 0; j < n; ++j) {
    double base = n == 1 ? cfg.zeta_lo + width / 2
                         : cfg.zeta_lo + width * j / (n - 1);
    SplitMix64 rng(derive_stream(cfg.seed, "imp-start", static_cast<std::uint64_t>(j)));
    const double spacing = width / n;
    base += (rng.uniform() * 2 - 1) * spacing * cfg.start_jitter;
    starts.push_back(std::clamp(base, cfg.zeta_lo, cfg.zeta_hi));
  }
  return starts;
}

/// Finite-difference ascent over an arbitrary profit curve. The total
/// iteration budget is split evenly across starts; probe points are clamped
/// into the allowed range; the result is the best evaluated point. Exposed
/// separately so the ascent can be exercised on synthetic profit curves.
inline PricingResult imp_core(const std::function<double(double)>& profit_fn,
                              const PricingConfig& cfg,
                              const std::vector<double>& starts) {
  cfg.validate();
  PricingResult res;
  long calls = 0;
  auto evaluate = [&](int start_id, int iteration, double zeta) {
    const double p = profit_fn(zeta);
    ++calls;
    res.trace.push_back(PriceEvaluation{start_id, iteration, zeta, p});
    if (p > res.best_profit) {
      res.best_profit = p;
      res.best_zeta = zeta;
    }
    return p;
  };

  const int iters_per_start = cfg.max_num / static_cast<int>(starts.size());
  for (int j = 0; j < static_cast<int>(starts.size()); ++j) {
    double zeta = starts[static_cast<std::size_t>(j)];
    evaluate(j, 0, zeta);
    for (int it = 1; it <= iters_per_start; ++it) {
      const double z_plus = std::min(zeta + cfg.fd_delta, cfg.zeta_hi);
      const double z_minus = std::max(zeta - cfg.fd_delta, cfg.zeta_lo);
      const double p_plus = evaluate(j, it, z_plus);
      const double p_minus = evaluate(j, it, z_minus);
      const double gradient = (p_plus - p_minus) / (2 * cfg.fd_delta);
      zeta = std::clamp(zeta + cfg.step * gradient, cfg.zeta_lo, cfg.zeta_hi);
    }
  }
  res.follower_calls = calls;
  return res;
}

/// Iterative model pricing: multi-start central-difference ascent on the
/// schedule slope, with the customers best-responding at every probe.
/// follower_calls = 2 * (total iterations) + num_starts + 1 (the final +1
/// re-derives the response at the winning slope).
inline PricingResult imp(const MarketInstance& inst, const PricingConfig& cfg) {
  auto profit_fn = [&](double zeta) { return follower_response(zeta, inst, cfg).profit; };
  PricingResult res = imp_core(profit_fn, cfg, imp_starts(cfg));
  const FollowerResponse final_resp = follower_response(res.best_zeta, inst, cfg);
  ++res.follower_calls;
  res.best_profit = final_resp.profit;
  res.best_decisions = final_resp.decisions;
  res.best_customer_objective = final_resp.objective;
  return res;
}

/// Grid scan over a synthetic profit curve; see near_opt.
inline PricingResult near_opt_core(const std::function<double(double)>& profit_fn,
                                   int intervals, const PricingConfig& cfg) {
  cfg.validate();
  if (intervals < 1) throw std::invalid_argument("near_opt: intervals must be >= 1");
  PricingResult res;
  for (int i = 0; i <= intervals; ++i) {
    const double zeta = cfg.zeta_lo + (cfg.zeta_hi - cfg.zeta_lo) * i / intervals;
    const double p = profit_fn(zeta);
    res.trace.push_back(PriceEvaluation{0, i, zeta, p});
    if (p > res.best_profit) {
      res.best_profit = p;
      res.best_zeta = zeta;
    }
  }
  res.follower_calls = intervals + 1;
  return res;
}

/// Evaluation trace as CSV (start_id, iteration, zeta, profit).
inline std::string price_trace_csv(const PricingResult& res) {
  std::string out = "start_id,iteration,zeta,profit\n";
  char buf[128];
  for (const PriceEvaluation& e : res.trace) {
    std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g\n", e.start_id, e.iteration, e.zeta,
                  e.profit);
    out += buf;
  }
  return out;
}

/// Near-optimal baseline: evaluates the seller profit on the intervals+1
/// boundary points of the allowed range and keeps the best. Exactly
/// intervals + 1 follower solves; the winning response is kept from the scan.
inline PricingResult near_opt(const MarketInstance& inst, int intervals,
                              const PricingConfig& cfg) {
  cfg.validate();
  if (intervals < 1) throw std::invalid_argument("near_opt: intervals must be >= 1");
  PricingResult res;
  for (int i = 0; i <= intervals; ++i) {
    const double zeta = cfg.zeta_lo + (cfg.zeta_hi - cfg.zeta_lo) * i / intervals;
    const FollowerResponse r = follower_response(zeta, inst, cfg);
    res.trace.push_back(PriceEvaluation{0, i, zeta, r.profit});
    if (r.profit > res.best_profit) {
      res.best_profit = r.profit;
      res.best_zeta = zeta;
      res.best_decisions = r.decisions;
      res.best_customer_objective = r.objective;
    }
  }
  res.follower_calls = intervals + 1;
  return res;
}

}  // namespace scmarket
