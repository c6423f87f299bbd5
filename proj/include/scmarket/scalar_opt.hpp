#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>

#include "scmarket/market.hpp"

namespace scmarket {

/// One customer's rental-duration problem for a fixed model and realized
/// environment: minimize m*tau - A*ln(1 + k*tau) over
/// [t_min, min(t_max, q/e)], where e*tau <= q is the energy constraint.
/// e == 0 (zero distance or zero drain) means the energy constraint is
/// vacuous and the cap is unbounded.
struct DurationProblem {
  double marginal_cost = 0;  ///< m = b1*k*d^eps*N*a + beta, > 0
  double utility_coeff = 0;  ///< A >= 0
  double speed = 0;          ///< k > 0
  double t_min = 0;
  double t_max = 0;
  double energy_rate = 0;    ///< e = k*d^eps*N*a >= 0
  double energy_budget = 0;  ///< q >= 0

  /// tau_bar = q/e; unbounded (nullopt) when the drain rate is zero.
  std::optional<double> energy_cap() const {
    if (energy_rate > 0) return energy_budget / energy_rate;
    return std::nullopt;
  }

  /// Upper end of the feasible duration interval.
  double upper_limit() const {
    const auto cap = energy_cap();
    return cap ? std::min(t_max, *cap) : t_max;
  }

  double objective(double tau) const {
    return marginal_cost * tau - utility_coeff * std::log1p(speed * tau);
  }

  void validate() const {
    if (!(marginal_cost > 0)) throw std::invalid_argument("DurationProblem: marginal_cost must be > 0");
    if (!(speed > 0)) throw std::invalid_argument("DurationProblem: speed must be > 0");
    if (utility_coeff < 0) throw std::invalid_argument("DurationProblem: utility_coeff must be >= 0");
    if (t_min > t_max) throw std::invalid_argument("DurationProblem: t_min must be <= t_max");
    if (energy_rate < 0) throw std::invalid_argument("DurationProblem: energy_rate must be >= 0");
    if (energy_budget < 0) throw std::invalid_argument("DurationProblem: energy_budget must be >= 0");
  }
};

inline DurationProblem make_duration_problem(const MarketInstance& inst,
                                             const Customer& cust,
                                             const ScModel& model, double beta,
                                             double d, double q) {
  const double e = energy_rate(model, d, cust.noise_power, inst.path_loss_exp);
  return DurationProblem{inst.energy_price * e + beta,
                         inst.utility_coeff,
                         model.encoding_speed,
                         inst.t_min,
                         inst.t_max,
                         e,
                         q};
}

struct DurationOptimum {
  double tau = 0;
  double value = 0;
};

/// Exact minimizer of the duration problem. The objective is convex
/// (linear plus -log), so the optimum is the stationary point A/m - 1/k
/// projected onto the feasible interval. Returns nullopt when even t_min
/// violates the energy budget (the feasibility-cut case).
inline std::optional<DurationOptimum> optimal_duration(const DurationProblem& prob) {
  const double hi = prob.upper_limit();
  if (prob.t_min > hi) return std::nullopt;
  const double stationary = prob.utility_coeff / prob.marginal_cost - 1.0 / prob.speed;
  const double tau = std::clamp(stationary, prob.t_min, hi);
  return DurationOptimum{tau, prob.objective(tau)};
}

/// Golden-section minimization of a unimodal scalar function on [lo, hi].
/// Validation oracle for optimal_duration; not a performance path. The
/// argument resolution of any comparison-based search is limited to about
/// sqrt(eps) of the working precision on flat objectives, so Real can be
/// widened where that matters.
template <class Real, class F>
std::pair<Real, Real> golden_section_min(F&& f, Real lo, Real hi, Real tol) {
  if (lo > hi) throw std::invalid_argument("golden_section_min: lo > hi");
  if (!(tol > 0)) throw std::invalid_argument("golden_section_min: tol must be > 0");
  const Real invphi = (std::sqrt(Real(5)) - Real(1)) / Real(2);
  Real a = lo, b = hi;
  Real c = b - invphi * (b - a);
  Real d = a + invphi * (b - a);
  Real fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  // A minimizer at an interval end sits exactly on a or b; the midpoint
  // alone would be half a tolerance off with a linear value penalty.
  Real best_x = a, best_f = f(a);
  for (Real x : {(a + b) / Real(2), b}) {
    const Real fx = f(x);
    if (fx < best_f) {
      best_f = fx;
      best_x = x;
    }
  }
  return {best_x, best_f};
}

/// Lagrange multipliers for the three duration-problem constraints:
/// lambda for e*tau - q <= 0, mu for tau - t_max <= 0, theta for
/// t_min - tau <= 0.
struct Multipliers {
  double lambda = 0;
  double mu = 0;
  double theta = 0;
};

struct KktResiduals {
  double stationarity = 0;       ///< |m + lambda*e + mu - theta - A*k/(1+k*tau)|
  double energy_slackness = 0;   ///< |lambda * (e*tau - q)|
  double upper_slackness = 0;    ///< |mu * (tau - t_max)|
  double lower_slackness = 0;    ///< |theta * (t_min - tau)|

  double max_abs() const {
    return std::max({stationarity, energy_slackness, upper_slackness, lower_slackness});
  }
};

inline KktResiduals kkt_residuals(const DurationProblem& prob, double tau,
                                  const Multipliers& mult) {
  if (mult.lambda < 0 || mult.mu < 0 || mult.theta < 0) {
    throw std::invalid_argument("kkt_residuals: multipliers must be >= 0");
  }
  KktResiduals r;
  const double grad = prob.marginal_cost -
                      prob.utility_coeff * prob.speed / (1.0 + prob.speed * tau);
  r.stationarity = std::abs(grad + mult.lambda * prob.energy_rate + mult.mu - mult.theta);
  r.energy_slackness = std::abs(mult.lambda * (prob.energy_rate * tau - prob.energy_budget));
  r.upper_slackness = std::abs(mult.mu * (tau - prob.t_max));
  r.lower_slackness = std::abs(mult.theta * (prob.t_min - tau));
  return r;
}

/// Reconstructs multipliers certifying optimality of tau. Meaningful only
/// when tau actually solves the problem; for any other tau the residuals of
/// kkt_residuals expose the mismatch.
inline Multipliers recover_multipliers(const DurationProblem& prob, double tau) {
  Multipliers mult;
  const double slack = prob.utility_coeff * prob.speed / (1.0 + prob.speed * tau) -
                       prob.marginal_cost;
  if (slack > 0) {
    // An upper bound binds; attribute to whichever is tighter at tau.
    const auto cap = prob.energy_cap();
    if (cap && *cap <= prob.t_max) {
      mult.lambda = slack / prob.energy_rate;
    } else {
      mult.mu = slack;
    }
  } else if (slack < 0) {
    mult.theta = -slack;
  }
  return mult;
}

/// Lagrange dual function g(lambda, mu, theta) = inf_tau L(tau, ...), the
/// infimum taken over the domain of the objective (tau > -1/k when A > 0).
/// Returns -infinity when the dual is unbounded below.
inline double dual_value(const DurationProblem& prob, const Multipliers& mult) {
  const double c = prob.marginal_cost + mult.lambda * prob.energy_rate +
                   mult.mu - mult.theta;
  const double base = -mult.lambda * prob.energy_budget - mult.mu * prob.t_max +
                      mult.theta * prob.t_min;
  const double a = prob.utility_coeff;
  if (a == 0) {
    return c == 0 ? base : -std::numeric_limits<double>::infinity();
  }
  if (c <= 0) return -std::numeric_limits<double>::infinity();
  // Minimizer of c*tau - A*ln(1+k*tau) is tau = A/c - 1/k, always > -1/k.
  return a - c / prob.speed - a * std::log(a * prob.speed / c) + base;
}

}  // namespace scmarket
