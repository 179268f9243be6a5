#ifndef RCSN_CONFIG_HPP
#define RCSN_CONFIG_HPP

#include "rcsn/types.hpp"

#include <cmath>
#include <string>
#include <variant>

namespace rcsn {

/// Regularization schedules for the direction solve.
namespace rho {

struct Constant {
    double value = 0.0;
};

/// rho_k = ||w_0|| / divisor^floor(k/period) + zeta
struct Decreasing {
    double divisor = 10.0;
    int period = 50;
};

/// rho_k = c * ||w_k|| + zeta, with the descent threshold also scaled
/// as zeta_k = c * ||w_k||.
struct AdaptiveNorm {
    double c = 1.0;
};

}  // namespace rho

using RhoStrategy = std::variant<rho::Constant, rho::Decreasing, rho::AdaptiveNorm>;

namespace stepsize {

struct Constant {
    double tau_bar = 50.0;
};

/// Grows the trial stepsize by gamma after two consecutive unshrunk
/// acceptances, otherwise reuses the last accepted value floored at t_min.
struct SelfAdaptive {
    double gamma = 2.0;
    double tau_bar0 = 1.0;
};

}  // namespace stepsize

using StepsizeConfig = std::variant<stepsize::Constant, stepsize::SelfAdaptive>;

struct SolverConfig {
    double beta = 0.2;        // backtracking shrink factor, in (0,1)
    double sigma = 0.2;       // Armijo slope fraction, in (0,1)
    double zeta = 1e-8;       // descent-certificate threshold
    double t_min = 1e-8;      // lower bound for trial stepsizes
    double rho_max = 1e12;
    RhoStrategy rho_strategy = rho::Constant{0.0};
    double grad_tol = 1e-8;   // stationarity threshold on ||w||
    int max_iters = 1000;
    double tau_floor = 1e-14; // linesearch abort threshold
};

inline void validate(const SolverConfig& c) {
    auto fail = [](const std::string& msg) { throw ConfigError(msg); };
    if (!(c.beta > 0.0 && c.beta < 1.0))
        fail("beta must lie in (0,1), got " + std::to_string(c.beta));
    if (!(c.sigma > 0.0 && c.sigma < 1.0))
        fail("sigma must lie in (0,1), got " + std::to_string(c.sigma));
    if (!(c.zeta > 0.0)) fail("zeta must be positive, got " + std::to_string(c.zeta));
    if (!(c.t_min > 0.0)) fail("t_min must be positive, got " + std::to_string(c.t_min));
    if (!(c.rho_max > 0.0)) fail("rho_max must be positive, got " + std::to_string(c.rho_max));
    if (!(c.grad_tol > 0.0)) fail("grad_tol must be positive, got " + std::to_string(c.grad_tol));
    if (c.max_iters < 1) fail("max_iters must be at least 1, got " + std::to_string(c.max_iters));
    if (!(c.tau_floor > 0.0 && c.tau_floor < c.t_min))
        fail("tau_floor must lie in (0, t_min), got " + std::to_string(c.tau_floor));
}

inline void validate(const StepsizeConfig& s, const SolverConfig& c) {
    if (const auto* k = std::get_if<stepsize::Constant>(&s)) {
        if (!(k->tau_bar >= c.t_min))
            throw ConfigError("constant trial stepsize must be >= t_min, got " +
                              std::to_string(k->tau_bar));
    } else if (const auto* a = std::get_if<stepsize::SelfAdaptive>(&s)) {
        if (!(a->gamma > 1.0))
            throw ConfigError("self-adaptive gamma must exceed 1, got " + std::to_string(a->gamma));
        if (!(a->tau_bar0 > 0.0))
            throw ConfigError("initial trial stepsize must be positive, got " +
                              std::to_string(a->tau_bar0));
    }
}

}  // namespace rcsn

#endif  // RCSN_CONFIG_HPP
