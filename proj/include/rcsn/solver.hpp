#ifndef RCSN_SOLVER_HPP
#define RCSN_SOLVER_HPP

#include "rcsn/config.hpp"
#include "rcsn/direction.hpp"
#include "rcsn/oracle.hpp"
#include "rcsn/stepsize.hpp"
#include "rcsn/types.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <utility>

namespace rcsn {

struct BacktrackResult {
    bool ok = false;
    double tau = 0.0;
    int backtracks = 0;
};

/// Armijo backtracking: largest tau in {tau_bar * beta^i} with
/// phi(x + tau d) <= phi(x) + sigma * tau * <w,d>. A non-finite trial value
/// never satisfies the test (trial points are not solver state). Fails when
/// tau would drop below tau_floor.
inline BacktrackResult backtrack_armijo(const std::function<double(const Vector&)>& phi,
                                        const Vector& x, const Vector& d, double w_dot_d,
                                        double phi_x, double tau_bar, const SolverConfig& config) {
    BacktrackResult out;
    double tau = std::isfinite(tau_bar) ? tau_bar : 1e100;
    while (tau >= config.tau_floor) {
        const double trial = phi(x + tau * d);
        if (std::isfinite(trial) && trial <= phi_x + config.sigma * tau * w_dot_d) {
            out.ok = true;
            out.tau = tau;
            return out;
        }
        tau *= config.beta;
        ++out.backtracks;
    }
    return out;
}

/// Spec form over a difference oracle; requires the descent certificate to
/// hold for (w, d) before entering the linesearch.
inline BacktrackResult backtrack(const DifferenceOracle& oracle, const Vector& x, const Vector& d,
                                 const Vector& w, double tau_bar, const SolverConfig& config) {
    auto phi = [&](const Vector& p) { return oracle.g_value(p) - oracle.h_value(p); };
    return backtrack_armijo(phi, x, d, w.dot(d), phi(x), tau_bar, config);
}

struct RunOptions {
    std::optional<double> target_phi;  // stop as soon as phi <= target_phi
};

namespace detail {

/// Problem hooks for the damped semi-Newton loop. `phi` may return NaN/Inf
/// (the linesearch rejects such trials); `direction` owns the regularization
/// policy and reports the certificate threshold it used.
struct LoopProblem {
    std::function<double(const Vector&)> phi;
    std::function<Vector(const Vector&)> subgrad;
    std::function<DirectionResult(const Vector&, const Vector&, int, double)> direction;
};

inline Trace run_loop(const LoopProblem& problem, const Vector& x0, const SolverConfig& config,
                      const StepsizeConfig& stepsize_config, const RunOptions& options) {
    validate(config);
    validate(stepsize_config, config);

    const auto start = std::chrono::steady_clock::now();
    auto elapsed_ns = [&] {
        return std::chrono::duration_cast<std::chrono::nanoseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    };

    Trace trace;
    Vector x = x0;
    double phi_x = problem.phi(x);
    if (!std::isfinite(phi_x))
        throw NonFiniteValue("objective is not finite at the starting point");

    TrialStepsize stepsize(stepsize_config, config.t_min);
    double w0_norm = 0.0;

    auto record = [&](int k, double w_norm, double d_norm, double tau, double rho,
                      int backtracks) {
        trace.records.push_back(
            {k, x, phi_x, w_norm, d_norm, tau, rho, backtracks, elapsed_ns()});
    };

    for (int k = 0;; ++k) {
        Vector w = problem.subgrad(x);
        if (!w.allFinite()) {
            record(k, std::numeric_limits<double>::quiet_NaN(), 0, 0, 0, 0);
            trace.status = Status::NonFiniteValue;
            break;
        }
        const double w_norm = w.norm();
        if (k == 0) w0_norm = w_norm;

        if (options.target_phi && phi_x <= *options.target_phi) {
            record(k, w_norm, 0, 0, 0, 0);
            trace.status = Status::TargetReached;
            break;
        }
        if (w_norm <= config.grad_tol) {
            record(k, w_norm, 0, 0, 0, 0);
            trace.status = Status::Stationary;
            break;
        }
        if (k >= config.max_iters) {
            record(k, w_norm, 0, 0, 0, 0);
            trace.status = Status::MaxIterations;
            break;
        }

        DirectionResult dir = problem.direction(x, w, k, w0_norm);
        if (!dir.ok || !dir.d.allFinite()) {
            record(k, w_norm, 0, 0, dir.rho, 0);
            trace.status = dir.d.allFinite() ? Status::DirectionFailure : Status::NonFiniteValue;
            break;
        }

        const double tau_bar = stepsize.next_trial();
        BacktrackResult ls =
            backtrack_armijo(problem.phi, x, dir.d, w.dot(dir.d), phi_x, tau_bar, config);
        if (!ls.ok) {
            record(k, w_norm, dir.d.norm(), 0, dir.rho, ls.backtracks);
            trace.status = Status::LinesearchFailure;
            break;
        }

        const Vector x_next = x + ls.tau * dir.d;
        const double phi_next = problem.phi(x_next);
        if (!(phi_next < phi_x)) {
            // Accepted step made no progress at floating-point resolution.
            record(k, w_norm, dir.d.norm(), ls.tau, dir.rho, ls.backtracks);
            trace.status = Status::LinesearchFailure;
            break;
        }

        record(k, w_norm, dir.d.norm(), ls.tau, dir.rho, ls.backtracks);
        stepsize.record(tau_bar, ls.tau);
        x = x_next;
        phi_x = phi_next;
    }

    trace.final_x = x;
    return trace;
}

}  // namespace detail

/// Regularized coderivative-based damped semi-Newton method for phi = g - h.
/// Directions solve (A_k + rho_k I) d = -w_k for an oracle-selected
/// generalized-Hessian element A_k, with rho escalation until the descent
/// certificate <w,d> <= -zeta ||d||^2 holds, then Armijo backtracking.
inline Trace run(const DifferenceOracle& oracle, const Vector& x0, const SolverConfig& config,
                 const StepsizeConfig& stepsize_config = stepsize::Constant{},
                 const RunOptions& options = {}) {
    check_dim(oracle, x0);
    detail::LoopProblem problem;
    problem.phi = [&oracle](const Vector& p) { return oracle.g_value(p) - oracle.h_value(p); };
    problem.subgrad = [&oracle](const Vector& p) { return subgradient(oracle, p); };
    problem.direction = [&oracle, &config](const Vector& x, const Vector& w, int k,
                                           double w0_norm) {
        const Matrix a = oracle.g_hess_element(x);
        if (!a.allFinite()) {
            DirectionResult bad;
            bad.d = Vector::Constant(x.size(), std::numeric_limits<double>::quiet_NaN());
            return bad;
        }
        return escalate_rho(a, w, config, k, w0_norm);
    };
    return detail::run_loop(problem, x0, config, stepsize_config, options);
}

}  // namespace rcsn

#endif  // RCSN_SOLVER_HPP
