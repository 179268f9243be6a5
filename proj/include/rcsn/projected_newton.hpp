#ifndef RCSN_PROJECTED_NEWTON_HPP
#define RCSN_PROJECTED_NEWTON_HPP

#include "rcsn/envelope.hpp"
#include "rcsn/solver.hpp"

#include <memory>
#include <optional>
#include <utility>

namespace rcsn {

/// One projected-like Newton step for min f over C (psi = indicator of C):
/// w = (I/lambda - hess f(x)) (x - P_C(x - lambda grad f(x))), and d solving
/// (hess f(x) + I/lambda) d = -w. The system matrix is positive definite for
/// lambda < 1/L_f, which also makes d a descent direction.
inline std::pair<Vector, Vector> pn_step(const CompositeProblem& p, const Vector& x) {
    const Vector y = x - p.lambda * p.f_grad(x);
    const Vector z = x - p.psi.prox(y, p.lambda);
    const Matrix hess = p.f_hess(x);
    const Vector w = z / p.lambda - hess * z;
    if (w.squaredNorm() == 0.0) return {w, Vector::Zero(x.size())};
    const Vector d =
        solve_direction(hess + Matrix::Identity(p.dim, p.dim) / p.lambda, 0.0, w);
    return {w, d};
}

/// Projected-like Newton method over the forward-backward envelope of
/// f + delta_C. Shares the descent loop (linesearch, stopping, trace layout)
/// with the difference-programming solver; the envelope value is evaluated
/// through its difference decomposition.
inline Trace pn_run(const CompositeProblem& p, const Vector& x0, const SolverConfig& config,
                    const StepsizeConfig& stepsize_config = stepsize::Constant{},
                    const RunOptions& options = {}) {
    validate(p);
    const DifferenceOracle fbe = fbe_difference_oracle(p);

    // hess f is constant for quadratic objectives; factorize the Newton system once.
    std::shared_ptr<Eigen::LDLT<Matrix>> cached;
    if (p.hess_constant) {
        const Matrix m = p.f_hess(Vector::Zero(p.dim)) + Matrix::Identity(p.dim, p.dim) / p.lambda;
        cached = std::make_shared<Eigen::LDLT<Matrix>>(m);
        if (cached->info() != Eigen::Success)
            throw SingularSystem("constant Newton system failed to factorize");
    }

    detail::LoopProblem problem;
    problem.phi = [fbe](const Vector& x) { return fbe.g_value(x) - fbe.h_value(x); };
    problem.subgrad = [p](const Vector& x) {
        const Vector y = x - p.lambda * p.f_grad(x);
        const Vector z = x - p.psi.prox(y, p.lambda);
        return Vector(z / p.lambda - p.f_hess(x) * z);
    };
    problem.direction = [p, cached, &config](const Vector& x, const Vector& w, int,
                                             double) {
        DirectionResult out;
        out.rho = 0.0;
        out.zeta = config.zeta;
        if (cached) {
            out.d = cached->solve(-w);
            const Matrix m =
                p.f_hess(x) + Matrix::Identity(p.dim, p.dim) / p.lambda;
            out.d += cached->solve(-w - m * out.d);
        } else {
            out.d = solve_direction(
                p.f_hess(x) + Matrix::Identity(p.dim, p.dim) / p.lambda, 0.0, w);
        }
        out.ok = out.d.allFinite() && descent_certificate(w, out.d, out.zeta);
        return out;
    };
    return detail::run_loop(problem, x0, config, stepsize_config, options);
}

/// Fixed-point residual ||x - P_C(x - lambda grad f(x))||; zero exactly at
/// points satisfying the projected stationarity condition.
inline double fixed_point_residual(const CompositeProblem& p, const Vector& x) {
    return (x - p.psi.prox(x - p.lambda * p.f_grad(x), p.lambda)).norm();
}

/// The feasible point behind the final iterate: the backward projection step
/// evaluated at x. Exactly feasible for indicator-type psi.
inline Vector backward_point(const CompositeProblem& p, const Vector& x) {
    return p.psi.prox(x - p.lambda * p.f_grad(x), p.lambda);
}

}  // namespace rcsn

#endif  // RCSN_PROJECTED_NEWTON_HPP
