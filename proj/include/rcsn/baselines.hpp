#ifndef RCSN_BASELINES_HPP
#define RCSN_BASELINES_HPP

#include "rcsn/config.hpp"
#include "rcsn/envelope.hpp"
#include "rcsn/prox.hpp"
#include "rcsn/solver.hpp"
#include "rcsn/stepsize.hpp"
#include "rcsn/types.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <memory>
#include <optional>
#include <utility>

namespace rcsn {

/// DC problem phi = g - h with both parts convex. The g-subproblem
/// argmin_x { g(x) - <v,x> } must be supplied (closed form, cached linear
/// solve, or an inner solver); subproblem_residual reports its first-order
/// optimality residual for verification.
struct DcaProblem {
    int dim = 0;
    std::function<double(const Vector&)> g_value;
    std::function<double(const Vector&)> h_value;
    std::function<Vector(const Vector&)> h_subgrad;
    std::function<Vector(const Vector&, const Vector&)> g_argmin_linear;  // (v, warm start)
    std::function<double(const Vector&, const Vector&)> subproblem_residual;  // (x*, v)

    double phi(const Vector& x) const { return g_value(x) - h_value(x); }
};

struct DcaOptions {
    double stop_tol = 1e-4;  // threshold on the movement ratio er
    int max_iters = 20000;
    std::optional<double> target_phi;
};

struct BdcaOptions {
    DcaOptions dca;
    double sigma = 0.2;
    double beta = 0.2;
    double tau_floor = 1e-14;
    double t_min = 1e-6;
    StepsizeConfig stepsize = stepsize::SelfAdaptive{4.0, 1.0};
};

namespace detail {

inline double movement_ratio(const Vector& x, const Vector& x_next) {
    const double step = (x_next - x).norm();
    const double base = x.norm();
    return base > 1.0 ? step / base : step;
}

inline std::int64_t ns_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() -
                                                                t0)
        .count();
}

}  // namespace detail

/// Classical DCA: x_{k+1} = argmin { g(x) - <v_k, x> }, v_k in the
/// subdifferential of h at x_k; stops when the movement ratio er drops below
/// stop_tol. Records only strictly decreasing steps.
inline Trace dca_run(const DcaProblem& problem, const Vector& x0, const DcaOptions& options = {}) {
    if (!problem.g_argmin_linear) throw SubproblemFailure("no g-subproblem solver supplied");
    const auto t0 = std::chrono::steady_clock::now();

    Trace trace;
    Vector x = x0;
    double phi_x = problem.phi(x);
    if (!std::isfinite(phi_x)) throw NonFiniteValue("objective not finite at starting point");

    auto record = [&](int k, double er, double step, double tau, int bt) {
        trace.records.push_back({k, x, phi_x, er, step, tau, 0.0, bt, detail::ns_since(t0)});
    };

    for (int k = 0;; ++k) {
        if (options.target_phi && phi_x <= *options.target_phi) {
            record(k, 0.0, 0.0, 0.0, 0);
            trace.status = Status::TargetReached;
            break;
        }
        if (k >= options.max_iters) {
            record(k, 0.0, 0.0, 0.0, 0);
            trace.status = Status::MaxIterations;
            break;
        }
        const Vector v = problem.h_subgrad(x);
        const Vector x_next = problem.g_argmin_linear(v, x);
        if (!x_next.allFinite()) {
            record(k, 0.0, 0.0, 0.0, 0);
            trace.status = Status::NonFiniteValue;
            break;
        }
        const double er = detail::movement_ratio(x, x_next);
        const double phi_next = problem.phi(x_next);
        if (!(phi_next < phi_x)) {
            // No representable progress; er decides whether this is convergence.
            record(k, er, 0.0, 0.0, 0);
            trace.status = er <= options.stop_tol ? Status::Stationary : Status::LinesearchFailure;
            break;
        }
        record(k, er, (x_next - x).norm(), 1.0, 0);
        x = x_next;
        phi_x = phi_next;
        if (er <= options.stop_tol) {
            record(k + 1, 0.0, 0.0, 0.0, 0);
            trace.status = Status::Stationary;
            break;
        }
    }
    trace.final_x = x;
    return trace;
}

/// Boosted DCA: after each DCA point y_k, backtrack along d_k = y_k - x_k
/// starting from the self-adaptive trial stepsize, accepting
/// phi(y + tau d) <= phi(y) - sigma tau^2 ||d||^2; tau = 0 (plain DCA step)
/// when the linesearch fails. Requires smooth strongly convex g.
inline Trace bdca_run(const DcaProblem& problem, const Vector& x0,
                      const BdcaOptions& options = {}) {
    if (!problem.g_argmin_linear) throw SubproblemFailure("no g-subproblem solver supplied");
    const auto t0 = std::chrono::steady_clock::now();

    Trace trace;
    Vector x = x0;
    double phi_x = problem.phi(x);
    if (!std::isfinite(phi_x)) throw NonFiniteValue("objective not finite at starting point");
    TrialStepsize stepsize(options.stepsize, options.t_min);

    auto record = [&](int k, double er, double step, double tau, int bt) {
        trace.records.push_back({k, x, phi_x, er, step, tau, 0.0, bt, detail::ns_since(t0)});
    };

    for (int k = 0;; ++k) {
        if (options.dca.target_phi && phi_x <= *options.dca.target_phi) {
            record(k, 0.0, 0.0, 0.0, 0);
            trace.status = Status::TargetReached;
            break;
        }
        if (k >= options.dca.max_iters) {
            record(k, 0.0, 0.0, 0.0, 0);
            trace.status = Status::MaxIterations;
            break;
        }
        const Vector v = problem.h_subgrad(x);
        const Vector y = problem.g_argmin_linear(v, x);
        if (!y.allFinite()) {
            record(k, 0.0, 0.0, 0.0, 0);
            trace.status = Status::NonFiniteValue;
            break;
        }
        const Vector d = y - x;
        const double d_norm = d.norm();
        const double phi_y = problem.phi(y);

        double tau = 0.0;
        int backtracks = 0;
        double phi_next = phi_y;
        Vector x_next = y;
        if (d_norm > 0.0) {
            const double trial = stepsize.next_trial();
            double t = trial;
            while (t >= options.tau_floor) {
                const Vector cand = y + t * d;
                const double val = problem.phi(cand);
                if (std::isfinite(val) && val <= phi_y - options.sigma * t * t * d_norm * d_norm) {
                    tau = t;
                    x_next = cand;
                    phi_next = val;
                    break;
                }
                t *= options.beta;
                ++backtracks;
            }
            stepsize.record(trial, tau);
        }

        const double er = detail::movement_ratio(x, x_next);
        if (!(phi_next < phi_x)) {
            record(k, er, 0.0, 0.0, backtracks);
            trace.status = er <= options.dca.stop_tol ? Status::Stationary
                                                      : Status::LinesearchFailure;
            break;
        }
        record(k, er, (x_next - x).norm(), tau, backtracks);
        x = x_next;
        phi_x = phi_next;
        if (er <= options.dca.stop_tol) {
            record(k + 1, 0.0, 0.0, 0.0, 0);
            trace.status = Status::Stationary;
            break;
        }
    }
    trace.final_x = x;
    return trace;
}

enum class SplitMode { Dca, Bdca };

/// Regularization shift making both halves of the FBE split convex:
/// max{0, -2 lambda_min(Q)} for DCA, plus 0.1 for BDCA (h strongly convex).
inline double split_regularization(double q_min_eigenvalue, SplitMode mode) {
    const double base = std::max(0.0, -2.0 * q_min_eigenvalue);
    return mode == SplitMode::Bdca ? 0.1 + base : base;
}

/// DC split of the quadratic-over-constraint envelope:
///   g(x) = 1/2 x^T (Q + (rho + 1/lambda) I) x + b^T x
///   h(x) = 1/2 x^T (2Q + rho I) x + b^T x + Asplund((I - lambda Q) x - lambda b)
/// so that g - h equals the forward-backward envelope of the constrained
/// quadratic. The g-subproblem is a cached positive-definite linear solve.
inline DcaProblem regularize_split(const Matrix& q, const Vector& b, double lambda,
                                   SplitMode mode, const ProxFriendly& psi) {
    const int n = static_cast<int>(q.rows());
    Eigen::SelfAdjointEigenSolver<Matrix> eig(q, Eigen::EigenvaluesOnly);
    const double rho = split_regularization(eig.eigenvalues().minCoeff(), mode);

    const Matrix g_mat = q + (rho + 1.0 / lambda) * Matrix::Identity(n, n);
    const Matrix h_mat = 2.0 * q + rho * Matrix::Identity(n, n);
    const Matrix forward = Matrix::Identity(n, n) - lambda * q;  // I - lambda Q
    auto llt = std::make_shared<Eigen::LLT<Matrix>>(g_mat);
    if (llt->info() != Eigen::Success) throw SingularSystem("split g-matrix not positive definite");

    DcaProblem p;
    p.dim = n;
    p.g_value = [g_mat, b](const Vector& x) { return 0.5 * x.dot(g_mat * x) + b.dot(x); };
    p.h_value = [h_mat, b, forward, lambda, psi](const Vector& x) {
        return 0.5 * x.dot(h_mat * x) + b.dot(x) +
               asplund(psi, lambda, forward * x - lambda * b);
    };
    p.h_subgrad = [h_mat, b, forward, lambda, psi](const Vector& x) -> Vector {
        const Vector y = forward * x - lambda * b;
        return h_mat * x + b + forward * (psi.prox(y, lambda) / lambda);
    };
    p.g_argmin_linear = [llt, g_mat, b](const Vector& v, const Vector&) -> Vector {
        Vector x = llt->solve(v - b);
        x += llt->solve(v - b - g_mat * x);
        return x;
    };
    p.subproblem_residual = [g_mat, b](const Vector& x, const Vector& v) {
        return (g_mat * x + b - v).norm();
    };
    return p;
}

/// Classical ball-constrained DC split of 1/2 x^T Q x + b^T x over B_r(0):
///   g(x) = rho/2 ||x||^2 + b^T x + indicator(B_r(0)),  h(x) = 1/2 x^T (rho I - Q) x
/// with rho >= ||Q||_2; the subproblem argmin has the closed form
/// P_{B_r(0)}((v - b)/rho).
inline DcaProblem ball_split(const Matrix& q, const Vector& b, double r, double rho) {
    const int n = static_cast<int>(q.rows());
    const Matrix h_mat = rho * Matrix::Identity(n, n) - q;
    DcaProblem p;
    p.dim = n;
    p.g_value = [rho, b, r](const Vector& x) {
        if (x.norm() > r + 1e-9) return kInf;
        return 0.5 * rho * x.squaredNorm() + b.dot(x);
    };
    p.h_value = [h_mat](const Vector& x) { return 0.5 * x.dot(h_mat * x); };
    p.h_subgrad = [h_mat](const Vector& x) -> Vector { return h_mat * x; };
    p.g_argmin_linear = [rho, b, r, n](const Vector& v, const Vector&) -> Vector {
        return project_ball((v - b) / rho, Vector::Zero(n), r);
    };
    p.subproblem_residual = [rho, b, r](const Vector& x, const Vector& v) {
        // KKT residual: interior solutions zero the gradient; boundary ones
        // align it with the inward normal.
        const Vector grad = rho * x + b - v;
        if (x.norm() < r - 1e-9) return grad.norm();
        const double mu = std::max(0.0, -grad.dot(x) / x.squaredNorm());
        return (grad + mu * x).norm();
    };
    return p;
}

/// Damped Newton for argmin { g(x) - <v,x> } with smooth convex g; used by DC
/// splits without a closed-form subproblem. Converges to gradient norm `tol`.
inline Vector newton_argmin_linear(const std::function<double(const Vector&)>& g_value,
                                   const std::function<Vector(const Vector&)>& g_grad,
                                   const std::function<Matrix(const Vector&)>& g_hess,
                                   const Vector& v, const Vector& x0, double tol = 1e-8,
                                   int max_iters = 200) {
    Vector x = x0;
    double value = g_value(x) - v.dot(x);
    for (int k = 0; k < max_iters; ++k) {
        const Vector r = g_grad(x) - v;
        if (r.norm() <= tol) return x;
        Matrix h = g_hess(x);
        Vector d;
        double shift = 0.0;
        while (true) {
            Eigen::LDLT<Matrix> ldlt(shift == 0.0 ? h
                                                  : Matrix(h + shift * Matrix::Identity(
                                                                         h.rows(), h.cols())));
            if (ldlt.info() == Eigen::Success) {
                d = ldlt.solve(-r);
                if (d.allFinite() && r.dot(d) < 0.0) break;
            }
            shift = shift == 0.0 ? 1e-10 * (1.0 + h.diagonal().cwiseAbs().maxCoeff()) : 10.0 * shift;
            if (shift > 1e12) throw SubproblemFailure("inner Newton system unusable");
        }
        double tau = 1.0;
        const double slope = r.dot(d);
        while (tau > 1e-16) {
            const Vector cand = x + tau * d;
            const double cand_value = g_value(cand) - v.dot(cand);
            if (std::isfinite(cand_value) && cand_value <= value + 0.25 * tau * slope) {
                x = cand;
                value = cand_value;
                break;
            }
            tau *= 0.5;
        }
        if (tau <= 1e-16) throw SubproblemFailure("inner Newton linesearch stalled");
    }
    if ((g_grad(x) - v).norm() <= tol) return x;
    throw SubproblemFailure("inner Newton failed to reach tolerance");
}

}  // namespace rcsn

#endif  // RCSN_BASELINES_HPP
