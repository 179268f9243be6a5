#ifndef RCSN_DIRECTION_HPP
#define RCSN_DIRECTION_HPP

#include "rcsn/config.hpp"
#include "rcsn/oracle.hpp"
#include "rcsn/types.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace rcsn {

/// True iff <w,d> <= -zeta * ||d||^2. Vacuously true for d = 0; callers treat
/// a zero direction as a failure upstream.
inline bool descent_certificate(const Vector& w, const Vector& d, double zeta) {
    return w.dot(d) <= -zeta * d.squaredNorm();
}

namespace detail {

inline std::optional<Vector> try_solve(const Matrix& m, const Vector& rhs, double tol) {
    auto residual_ok = [&](const Vector& d) {
        return (m * d - rhs).norm() <= tol && d.allFinite();
    };
    // Symmetric indefinite factorization first, dense LU as fallback; one step
    // of iterative refinement keeps the residual near machine precision.
    Eigen::LDLT<Matrix> ldlt(m);
    if (ldlt.info() == Eigen::Success) {
        Vector d = ldlt.solve(rhs);
        d += ldlt.solve(rhs - m * d);
        if (residual_ok(d)) return d;
    }
    Eigen::FullPivLU<Matrix> lu(m);
    if (lu.isInvertible()) {
        Vector d = lu.solve(rhs);
        d += lu.solve(rhs - m * d);
        if (residual_ok(d)) return d;
    }
    return std::nullopt;
}

}  // namespace detail

/// Solves (A + rho I) d = -w to relative residual 1e-10 * ||w||.
/// Throws SingularSystem when no factorization meets the bound.
inline Vector solve_direction(const Matrix& hess_element, double rho, const Vector& w) {
    const Matrix m = hess_element + rho * Matrix::Identity(hess_element.rows(), hess_element.cols());
    auto d = detail::try_solve(m, -w, 1e-10 * w.norm());
    if (!d) throw SingularSystem("direction system is singular at rho=" + std::to_string(rho));
    return *d;
}

struct DirectionResult {
    bool ok = false;
    double rho = 0.0;
    double zeta = 0.0;  // certificate threshold actually used this iteration
    Vector d;
};

inline double strategy_rho(const RhoStrategy& strategy, int k, double w_norm, double w0_norm,
                           double zeta, double rho_max) {
    double r = 0.0;
    if (const auto* c = std::get_if<rho::Constant>(&strategy)) {
        r = c->value;
    } else if (const auto* dec = std::get_if<rho::Decreasing>(&strategy)) {
        r = w0_norm / std::pow(dec->divisor, static_cast<double>(k / dec->period)) + zeta;
    } else {
        r = std::get<rho::AdaptiveNorm>(strategy).c * w_norm + zeta;
    }
    return std::clamp(r, 0.0, rho_max);
}

/// Direction step with escalation: starting from the schedule's rho_k, solve
/// (A + rho I) d = -w and double rho (from at least zeta) until the descent
/// certificate holds. Fails once the certificate is still violated at rho_max.
inline DirectionResult escalate_rho(const Matrix& hess_element, const Vector& w,
                                    const SolverConfig& config, int k, double w0_norm) {
    DirectionResult out;
    out.zeta = config.zeta;
    if (const auto* a = std::get_if<rho::AdaptiveNorm>(&config.rho_strategy))
        out.zeta = a->c * w.norm();

    double rho = strategy_rho(config.rho_strategy, k, w.norm(), w0_norm, config.zeta,
                              config.rho_max);
    const Matrix eye = Matrix::Identity(hess_element.rows(), hess_element.cols());
    while (true) {
        auto d = detail::try_solve(hess_element + rho * eye, -w, 1e-10 * w.norm());
        if (d && d->squaredNorm() > 0.0 && descent_certificate(w, *d, out.zeta)) {
            out.ok = true;
            out.rho = rho;
            out.d = std::move(*d);
            return out;
        }
        if (rho >= config.rho_max) {
            out.rho = rho;
            return out;  // DirectionFailure upstream
        }
        rho = std::min(config.rho_max, std::max(2.0 * rho, out.zeta));
    }
}

}  // namespace rcsn

#endif  // RCSN_DIRECTION_HPP
