#ifndef RCSN_ENVELOPE_HPP
#define RCSN_ENVELOPE_HPP

#include "rcsn/oracle.hpp"
#include "rcsn/prox.hpp"
#include "rcsn/types.hpp"

#include <cmath>
#include <functional>
#include <string>

namespace rcsn {

/// Moreau envelope: psi(p) + ||x-p||^2 / (2 lambda) at the selected prox point.
inline double moreau(const ProxFriendly& psi, double lambda, const Vector& x) {
    if (!(lambda > 0.0 && lambda < psi.threshold))
        throw ProxUndefined("moreau parameter outside (0, threshold): " + std::to_string(lambda));
    const Vector p = psi.prox(x, lambda);
    if (!p.allFinite()) throw ProxUndefined("prox selection is not finite");
    return psi.psi_value(p) + (x - p).squaredNorm() / (2.0 * lambda);
}

/// Asplund function: ||x||^2 / (2 lambda) - Moreau envelope. Convex and
/// Lipschitz for prox-bounded psi.
inline double asplund(const ProxFriendly& psi, double lambda, const Vector& x) {
    return x.squaredNorm() / (2.0 * lambda) - moreau(psi, lambda, x);
}

/// Element of the subdifferential of -Asplund: -p / lambda for the selected
/// prox point p (equality with the full set when psi is a set indicator).
inline Vector neg_asplund_subgrad(const ProxFriendly& psi, double lambda, const Vector& x) {
    if (!(lambda > 0.0 && lambda < psi.threshold))
        throw ProxUndefined("asplund parameter outside (0, threshold): " + std::to_string(lambda));
    const Vector p = psi.prox(x, lambda);
    if (!p.allFinite()) throw ProxUndefined("prox selection is not finite");
    return -p / lambda;
}

/// Structured objective f + psi with smooth f (value/gradient/Hessian and a
/// Lipschitz bound on the gradient) and prox-friendly psi. lambda must lie
/// strictly inside (0, min(1/L_f, threshold(psi))).
struct CompositeProblem {
    int dim = 0;
    std::function<double(const Vector&)> f_value;
    std::function<Vector(const Vector&)> f_grad;
    std::function<Matrix(const Vector&)> f_hess;
    double lipschitz_grad = 0.0;
    ProxFriendly psi;
    double lambda = 0.0;
    bool hess_constant = false;  // enables factorization caching in solvers
};

inline void validate(const CompositeProblem& p) {
    const double upper = std::min(1.0 / p.lipschitz_grad, p.psi.threshold);
    if (!(p.lambda > 0.0 && p.lambda < upper))
        throw ConfigError("lambda must lie in (0, " + std::to_string(upper) + "), got " +
                          std::to_string(p.lambda));
}

/// Forward-backward envelope value:
/// f(x) - lambda/2 ||grad f(x)||^2 + e_lambda(psi)(x - lambda grad f(x)).
inline double fbe_value(const CompositeProblem& p, const Vector& x) {
    const Vector g = p.f_grad(x);
    return p.f_value(x) - 0.5 * p.lambda * g.squaredNorm() + moreau(p.psi, p.lambda, x - p.lambda * g);
}

/// Subgradient element of the FBE:
/// (1/lambda) (I - lambda hess f(x)) (x - p), p the prox selection at the
/// forward point x - lambda grad f(x).
inline Vector fbe_subgrad(const CompositeProblem& p, const Vector& x) {
    const Vector y = x - p.lambda * p.f_grad(x);
    const Vector z = x - p.psi.prox(y, p.lambda);
    return (z - p.lambda * (p.f_hess(x) * z)) / p.lambda;
}

/// Difference-of-functions oracle for the FBE: g = f + ||.||^2/(2 lambda) with
/// Hessian element hess f + I/lambda and eigenvalue bound 1/lambda - L_f;
/// h = <grad f(x), x> + Asplund(x - lambda grad f(x)), with the subgradient of
/// -h assembled by the chain rule through the same prox selection, so that
/// subgradient(oracle, x) coincides with fbe_subgrad(p, x).
inline DifferenceOracle fbe_difference_oracle(const CompositeProblem& p) {
    validate(p);
    DifferenceOracle oracle;
    oracle.dim = p.dim;
    const double lambda = p.lambda;
    oracle.g_value = [p, lambda](const Vector& x) {
        return p.f_value(x) + x.squaredNorm() / (2.0 * lambda);
    };
    oracle.g_grad = [p, lambda](const Vector& x) -> Vector { return p.f_grad(x) + x / lambda; };
    oracle.g_hess_element = [p, lambda](const Vector& x) -> Matrix {
        return p.f_hess(x) + Matrix::Identity(p.dim, p.dim) / lambda;
    };
    oracle.xi_bound = 1.0 / lambda - p.lipschitz_grad;
    oracle.h_value = [p, lambda](const Vector& x) {
        const Vector g = p.f_grad(x);
        return g.dot(x) + asplund(p.psi, lambda, x - lambda * g);
    };
    oracle.neg_h_subgrad = [p, lambda](const Vector& x) -> Vector {
        const Vector g = p.f_grad(x);
        const Matrix hess = p.f_hess(x);
        const Vector v = neg_asplund_subgrad(p.psi, lambda, x - lambda * g);
        return -(hess * x) - g + v - lambda * (hess * v);
    };
    oracle.h_subgrad = [p, lambda](const Vector& x) -> Vector {
        const Vector g = p.f_grad(x);
        const Vector q = p.psi.prox(x - lambda * g, lambda) / lambda;
        return p.f_hess(x) * x + g + q - lambda * (p.f_hess(x) * q);
    };
    return oracle;
}

}  // namespace rcsn

#endif  // RCSN_ENVELOPE_HPP
