#ifndef RCSN_ORACLE_HPP
#define RCSN_ORACLE_HPP

#include "rcsn/types.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <utility>

namespace rcsn {

/// First/second-order oracle for an objective phi = g - h, where g is smooth
/// with a generalized-Hessian element and h supplies one limiting subgradient
/// of -h at each point. All callbacks must be deterministic in x.
struct DifferenceOracle {
    int dim = 0;
    std::function<double(const Vector&)> g_value;
    std::function<Vector(const Vector&)> g_grad;
    std::function<Matrix(const Vector&)> g_hess_element;
    std::function<double(const Vector&)> h_value;
    std::function<Vector(const Vector&)> neg_h_subgrad;
    std::function<Vector(const Vector&)> h_subgrad;  // optional, for DC-mode baselines
    std::optional<double> xi_bound;                  // lower bound on eigenvalues of the Hessian element
};

inline void check_dim(const DifferenceOracle& oracle, const Vector& x) {
    if (x.size() != oracle.dim)
        throw OracleError("oracle dimension " + std::to_string(oracle.dim) +
                          " does not match point dimension " + std::to_string(x.size()));
}

/// phi(x) = g(x) - h(x). Throws NonFiniteValue if either term is NaN/Inf.
inline double eval_phi(const DifferenceOracle& oracle, const Vector& x) {
    check_dim(oracle, x);
    const double gv = oracle.g_value(x);
    const double hv = oracle.h_value(x);
    if (!std::isfinite(gv) || !std::isfinite(hv))
        throw NonFiniteValue("non-finite objective term: g=" + std::to_string(gv) +
                             " h=" + std::to_string(hv));
    return gv - hv;
}

/// One element of the subdifferential of phi: grad g(x) + v, v in the
/// limiting subdifferential of -h at x.
inline Vector subgradient(const DifferenceOracle& oracle, const Vector& x) {
    check_dim(oracle, x);
    if (!oracle.neg_h_subgrad) throw OracleError("oracle has no neg_h_subgrad selection");
    return oracle.g_grad(x) + oracle.neg_h_subgrad(x);
}

struct OracleSampleReport {
    Vector x;
    double grad_residual = 0.0;      // max over coordinates of the relative FD residual
    double hess_asymmetry = 0.0;     // ||A - A^T||_inf relative to ||A||_inf
    double hess_min_eigenvalue = 0.0;
    bool grad_ok = true;
    bool symmetry_ok = true;
    bool lower_definite_ok = true;   // vacuously true when xi_bound is absent
};

struct OracleReport {
    std::vector<OracleSampleReport> samples;
    bool all_ok = true;
};

/// Validates gradient consistency (central differences), Hessian-element
/// symmetry and, when xi_bound is set, lower-definiteness at each sample.
/// Report-only; never throws on a failed check.
inline OracleReport validate_oracle(const DifferenceOracle& oracle,
                                    const std::vector<Vector>& samples,
                                    double tol = 1e-5) {
    OracleReport report;
    for (const Vector& x : samples) {
        OracleSampleReport s;
        s.x = x;

        const Vector grad = oracle.g_grad(x);
        const double delta = 1e-6 * (1.0 + x.norm());
        double worst = 0.0;
        for (int i = 0; i < oracle.dim; ++i) {
            Vector xp = x, xm = x;
            xp[i] += delta;
            xm[i] -= delta;
            const double fd = (oracle.g_value(xp) - oracle.g_value(xm)) / (2.0 * delta);
            const double res = std::abs(grad[i] - fd) / (1.0 + std::abs(grad[i]));
            worst = std::max(worst, res);
        }
        s.grad_residual = worst;
        s.grad_ok = worst <= tol;

        const Matrix a = oracle.g_hess_element(x);
        const double scale = a.cwiseAbs().maxCoeff();
        const double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
        s.hess_asymmetry = scale > 0.0 ? asym / scale : asym;
        s.symmetry_ok = s.hess_asymmetry <= 1e-12;

        const Matrix sym = 0.5 * (a + a.transpose());
        Eigen::SelfAdjointEigenSolver<Matrix> eig(sym, Eigen::EigenvaluesOnly);
        s.hess_min_eigenvalue = eig.eigenvalues().minCoeff();
        if (oracle.xi_bound)
            s.lower_definite_ok = s.hess_min_eigenvalue >= *oracle.xi_bound - 1e-8;

        report.all_ok = report.all_ok && s.grad_ok && s.symmetry_ok && s.lower_definite_ok;
        report.samples.push_back(std::move(s));
    }
    return report;
}

}  // namespace rcsn

#endif  // RCSN_ORACLE_HPP
