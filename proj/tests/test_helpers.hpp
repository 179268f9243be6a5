#ifndef RCSN_TEST_HELPERS_HPP
#define RCSN_TEST_HELPERS_HPP

#include "rcsn/oracle.hpp"
#include "rcsn/problems.hpp"
#include "rcsn/types.hpp"

#include <cmath>
#include <functional>
#include <vector>

namespace rcsn::test {

/// Smooth quadratic difference oracle: g = 1/2 x^T Q x + b^T x, h = 0.
inline DifferenceOracle quadratic_oracle(const Matrix& q, const Vector& b) {
    DifferenceOracle o;
    o.dim = static_cast<int>(q.rows());
    o.g_value = [q, b](const Vector& x) { return 0.5 * x.dot(q * x) + b.dot(x); };
    o.g_grad = [q, b](const Vector& x) -> Vector { return q * x + b; };
    o.g_hess_element = [q](const Vector&) { return q; };
    o.h_value = [](const Vector&) { return 0.0; };
    o.neg_h_subgrad = [q](const Vector& x) { return Vector::Zero(x.size()); };
    o.h_subgrad = [q](const Vector& x) { return Vector::Zero(x.size()); };
    Eigen::SelfAdjointEigenSolver<Matrix> eig(q, Eigen::EigenvaluesOnly);
    o.xi_bound = eig.eigenvalues().minCoeff();
    return o;
}

inline std::vector<Vector> random_points(int count, int dim, double lo, double hi,
                                         std::uint64_t seed) {
    RngStream s(seed, 0);
    std::vector<Vector> pts;
    pts.reserve(count);
    for (int i = 0; i < count; ++i) pts.push_back(s.uniform_vector(dim, lo, hi));
    return pts;
}

/// Brute-force 1D minimizer over a uniform grid.
inline double grid_min_1d(const std::function<double(double)>& f, double lo, double hi,
                          double step) {
    double best = f(lo);
    for (double t = lo; t <= hi; t += step) best = std::min(best, f(t));
    return best;
}

/// Sampled upper directional derivative of -h at x along d,
/// max over t in {1e-3, 1e-4, 1e-5} of (-h(x+td) + h(x)) / t.
inline double sampled_neg_h_udd(const DifferenceOracle& o, const Vector& x, const Vector& d) {
    double worst = -std::numeric_limits<double>::infinity();
    for (double t : {1e-3, 1e-4, 1e-5})
        worst = std::max(worst, (-o.h_value(x + t * d) + o.h_value(x)) / t);
    return worst;
}

}  // namespace rcsn::test

#endif  // RCSN_TEST_HELPERS_HPP
