#ifndef RCSN_PROBLEMS_HPP
#define RCSN_PROBLEMS_HPP

#include "rcsn/baselines.hpp"
#include "rcsn/envelope.hpp"
#include "rcsn/oracle.hpp"
#include "rcsn/prox.hpp"
#include "rcsn/types.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace rcsn {

// ---------------------------------------------------------------------------
// Deterministic seeded randomness.
//
// Every instance component draws from its own stream: stream i of seed s is a
// mt19937_64 engine seeded with splitmix64(s + (i+1) * 0x9E3779B97F4A7C15).
// Uniform doubles come from the top 53 bits of the raw engine output,
// u = (x >> 11) * 2^-53, so sequences are reproducible across platforms and
// languages (no reliance on std::uniform_real_distribution).
// ---------------------------------------------------------------------------

inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t component)
        : engine_(splitmix64(seed + (component + 1) * 0x9E3779B97F4A7C15ULL)) {}

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    Vector uniform_vector(int n, double lo, double hi) {
        Vector v(n);
        for (int i = 0; i < n; ++i) v[i] = uniform(lo, hi);
        return v;
    }

    /// Uniform integer in [lo, hi] by scaling a uniform double (adequate for
    /// the small ranges used by the generators).
    int uniform_int(int lo, int hi) {
        const int span = hi - lo + 1;
        int k = static_cast<int>(uniform(0.0, 1.0) * span);
        if (k == span) k = span - 1;
        return lo + k;
    }

    double gaussian() {  // Box-Muller on the uniform stream
        const double u1 = 1.0 - uniform(0.0, 1.0);  // (0, 1]
        const double u2 = uniform(0.0, 1.0);
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    /// Uniform point in the ball B_r(0): Gaussian direction scaled by
    /// r * U^{1/n} (dimension-safe, no rejection).
    Vector uniform_in_ball(int n, double r) {
        Vector g(n);
        for (int i = 0; i < n; ++i) g[i] = gaussian();
        const double norm = g.norm();
        if (norm == 0.0) return Vector::Zero(n);
        const double scale =
            r * std::pow(uniform(0.0, 1.0), 1.0 / static_cast<double>(n)) / norm;
        return scale * g;
    }

private:
    std::mt19937_64 engine_;
};

// ---------------------------------------------------------------------------
// Biochemical reaction-network models.
// ---------------------------------------------------------------------------

/// Mass-action network data: forward/reverse stoichiometric matrices (m
/// species by n reversible reactions, nonnegative integer entries) and the
/// componentwise-log kinetic parameters w of the 2n unidirectional rates.
struct BiochemModel {
    Matrix forward;   // F, m x n
    Matrix reverse;   // R, m x n
    Vector kinetics;  // w, length 2n
    std::uint64_t seed = 0;

    int species() const { return static_cast<int>(forward.rows()); }
    int reactions() const { return static_cast<int>(forward.cols()); }

    Matrix concat() const {  // K = [F, R]
        Matrix k(forward.rows(), 2 * forward.cols());
        k << forward, reverse;
        return k;
    }
    Matrix concat_swapped() const {  // [R, F]
        Matrix k(forward.rows(), 2 * forward.cols());
        k << reverse, forward;
        return k;
    }
};

enum class BiochemSplit {
    DC2Norm,  // g = 2(||p||^2 + ||c||^2),  h = ||p + c||^2
    Product,  // g = ||p||^2 + ||c||^2,     h = 2 <p, c>
};

namespace detail {

/// Oracle pieces for q(x) = u(x)^T B u(x) with u(x) = exp(w + K^T x):
///   grad q = 2 K diag(u) B u
///   hess q = 2 K [ diag(u) B diag(u) + diag(u .* Bu) ] K^T
struct ExpQuadraticForm {
    Matrix k;  // m x 2n
    Vector w;
    Matrix b;  // symmetric 2n x 2n

    Vector rates(const Vector& x) const { return (w + k.transpose() * x).array().exp(); }
    double value(const Vector& x) const {
        const Vector u = rates(x);
        return u.dot(b * u);
    }
    Vector grad(const Vector& x) const {
        const Vector u = rates(x);
        return 2.0 * (k * u.asDiagonal() * (b * u));
    }
    Matrix hess(const Vector& x) const {
        const Vector u = rates(x);
        const Vector bu = b * u;
        const Matrix inner = u.asDiagonal() * b * u.asDiagonal() +
                             Matrix((u.cwiseProduct(bu)).asDiagonal());
        return 2.0 * (k * inner * k.transpose());
    }
};

}  // namespace detail

/// Difference oracle for phi(x) = ||([F,R]-[R,F]) exp(w + [F,R]^T x)||^2 under
/// the chosen convex split. Both halves are smooth; xi_bound is 0 (g convex),
/// so the solver must keep rho_k at least zeta.
inline DifferenceOracle biochem_oracles(const BiochemModel& model, BiochemSplit split) {
    const Matrix k = model.concat();
    const Matrix ks = model.concat_swapped();
    const Matrix m_pc = k.transpose() * k + ks.transpose() * ks;
    const Matrix cross = k.transpose() * ks + ks.transpose() * k;

    detail::ExpQuadraticForm g_form{k, model.kinetics,
                                    split == BiochemSplit::DC2Norm ? Matrix(2.0 * m_pc) : m_pc};
    detail::ExpQuadraticForm h_form{
        k, model.kinetics,
        split == BiochemSplit::DC2Norm ? Matrix((k + ks).transpose() * (k + ks)) : cross};

    DifferenceOracle oracle;
    oracle.dim = model.species();
    oracle.g_value = [g_form](const Vector& x) { return g_form.value(x); };
    oracle.g_grad = [g_form](const Vector& x) { return g_form.grad(x); };
    oracle.g_hess_element = [g_form](const Vector& x) { return g_form.hess(x); };
    oracle.h_value = [h_form](const Vector& x) { return h_form.value(x); };
    oracle.neg_h_subgrad = [h_form](const Vector& x) -> Vector { return -h_form.grad(x); };
    oracle.h_subgrad = [h_form](const Vector& x) { return h_form.grad(x); };
    oracle.xi_bound = 0.0;
    return oracle;
}

/// Convex DC split of the network objective (g doubled, h the coupled square)
/// with the g-subproblem solved by the in-repo damped Newton loop to gradient
/// norm 1e-8.
inline DcaProblem biochem_dca_problem(const BiochemModel& model) {
    const Matrix k = model.concat();
    const Matrix ks = model.concat_swapped();
    detail::ExpQuadraticForm g_form{k, model.kinetics,
                                    Matrix(2.0 * (k.transpose() * k + ks.transpose() * ks))};
    detail::ExpQuadraticForm h_form{k, model.kinetics,
                                    Matrix((k + ks).transpose() * (k + ks))};
    DcaProblem p;
    p.dim = model.species();
    p.g_value = [g_form](const Vector& x) { return g_form.value(x); };
    p.h_value = [h_form](const Vector& x) { return h_form.value(x); };
    p.h_subgrad = [h_form](const Vector& x) { return h_form.grad(x); };
    p.g_argmin_linear = [g_form](const Vector& v, const Vector& warm) {
        return newton_argmin_linear([g_form](const Vector& x) { return g_form.value(x); },
                                    [g_form](const Vector& x) { return g_form.grad(x); },
                                    [g_form](const Vector& x) { return g_form.hess(x); }, v, warm,
                                    1e-8);
    };
    p.subproblem_residual = [g_form](const Vector& x, const Vector& v) {
        return (g_form.grad(x) - v).norm();
    };
    return p;
}

/// Synthetic network: sparse F, R with entries in {0,1,2} (weights 0.7/0.2/0.1)
/// and forward log-kinetics uniform in (-1,1). The reverse kinetics are set to
/// w_r = w_f + (F-R)^T x_hat for an anchor x_hat uniform in (-0.5, 0.5)^m,
/// which plants an exact steady state at x_hat, so inf phi = 0 is attainable.
/// Streams: F=0, R=1, w=2, anchor=3.
inline BiochemModel gen_biochem(int species, int reactions, std::uint64_t seed) {
    BiochemModel model;
    model.seed = seed;
    RngStream sf(seed, 0), sr(seed, 1), sw(seed, 2), sa(seed, 3);
    auto draw_matrix = [&](RngStream& s) {
        Matrix m(species, reactions);
        for (int i = 0; i < species; ++i)
            for (int j = 0; j < reactions; ++j) {
                const double u = s.uniform(0.0, 1.0);
                m(i, j) = u < 0.7 ? 0.0 : (u < 0.9 ? 1.0 : 2.0);
            }
        return m;
    };
    model.forward = draw_matrix(sf);
    model.reverse = draw_matrix(sr);
    const Vector wf = sw.uniform_vector(reactions, -1.0, 1.0);
    const Vector anchor = sa.uniform_vector(species, -0.5, 0.5);
    const Vector wr = wf + (model.forward - model.reverse).transpose() * anchor;
    model.kinetics.resize(2 * reactions);
    model.kinetics << wf, wr;
    return model;
}

// ---------------------------------------------------------------------------
// Constrained quadratic instances.
// ---------------------------------------------------------------------------

/// Q = U D U^T from three Householder reflectors, b = U z with the component
/// of z at the argmin of D zeroed, and a trust-region radius drawn from
/// (||d||, 2||d||) for the secular vector d_i = z_i / (D_ii - min D).
/// Streams: u1=0, u2=1, u3=2, D=3, z=4, r=5.
struct TrustRegionInstance {
    Matrix q;
    Vector b;
    double radius = 0.0;
    int n = 0;
    bool convex = false;
    std::uint64_t seed = 0;
    // construction provenance
    Vector u1, u2, u3, d_diag, z;
    double secular_norm = 0.0;
};

namespace detail {

struct QbDraw {
    Matrix q;
    Vector b;
    Vector u1, u2, u3, d_diag, z;
    double secular_norm;
};

inline QbDraw draw_quadratic(int n, std::uint64_t seed, bool convex) {
    RngStream s1(seed, 0), s2(seed, 1), s3(seed, 2), sd(seed, 3), sz(seed, 4);
    QbDraw out;
    out.u1 = s1.uniform_vector(n, -1.0, 1.0);
    out.u2 = s2.uniform_vector(n, -1.0, 1.0);
    out.u3 = s3.uniform_vector(n, -1.0, 1.0);
    auto householder = [n](const Vector& u) {
        return Matrix(Matrix::Identity(n, n) - (2.0 / u.squaredNorm()) * (u * u.transpose()));
    };
    const Matrix u = householder(out.u1) * householder(out.u2) * householder(out.u3);
    out.d_diag = convex ? sd.uniform_vector(n, 0.0, 5.0) : sd.uniform_vector(n, -5.0, 5.0);
    out.q = u * out.d_diag.asDiagonal() * u.transpose();
    out.q = 0.5 * (out.q + out.q.transpose());  // kill rounding asymmetry

    int i_min = 0;
    out.d_diag.minCoeff(&i_min);
    out.z = sz.uniform_vector(n, -1.0, 1.0);
    out.z[i_min] = 0.0;
    out.b = u * out.z;

    Vector secular = Vector::Zero(n);
    const double d_min = out.d_diag[i_min];
    for (int i = 0; i < n; ++i)
        if (out.d_diag[i] != d_min) secular[i] = out.z[i] / (out.d_diag[i] - d_min);
    out.secular_norm = secular.norm();
    return out;
}

}  // namespace detail

inline TrustRegionInstance gen_trust_region(int n, std::uint64_t seed, bool convex = false) {
    if (n < 2) throw ConfigError("trust-region instances need n >= 2");
    auto draw = detail::draw_quadratic(n, seed, convex);
    TrustRegionInstance inst;
    inst.q = std::move(draw.q);
    inst.b = std::move(draw.b);
    inst.n = n;
    inst.convex = convex;
    inst.seed = seed;
    inst.u1 = std::move(draw.u1);
    inst.u2 = std::move(draw.u2);
    inst.u3 = std::move(draw.u3);
    inst.d_diag = std::move(draw.d_diag);
    inst.z = std::move(draw.z);
    inst.secular_norm = draw.secular_norm;
    RngStream sr(seed, 5);
    inst.radius = sr.uniform(inst.secular_norm, 2.0 * inst.secular_norm);
    return inst;
}

/// Same quadratic draw constrained to the union of 9^n lattice balls of
/// radius c sqrt(n) / 2.
struct BallUnionInstance {
    Matrix q;
    Vector b;
    double radius_factor = 0.0;  // c
    double radius = 0.0;         // c sqrt(n) / 2
    int n = 0;
    bool convex = false;
    std::uint64_t seed = 0;
};

inline BallUnionInstance gen_ball_union(int n, double c, bool convex, std::uint64_t seed) {
    if (n < 2) throw ConfigError("ball-union instances need n >= 2");
    if (!(c > 0.0 && c < 1.0)) throw ConfigError("radius factor must lie in (0,1)");
    auto draw = detail::draw_quadratic(n, seed, convex);
    BallUnionInstance inst;
    inst.q = std::move(draw.q);
    inst.b = std::move(draw.b);
    inst.n = n;
    inst.convex = convex;
    inst.seed = seed;
    inst.radius_factor = c;
    inst.radius = 0.5 * c * std::sqrt(static_cast<double>(n));
    return inst;
}

/// Composite (FBE-ready) view of a constrained quadratic: f(x) = 1/2 x^T Q x
/// + b^T x with L_f = ||Q||_2, psi the indicator of the constraint set, and
/// lambda = lambda_factor / ||Q||_2.
inline CompositeProblem quadratic_composite(const Matrix& q, const Vector& b,
                                            const ProxFriendly& psi, double lambda_factor = 0.8) {
    CompositeProblem p;
    p.dim = static_cast<int>(q.rows());
    Eigen::SelfAdjointEigenSolver<Matrix> eig(q, Eigen::EigenvaluesOnly);
    const double norm2 = eig.eigenvalues().cwiseAbs().maxCoeff();
    p.f_value = [q, b](const Vector& x) { return 0.5 * x.dot(q * x) + b.dot(x); };
    p.f_grad = [q, b](const Vector& x) -> Vector { return q * x + b; };
    p.f_hess = [q](const Vector&) { return q; };
    p.lipschitz_grad = norm2;
    p.psi = psi;
    p.lambda = lambda_factor / norm2;
    p.hess_constant = true;
    return p;
}

// ---------------------------------------------------------------------------
// Closed-form fixtures with documented subgradient selections.
// ---------------------------------------------------------------------------

using Fixture = std::variant<DifferenceOracle, CompositeProblem>;

namespace detail {

inline double sign_or(double t, double at_zero) {
    return t > 0.0 ? 1.0 : (t < 0.0 ? -1.0 : at_zero);
}

}  // namespace detail

/// phi = 1/2 x^2 - |x| in one dimension; the -|x| selection at the kink is +1.
/// Stationary points of phi are exactly +-1.
inline DifferenceOracle fixture_quadratic_minus_abs() {
    DifferenceOracle o;
    o.dim = 1;
    o.g_value = [](const Vector& x) { return 0.5 * x.squaredNorm(); };
    o.g_grad = [](const Vector& x) { return x; };
    o.g_hess_element = [](const Vector&) { return Matrix::Identity(1, 1); };
    o.xi_bound = 1.0;
    o.h_value = [](const Vector& x) { return std::abs(x[0]); };
    o.neg_h_subgrad = [](const Vector& x) {
        return Vector::Constant(1, -detail::sign_or(x[0], -1.0));
    };
    o.h_subgrad = [](const Vector& x) {
        return Vector::Constant(1, detail::sign_or(x[0], 1.0));
    };
    return o;
}

/// Least squares with an l1 - l2 penalty: g = 1/2 (x_1 - 1)^2,
/// h = ||x||_2 - ||x||_1 on R^2. h is not prox-regular on the axes, which is
/// exactly what makes this the linesearch-failure fixture. Selections: the l1
/// subgradient picks +1 at zero components; at the origin the -||.||_2 part
/// selects -e_1.
inline DifferenceOracle fixture_l1_l2_least_squares() {
    DifferenceOracle o;
    o.dim = 2;
    o.g_value = [](const Vector& x) { return 0.5 * (x[0] - 1.0) * (x[0] - 1.0); };
    o.g_grad = [](const Vector& x) { return Vector{{x[0] - 1.0, 0.0}}; };
    o.g_hess_element = [](const Vector&) {
        Matrix a = Matrix::Zero(2, 2);
        a(0, 0) = 1.0;
        return a;
    };
    o.xi_bound = 0.0;
    o.h_value = [](const Vector& x) { return x.norm() - x.lpNorm<1>(); };
    o.neg_h_subgrad = [](const Vector& x) -> Vector {
        Vector l1(2);
        for (int i = 0; i < 2; ++i) l1[i] = detail::sign_or(x[i], 1.0);
        const double n = x.norm();
        if (n == 0.0) return l1 - Vector{{1.0, 0.0}};
        return l1 - x / n;
    };
    return o;
}

/// phi(x) = integral_0^x t^4 sin(pi/t) dt, a coercive C^2 objective whose
/// stationary set is {1/k : k nonzero integer} plus the origin. The value uses
/// adaptive Gauss-Kronrod quadrature to 1e-12; derivatives are analytic.
inline DifferenceOracle fixture_oscillating_integral() {
    auto integrand = [](double t) {
        return t == 0.0 ? 0.0 : std::pow(t, 4) * std::sin(M_PI / t);
    };
    DifferenceOracle o;
    o.dim = 1;
    o.g_value = [integrand](const Vector& x) {
        if (x[0] == 0.0) return 0.0;
        return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
            integrand, 0.0, x[0], 12, 1e-12);
    };
    o.g_grad = [](const Vector& x) {
        const double t = x[0];
        return Vector::Constant(1, t == 0.0 ? 0.0 : std::pow(t, 4) * std::sin(M_PI / t));
    };
    o.g_hess_element = [](const Vector& x) {
        const double t = x[0];
        const double v = t == 0.0 ? 0.0
                                  : 4.0 * std::pow(t, 3) * std::sin(M_PI / t) -
                                        M_PI * t * t * std::cos(M_PI / t);
        return Matrix::Constant(1, 1, v);
    };
    o.h_value = [](const Vector&) { return 0.0; };
    o.neg_h_subgrad = [](const Vector&) { return Vector::Zero(1); };
    o.h_subgrad = [](const Vector&) { return Vector::Zero(1); };
    return o;
}

/// Separable double-well objective: g_i = 1/2 t^2 and
/// h_i(t) = |t| + |1 - |t|| = max(2t - 1, -2t - 1, 1). Critical points are
/// {-2,-1,0,1,2} per coordinate; only {-2,0,2} are stationary, and those are
/// the global minima. At the kinks t = +-1 the -h selection takes the slope of
/// the outer affine piece (-+2).
inline DifferenceOracle fixture_symmetric_wells(int n) {
    auto h1 = [](double t) { return std::abs(t) + std::abs(1.0 - std::abs(t)); };
    auto neg_h_slope = [](double t) { return t >= 1.0 ? -2.0 : (t <= -1.0 ? 2.0 : 0.0); };
    DifferenceOracle o;
    o.dim = n;
    o.g_value = [](const Vector& x) { return 0.5 * x.squaredNorm(); };
    o.g_grad = [](const Vector& x) { return x; };
    o.g_hess_element = [n](const Vector&) { return Matrix::Identity(n, n); };
    o.xi_bound = 1.0;
    o.h_value = [h1](const Vector& x) {
        double s = 0.0;
        for (int i = 0; i < x.size(); ++i) s += h1(x[i]);
        return s;
    };
    o.neg_h_subgrad = [neg_h_slope](const Vector& x) {
        Vector v(x.size());
        for (int i = 0; i < x.size(); ++i) v[i] = neg_h_slope(x[i]);
        return v;
    };
    o.h_subgrad = [neg_h_slope](const Vector& x) {
        Vector v(x.size());
        for (int i = 0; i < x.size(); ++i) v[i] = -neg_h_slope(x[i]);
        return v;
    };
    return o;
}

/// Asymmetric variant: h_i(t) = |t| + |1 - t| = max(1 - 2t, 1, 2t - 1).
/// Stationary points are {-2, 0, 2} per coordinate, with the objective
/// nondifferentiable at 0. Selections at the kinks: slope +2 at t = 0 (left
/// piece), -2 at t = 1 (right piece).
inline DifferenceOracle fixture_asymmetric_wells(int n) {
    auto h1 = [](double t) { return std::abs(t) + std::abs(1.0 - t); };
    auto neg_h_slope = [](double t) { return t <= 0.0 ? 2.0 : (t >= 1.0 ? -2.0 : 0.0); };
    DifferenceOracle o;
    o.dim = n;
    o.g_value = [](const Vector& x) { return 0.5 * x.squaredNorm(); };
    o.g_grad = [](const Vector& x) { return x; };
    o.g_hess_element = [n](const Vector&) { return Matrix::Identity(n, n); };
    o.xi_bound = 1.0;
    o.h_value = [h1](const Vector& x) {
        double s = 0.0;
        for (int i = 0; i < x.size(); ++i) s += h1(x[i]);
        return s;
    };
    o.neg_h_subgrad = [neg_h_slope](const Vector& x) {
        Vector v(x.size());
        for (int i = 0; i < x.size(); ++i) v[i] = neg_h_slope(x[i]);
        return v;
    };
    o.h_subgrad = [neg_h_slope](const Vector& x) {
        Vector v(x.size());
        for (int i = 0; i < x.size(); ++i) v[i] = -neg_h_slope(x[i]);
        return v;
    };
    return o;
}

/// Saddle quadratic over the unit sphere: f = 1/2 x^T Q x with
/// Q = [[0,-1],[-1,0]], C the unit circle. The FBE difference decomposition of
/// this instance has a nonconvex h for every lambda.
inline CompositeProblem fixture_saddle_quadratic_sphere(double lambda = 0.9) {
    Matrix q(2, 2);
    q << 0.0, -1.0, -1.0, 0.0;
    CompositeProblem p;
    p.dim = 2;
    p.f_value = [q](const Vector& x) { return 0.5 * x.dot(q * x); };
    p.f_grad = [q](const Vector& x) -> Vector { return q * x; };
    p.f_hess = [q](const Vector&) { return q; };
    p.lipschitz_grad = 1.0;  // ||Q||_2
    p.psi = psi::indicator_sphere(Vector::Zero(2), 1.0);
    p.lambda = lambda;
    p.hess_constant = true;
    return p;
}

/// f = 1/4 x^4 with psi = 0: the gradient has no global Lipschitz bound and
/// the envelope 1/4 x^4 - lambda/2 x^6 is unbounded below for any lambda > 0.
inline CompositeProblem fixture_quartic_unbounded(double lambda = 0.1) {
    CompositeProblem p;
    p.dim = 1;
    p.f_value = [](const Vector& x) { return 0.25 * std::pow(x[0], 4); };
    p.f_grad = [](const Vector& x) { return Vector::Constant(1, std::pow(x[0], 3)); };
    p.f_hess = [](const Vector& x) { return Matrix::Constant(1, 1, 3.0 * x[0] * x[0]); };
    p.lipschitz_grad = 0.0;  // no global bound exists
    p.psi = psi::zero();
    p.lambda = lambda;
    return p;
}

/// Named fixture registry. Throws UnknownFixture for unrecognized names.
inline Fixture fixture(const std::string& name, int n = 1) {
    if (name == "quadratic_minus_abs") return fixture_quadratic_minus_abs();
    if (name == "l1_l2_least_squares") return fixture_l1_l2_least_squares();
    if (name == "oscillating_integral") return fixture_oscillating_integral();
    if (name == "symmetric_wells") return fixture_symmetric_wells(n);
    if (name == "asymmetric_wells") return fixture_asymmetric_wells(n);
    if (name == "saddle_quadratic_sphere") return fixture_saddle_quadratic_sphere();
    if (name == "quartic_unbounded") return fixture_quartic_unbounded();
    throw UnknownFixture("no fixture named '" + name + "'");
}

}  // namespace rcsn

#endif  // RCSN_PROBLEMS_HPP
