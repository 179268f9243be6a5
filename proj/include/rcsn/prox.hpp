#ifndef RCSN_PROX_HPP
#define RCSN_PROX_HPP

#include "rcsn/types.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace rcsn {

/// Euclidean projection onto the closed ball B_r(center).
inline Vector project_ball(const Vector& x, const Vector& center, double r) {
    const Vector offset = x - center;
    const double dist = offset.norm();
    if (dist <= r) return x;
    return center + (r / dist) * offset;
}

/// Componentwise clamp onto the box [lo, hi].
inline Vector project_box(const Vector& x, const Vector& lo, const Vector& hi) {
    return x.cwiseMax(lo).cwiseMin(hi);
}

/// Projection onto the sphere of radius r about center. At the center every
/// sphere point is nearest; the selection there is center - r e_1
/// (lexicographic smallest).
inline Vector project_sphere(const Vector& x, const Vector& center, double r) {
    const Vector offset = x - center;
    const double dist = offset.norm();
    if (dist == 0.0) {
        Vector p = center;
        p[0] -= r;
        return p;
    }
    return center + (r / dist) * offset;
}

/// Nearest candidate from a finite set, lexicographic-smallest on distance ties.
inline Vector project_finite(const Vector& x, const std::vector<Vector>& candidates) {
    if (candidates.empty()) throw ProxUndefined("projection onto an empty candidate set");
    auto lex_less = [](const Vector& a, const Vector& b) {
        for (int i = 0; i < a.size(); ++i) {
            if (a[i] < b[i]) return true;
            if (a[i] > b[i]) return false;
        }
        return false;
    };
    const Vector* best = &candidates.front();
    double best_d = (x - *best).squaredNorm();
    for (const Vector& c : candidates) {
        const double d = (x - c).squaredNorm();
        if (d < best_d || (d == best_d && lex_less(c, *best))) {
            best = &c;
            best_d = d;
        }
    }
    return *best;
}

/// Round-half-down to the nearest integer, clamped to [-4, 4]: the nearest
/// lattice center for the ball-union constraint sets. Exact for equal radii
/// since ball distance is monotone in center distance.
inline Vector nearest_lattice_center(const Vector& x) {
    Vector c(x.size());
    for (int i = 0; i < x.size(); ++i)
        c[i] = std::clamp(std::ceil(x[i] - 0.5), -4.0, 4.0);
    return c;
}

/// Projection onto the union of equal-radius balls centered at the integer
/// lattice box {-4..4}^n; ties between centers break toward the smaller integer.
inline Vector project_ball_union(const Vector& x, double r) {
    return project_ball(x, nearest_lattice_center(x), r);
}

/// Componentwise soft-thresholding: prox of kappa * l1 at unit parameter.
inline Vector soft_threshold(const Vector& x, double kappa) {
    Vector out(x.size());
    for (int i = 0; i < x.size(); ++i) {
        const double m = std::abs(x[i]) - kappa;
        out[i] = m > 0.0 ? (x[i] > 0.0 ? m : -m) : 0.0;
    }
    return out;
}

/// Prox-friendly function: value oracle plus a deterministic selection from
/// the proximal mapping. `threshold` is the prox-boundedness threshold
/// (infinity for indicators of closed sets).
struct ProxFriendly {
    std::function<double(const Vector&)> psi_value;          // may return +inf
    std::function<Vector(const Vector&, double)> prox;       // selected element of Prox_{lambda psi}(x)
    double threshold = std::numeric_limits<double>::infinity();
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

namespace psi {

inline ProxFriendly zero() {
    ProxFriendly p;
    p.psi_value = [](const Vector&) { return 0.0; };
    p.prox = [](const Vector& x, double) { return x; };
    return p;
}

inline ProxFriendly l1(double kappa) {
    ProxFriendly p;
    p.psi_value = [kappa](const Vector& x) { return kappa * x.lpNorm<1>(); };
    p.prox = [kappa](const Vector& x, double lambda) { return soft_threshold(x, kappa * lambda); };
    return p;
}

inline ProxFriendly indicator_finite(std::vector<Vector> candidates) {
    ProxFriendly p;
    p.psi_value = [candidates](const Vector& x) {
        for (const Vector& c : candidates)
            if ((x - c).lpNorm<Eigen::Infinity>() <= 1e-12) return 0.0;
        return kInf;
    };
    p.prox = [candidates](const Vector& x, double) { return project_finite(x, candidates); };
    return p;
}

inline ProxFriendly indicator_ball(Vector center, double r) {
    ProxFriendly p;
    p.psi_value = [center, r](const Vector& x) {
        return (x - center).norm() <= r + 1e-12 ? 0.0 : kInf;
    };
    p.prox = [center, r](const Vector& x, double) { return project_ball(x, center, r); };
    return p;
}

inline ProxFriendly indicator_box(Vector lo, Vector hi) {
    ProxFriendly p;
    p.psi_value = [lo, hi](const Vector& x) {
        for (int i = 0; i < x.size(); ++i)
            if (x[i] < lo[i] - 1e-12 || x[i] > hi[i] + 1e-12) return kInf;
        return 0.0;
    };
    p.prox = [lo, hi](const Vector& x, double) { return project_box(x, lo, hi); };
    return p;
}

inline ProxFriendly indicator_sphere(Vector center, double r) {
    ProxFriendly p;
    p.psi_value = [center, r](const Vector& x) {
        return std::abs((x - center).norm() - r) <= 1e-12 ? 0.0 : kInf;
    };
    p.prox = [center, r](const Vector& x, double) { return project_sphere(x, center, r); };
    return p;
}

inline ProxFriendly indicator_ball_union(double r) {
    ProxFriendly p;
    p.psi_value = [r](const Vector& x) {
        return (x - nearest_lattice_center(x)).norm() <= r + 1e-12 ? 0.0 : kInf;
    };
    p.prox = [r](const Vector& x, double) { return project_ball_union(x, r); };
    return p;
}

}  // namespace psi

}  // namespace rcsn

#endif  // RCSN_PROX_HPP
