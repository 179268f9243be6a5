#ifndef RCSN_DIAGNOSTICS_HPP
#define RCSN_DIAGNOSTICS_HPP

#include "rcsn/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace rcsn {

enum class RateKind { Finite, Linear, Superlinear, Quadratic, Unclassified };

inline const char* to_string(RateKind k) {
    switch (k) {
        case RateKind::Finite: return "finite";
        case RateKind::Linear: return "linear";
        case RateKind::Superlinear: return "superlinear";
        case RateKind::Quadratic: return "quadratic";
        case RateKind::Unclassified: return "unclassified";
    }
    return "unknown";
}

struct RateClass {
    RateKind kind = RateKind::Unclassified;
    double mu = std::numeric_limits<double>::quiet_NaN();     // linear rate estimate
    double bound = std::numeric_limits<double>::quiet_NaN();  // max raw e_{k+1}/e_k^2 in window
};

/// Classifies the convergence rate of the error sequence e_k = ||x_k - x_star||
/// over the last max(5, 20%) usable values. Errors at or below floating-point
/// resolution (4 eps (1 + ||x_star||)) are treated as exact arrivals: a
/// sequence that collapses to the floor before enough ratios can be measured
/// is Finite. Ratios are formed on the e_0-normalized sequence, making the
/// classification invariant under uniform rescaling.
inline RateClass classify_rate(const Trace& trace, const Vector& x_star) {
    std::vector<double> e;
    e.reserve(trace.records.size());
    for (const auto& r : trace.records) e.push_back((r.x - x_star).norm());

    bool hit_floor = false;
    for (std::size_t k = 1; k < e.size(); ++k) {
        if (e[k] == 0.0) {
            e.resize(k);
            hit_floor = true;
            break;
        }
    }
    const double floor = 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + x_star.norm());
    while (e.size() > 1 && e.back() <= floor) {
        e.pop_back();
        hit_floor = true;
    }

    if (e.size() < 4) {
        if (hit_floor) return {RateKind::Finite, 0.0, 0.0};
        throw InsufficientData("need at least 4 usable error values, have " +
                               std::to_string(e.size()));
    }

    const int n_ratios = static_cast<int>(e.size()) - 1;
    const int window = std::min(n_ratios, std::max(5, (n_ratios + 4) / 5));
    const int first = n_ratios - window;

    const double scale = e.front();
    double q_hat_max = 0.0, q_raw_max = 0.0;
    double r_min = std::numeric_limits<double>::infinity(), r_max = 0.0, r_sum = 0.0;
    bool r_decreasing = true;
    double r_prev = std::numeric_limits<double>::infinity();
    for (int k = first; k < n_ratios; ++k) {
        const double r = e[k + 1] / e[k];
        const double q_raw = e[k + 1] / (e[k] * e[k]);
        q_raw_max = std::max(q_raw_max, q_raw);
        q_hat_max = std::max(q_hat_max, q_raw * scale);
        r_min = std::min(r_min, r);
        r_max = std::max(r_max, r);
        r_sum += r;
        if (r > r_prev * (1.0 + 1e-9)) r_decreasing = false;
        r_prev = r;
    }
    const double r_mean = r_sum / window;

    if (q_hat_max <= 10.0 && r_min < 0.1) return {RateKind::Quadratic, r_mean, q_raw_max};
    if (r_decreasing && r_prev < 0.1) return {RateKind::Superlinear, r_mean, q_raw_max};
    if (r_max < 1.0 && r_min > 0.0 && (r_max - r_min) <= 0.1 * r_max)
        return {RateKind::Linear, r_mean, q_raw_max};
    return {RateKind::Unclassified, r_mean, q_raw_max};
}

struct ComparisonCount {
    int lower = 0;   // challenger strictly below reference by more than tol
    int higher = 0;  // challenger strictly above reference by more than tol
    int tie = 0;
};

/// Win/loss counting of challenger objective values against a reference
/// solver, keyed by instance. Throws KeyMismatch when the key sets disagree.
inline ComparisonCount compare_values(const std::map<std::string, double>& challenger,
                                      const std::map<std::string, double>& reference,
                                      double tol = 1e-6) {
    if (challenger.size() != reference.size())
        throw KeyMismatch("challenger and reference cover different instance sets");
    ComparisonCount out;
    for (const auto& [key, value] : challenger) {
        auto it = reference.find(key);
        if (it == reference.end()) throw KeyMismatch("missing reference value for " + key);
        if (value < it->second - tol)
            ++out.lower;
        else if (value > it->second + tol)
            ++out.higher;
        else
            ++out.tie;
    }
    return out;
}

}  // namespace rcsn

#endif  // RCSN_DIAGNOSTICS_HPP
