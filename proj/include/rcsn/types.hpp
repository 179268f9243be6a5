#ifndef RCSN_TYPES_HPP
#define RCSN_TYPES_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcsn {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Outcome of a solver run.
enum class Status {
    Stationary,         // subgradient norm fell below the tolerance
    MaxIterations,      // iteration cap reached
    LinesearchFailure,  // backtracking shrank the step below the floor
    DirectionFailure,   // no acceptable direction at rho_max
    NonFiniteValue,     // oracle produced NaN/Inf at an accepted iterate
    TargetReached,      // objective fell below a caller-supplied target
};

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Stationary: return "stationary";
        case Status::MaxIterations: return "max_iterations";
        case Status::LinesearchFailure: return "linesearch_failure";
        case Status::DirectionFailure: return "direction_failure";
        case Status::NonFiniteValue: return "non_finite_value";
        case Status::TargetReached: return "target_reached";
    }
    return "unknown";
}

/// One accepted iterate together with the step data that produced it.
struct IterationRecord {
    int k = 0;
    Vector x;
    double phi = 0.0;
    double w_norm = 0.0;      // norm of the subgradient at the start of the step
    double d_norm = 0.0;
    double tau = 0.0;
    double rho = 0.0;
    int backtracks = 0;
    std::int64_t wall_ns = 0; // elapsed since run start
};

struct Trace {
    std::vector<IterationRecord> records;
    Status status = Status::MaxIterations;
    Vector final_x;

    int iterations() const { return static_cast<int>(records.empty() ? 0 : records.back().k); }
    double final_phi() const { return records.empty() ? 0.0 : records.back().phi; }
    int total_backtracks() const {
        int n = 0;
        for (const auto& r : records) n += r.backtracks;
        return n;
    }
};

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonFiniteValue : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProxUndefined : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SubproblemFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownFixture : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct KeyMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InsufficientData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rcsn

#endif  // RCSN_TYPES_HPP
