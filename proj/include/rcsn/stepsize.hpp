#ifndef RCSN_STEPSIZE_HPP
#define RCSN_STEPSIZE_HPP

#include "rcsn/config.hpp"

#include <algorithm>
#include <optional>
#include <variant>

namespace rcsn {

/// Trial-stepsize generator. The self-adaptive variant remembers the last two
/// (trial, accepted) pairs: after two consecutive unshrunk acceptances the next
/// trial grows by gamma, otherwise it restarts from the last accepted value
/// floored at t_min. Emitted trials are always >= t_min.
class TrialStepsize {
public:
    TrialStepsize(StepsizeConfig config, double t_min)
        : config_(std::move(config)), t_min_(t_min) {}

    double next_trial() const {
        if (const auto* c = std::get_if<stepsize::Constant>(&config_))
            return std::max(c->tau_bar, t_min_);
        const auto& a = std::get<stepsize::SelfAdaptive>(config_);
        if (!prev_) return std::max(a.tau_bar0, t_min_);
        if (!prev2_) return std::max(prev_->accepted, t_min_);
        if (prev2_->accepted == prev2_->trial && prev_->accepted == prev_->trial)
            return std::max(a.gamma * prev_->accepted, t_min_);
        return std::max(prev_->accepted, t_min_);
    }

    void record(double trial, double accepted) {
        prev2_ = prev_;
        prev_ = Pair{trial, accepted};
    }

private:
    struct Pair {
        double trial;
        double accepted;
    };

    StepsizeConfig config_;
    double t_min_;
    std::optional<Pair> prev_;   // iteration k-1
    std::optional<Pair> prev2_;  // iteration k-2
};

}  // namespace rcsn

#endif  // RCSN_STEPSIZE_HPP
