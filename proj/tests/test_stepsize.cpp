#include "rcsn/stepsize.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace rcsn;

TEST_CASE("constant trial stepsize") {
    TrialStepsize s(stepsize::Constant{50.0}, 1e-8);
    CHECK(s.next_trial() == 50.0);
    s.record(50.0, 0.4);
    CHECK(s.next_trial() == 50.0);
}

TEST_CASE("self-adaptive trial stepsize") {
    SECTION("two consecutive unshrunk acceptances trigger growth") {
        TrialStepsize s(stepsize::SelfAdaptive{2.0, 1.0}, 1e-8);
        s.record(1.0, 1.0);
        s.record(2.0, 2.0);
        CHECK(s.next_trial() == 4.0);
    }
    SECTION("a shrunk acceptance restarts from the accepted value") {
        TrialStepsize s(stepsize::SelfAdaptive{2.0, 1.0}, 1e-8);
        s.record(1.0, 1.0);
        s.record(2.0, 0.4);
        CHECK(s.next_trial() == 0.4);
    }
    SECTION("tiny accepted stepsizes are floored at t_min") {
        TrialStepsize s(stepsize::SelfAdaptive{2.0, 1.0}, 1e-8);
        s.record(1.0, 1.0);
        s.record(1e-4, 1e-12);
        CHECK(s.next_trial() == 1e-8);
    }
    SECTION("first trial is the configured initial value") {
        TrialStepsize s(stepsize::SelfAdaptive{4.0, 1.0}, 1e-6);
        CHECK(s.next_trial() == 1.0);
        s.record(1.0, 1.0);
        CHECK(s.next_trial() == 1.0);  // only one acceptance so far
    }
    SECTION("every emitted trial respects the floor, any history") {
        TrialStepsize s(stepsize::SelfAdaptive{3.0, 1e-10}, 1e-8);
        CHECK(s.next_trial() >= 1e-8);
        double histories[][2] = {{1e-9, 1e-12}, {2.0, 2.0}, {5.0, 1e-13}, {1e-8, 1e-8}};
        for (auto& h : histories) {
            s.record(h[0], h[1]);
            CHECK(s.next_trial() >= 1e-8);
        }
    }
    SECTION("all-unshrunk runs grow geometrically from the second step on") {
        TrialStepsize s(stepsize::SelfAdaptive{2.0, 1.0}, 1e-8);
        double trial = s.next_trial();
        s.record(trial, trial);
        trial = s.next_trial();
        s.record(trial, trial);
        double prev = trial;
        for (int k = 2; k < 10; ++k) {
            trial = s.next_trial();
            CHECK(trial == 2.0 * prev);
            s.record(trial, trial);
            prev = trial;
        }
    }
}
