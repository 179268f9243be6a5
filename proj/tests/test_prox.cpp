#include "rcsn/prox.hpp"
#include "rcsn/problems.hpp"

#include "test_helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace rcsn;

TEST_CASE("project_ball") {
    const Vector c = Vector::Zero(2);
    CHECK((project_ball(Vector{{3.0, 0.0}}, c, 1.0) - Vector{{1.0, 0.0}}).norm() == 0.0);

    SECTION("interior points are fixed") {
        const Vector x{{0.2, -0.3}};
        CHECK((project_ball(x, c, 1.0) - x).norm() == 0.0);
    }
    SECTION("idempotence and minimality against random feasible points") {
        RngStream rng(5, 0);
        for (int i = 0; i < 50; ++i) {
            const Vector x = rng.uniform_vector(3, -4.0, 4.0);
            const Vector p = project_ball(x, Vector::Zero(3), 1.5);
            CHECK((project_ball(p, Vector::Zero(3), 1.5) - p).norm() <= 1e-15);
            const double dist = (x - p).norm();
            for (int j = 0; j < 200; ++j) {
                const Vector q = rng.uniform_in_ball(3, 1.5);
                CHECK(dist <= (x - q).norm() + 1e-12);
            }
        }
    }
}

TEST_CASE("project_ball_union") {
    SECTION("derived two-dimensional case") {
        const Vector p = project_ball_union(Vector{{0.6, 0.2}}, 0.25);
        CHECK(p[0] == Catch::Approx(0.776393202250021).epsilon(1e-14));
        CHECK(p[1] == Catch::Approx(0.111803398874989).epsilon(1e-13));
    }
    SECTION("feasible points are fixed") {
        const Vector x{{1.1, -2.05}};
        CHECK((project_ball_union(x, 0.25) - x).norm() == 0.0);
    }
    SECTION("center tie breaks toward the smaller integer") {
        const Vector p = project_ball_union(Vector{{0.5, 0.0}}, 0.25);
        CHECK(p[0] == Catch::Approx(0.25));
        CHECK(p[1] == 0.0);
    }
    SECTION("nearest center matches the exhaustive argmin over all 9^n centers") {
        RngStream rng(17, 0);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 2 + trial % 2;
            const Vector x = rng.uniform_vector(n, -6.0, 6.0);
            const Vector fast = nearest_lattice_center(x);
            // exhaustive scan
            Vector best;
            double best_d = std::numeric_limits<double>::infinity();
            std::vector<int> idx(n, 0);
            const int total = static_cast<int>(std::pow(9, n));
            for (int code = 0; code < total; ++code) {
                int rem = code;
                Vector c(n);
                for (int i = 0; i < n; ++i) {
                    c[i] = rem % 9 - 4;
                    rem /= 9;
                }
                const double d = (x - c).norm();
                if (d < best_d - 1e-15) {
                    best_d = d;
                    best = c;
                }
            }
            CHECK((x - fast).norm() == Catch::Approx(best_d).margin(1e-12));
        }
    }
}

TEST_CASE("project_finite") {
    const std::vector<Vector> pair = {Vector::Constant(1, -1.0), Vector::Constant(1, 1.0)};
    CHECK(project_finite(Vector::Zero(1), pair)[0] == -1.0);  // tie rule
    CHECK(project_finite(Vector::Constant(1, 0.3), pair)[0] == 1.0);

    SECTION("matches exhaustive argmin on random sets") {
        RngStream rng(23, 0);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Vector> candidates;
            for (int i = 0; i < 12; ++i) candidates.push_back(rng.uniform_vector(3, -2.0, 2.0));
            const Vector x = rng.uniform_vector(3, -2.0, 2.0);
            const Vector p = project_finite(x, candidates);
            for (const auto& c : candidates) CHECK((x - p).norm() <= (x - c).norm() + 1e-15);
        }
    }
}

TEST_CASE("soft_threshold") {
    const Vector r = soft_threshold(Vector{{2.0, -0.5}}, 1.0);
    CHECK(r[0] == 1.0);
    CHECK(r[1] == 0.0);

    SECTION("large threshold zeroes everything") {
        const Vector x{{0.3, -0.9, 0.1}};
        CHECK(soft_threshold(x, 1.0).norm() == 0.0);
    }
    SECTION("matches the grid prox of kappa |.| in one dimension") {
        RngStream rng(29, 0);
        for (int trial = 0; trial < 20; ++trial) {
            const double x = rng.uniform(-3.0, 3.0);
            const double kappa = rng.uniform(0.1, 2.0);
            double best_z = 0.0, best = std::numeric_limits<double>::infinity();
            for (double z = -4.0; z <= 4.0; z += 1e-4) {
                const double v = kappa * std::abs(z) + 0.5 * (z - x) * (z - x);
                if (v < best) {
                    best = v;
                    best_z = z;
                }
            }
            CHECK(soft_threshold(Vector::Constant(1, x), kappa)[0] ==
                  Catch::Approx(best_z).margin(2e-4));
        }
    }
}

TEST_CASE("prox selections minimize the prox objective on fixtures") {
    RngStream rng(31, 0);
    const double lambda = 0.7;
    const auto check_prox = [&](const ProxFriendly& psi, int dim) {
        for (int trial = 0; trial < 40; ++trial) {
            const Vector x = rng.uniform_vector(dim, -5.0, 5.0);
            const Vector p = psi.prox(x, lambda);
            const double val = psi.psi_value(p) + (x - p).squaredNorm() / (2.0 * lambda);
            for (int j = 0; j < 300; ++j) {
                const Vector q = rng.uniform_vector(dim, -5.0, 5.0);
                const double qv = psi.psi_value(q);
                if (std::isfinite(qv))
                    CHECK(val <= qv + (x - q).squaredNorm() / (2.0 * lambda) + 1e-10);
            }
        }
    };
    check_prox(psi::zero(), 2);
    check_prox(psi::l1(0.8), 2);
    check_prox(psi::indicator_ball(Vector::Zero(2), 2.0), 2);
    check_prox(psi::indicator_box(Vector::Constant(2, -1.0), Vector::Constant(2, 1.0)), 2);
}
