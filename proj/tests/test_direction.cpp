#include "rcsn/direction.hpp"

#include "test_helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace rcsn;

TEST_CASE("solve_direction") {
    SECTION("identity system") {
        const Vector d = solve_direction(Matrix::Identity(2, 2), 0.0, Vector{{1.0, 0.0}});
        CHECK(d[0] == Catch::Approx(-1.0));
        CHECK(d[1] == Catch::Approx(0.0).margin(1e-15));
    }
    SECTION("rank-deficient Hessian element with regularization") {
        Matrix a = Matrix::Zero(2, 2);
        a(0, 0) = 1.0;
        const Vector d = solve_direction(a, 2.0, Vector{{0.0, 1.0}});
        CHECK(d[0] == Catch::Approx(0.0).margin(1e-15));
        CHECK(d[1] == Catch::Approx(-0.5).epsilon(1e-14));
    }
    SECTION("random symmetric systems meet the residual bound") {
        RngStream rng(3, 0);
        for (int trial = 0; trial < 50; ++trial) {
            Matrix a(3, 3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = rng.uniform(-2.0, 2.0);
            const double rho = a.cwiseAbs().rowwise().sum().maxCoeff() + 1.0;
            const Vector w = rng.uniform_vector(3, -1.0, 1.0);
            const Vector d = solve_direction(a, rho, w);
            const Matrix m = a + rho * Matrix::Identity(3, 3);
            CHECK((m * d + w).norm() <= 1e-10 * w.norm());

            // spectral reference solve
            Eigen::SelfAdjointEigenSolver<Matrix> eig(m);
            const Vector ref = eig.eigenvectors() *
                               (eig.eigenvectors().transpose() * (-w)).cwiseQuotient(
                                   eig.eigenvalues());
            CHECK((d - ref).norm() <= 1e-9 * (1.0 + ref.norm()));
        }
    }
    SECTION("singular unregularized system throws") {
        Matrix a = Matrix::Zero(2, 2);
        a(0, 0) = 1.0;
        CHECK_THROWS_AS(solve_direction(a, 0.0, Vector{{0.0, 1.0}}), SingularSystem);
    }
}

TEST_CASE("descent_certificate") {
    CHECK(descent_certificate(Vector{{0.0, 1.0}}, Vector{{0.0, -0.5}}, 0.1));
    CHECK_FALSE(descent_certificate(Vector{{1.0, 0.0}}, Vector{{1.0, 0.0}}, 0.1));
    CHECK(descent_certificate(Vector{{1.0, 0.0}}, Vector::Zero(2), 0.1));  // vacuous at d = 0
}

TEST_CASE("rho escalation") {
    SolverConfig config;
    config.zeta = 0.1;
    config.rho_max = 100.0;
    config.rho_strategy = rho::Constant{0.0};

    SECTION("indefinite element escalates until the certificate holds") {
        Matrix a(2, 2);
        a << 1.0, 0.0, 0.0, -1.0;
        const Vector w{{0.0, 1.0}};
        const auto res = escalate_rho(a, w, config, 0, w.norm());
        REQUIRE(res.ok);
        // lambda_min + rho >= zeta forces rho >= 1.1
        CHECK(res.rho >= 1.1);
        CHECK(descent_certificate(w, res.d, config.zeta));
        CHECK((a * res.d + res.rho * res.d + w).norm() <= 1e-10 * w.norm());
    }
    SECTION("positive definite element with lambda_min >= zeta needs no escalation") {
        Matrix a(2, 2);
        a << 2.0, 0.3, 0.3, 1.5;
        const Vector w{{0.4, -0.2}};
        const auto res = escalate_rho(a, w, config, 0, w.norm());
        REQUIRE(res.ok);
        CHECK(res.rho == 0.0);
    }
    SECTION("rho_max smaller than required fails") {
        Matrix a(2, 2);
        a << 1.0, 0.0, 0.0, -1.0;
        config.rho_max = 0.5;
        const auto res = escalate_rho(a, Vector{{0.0, 1.0}}, config, 0, 1.0);
        CHECK_FALSE(res.ok);
        CHECK(res.rho == 0.5);
    }
    SECTION("adaptive-norm strategy scales the certificate threshold") {
        Matrix a = 3.0 * Matrix::Identity(2, 2);
        SolverConfig adaptive = config;
        adaptive.rho_strategy = rho::AdaptiveNorm{2.0};
        const Vector w{{0.3, 0.4}};  // norm 0.5
        const auto res = escalate_rho(a, w, adaptive, 0, w.norm());
        REQUIRE(res.ok);
        CHECK(res.zeta == Catch::Approx(1.0));              // c * ||w||
        CHECK(res.rho == Catch::Approx(1.0 + config.zeta)); // c * ||w|| + zeta
    }
}
