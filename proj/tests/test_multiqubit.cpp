#include "doctest.h"
#include "helpers.hpp"

using namespace entangle;
using namespace entangle::testing;

TEST_CASE("dephasing Kraus pair is complete") {
    for (int i = 0; i <= 200; ++i) {
        const double z = -1 + 2.0 * i / 200;
        const auto [e0, e1] = dephasing_kraus(z);
        const Eigen::Matrix2cd sum = e0.adjoint() * e0 + e1.adjoint() * e1;
        CHECK((sum - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <= 1e-14);
    }
    CHECK_THROWS_AS(dephasing_kraus(1.0001), PreconditionError);
    CHECK_THROWS_AS(dephasing_kraus(-1.5), PreconditionError);
}

TEST_CASE("kraus_dephase") {
    Rng rng(21);
    SUBCASE("zeta = 1 is the identity channel") {
        const auto rho = random_density(rng, 3);
        CHECK(max_abs_diff(kraus_dephase(rho, 1.0, 3), rho) < 1e-15);
    }
    SUBCASE("zeta = 0 turns GHZ into the classical cat mixture") {
        for (int n = 2; n <= 5; ++n) {
            const auto out = kraus_dephase(ghz_state<double>(n), 0.0, n);
            DensityMatrixd expected = DensityMatrixd::Zero(1 << n, 1 << n);
            expected(0, 0) = expected((1 << n) - 1, (1 << n) - 1) = 0.5;
            CHECK(max_abs_diff(out, expected) < 1e-15);
        }
    }
    SUBCASE("operator sum equals the elementwise zeta^popcount rule") {
        for (int n = 2; n <= 3; ++n)
            for (double z : {-0.7, 0.0, 0.3, 0.9}) {
                const auto rho = random_density(rng, n);
                CHECK(max_abs_diff(kraus_dephase(rho, z, n), dephase_elementwise(rho, z)) < 1e-14);
            }
    }
    SUBCASE("trace and positivity are preserved") {
        for (int n = 1; n <= 5; ++n)
            for (int i = 0; i < 6; ++i) {
                const double z = uniform(rng, -1, 1);
                const auto rho = (i % 2 == 0) ? random_density(rng, n) : random_pure(rng, n);
                const auto out = kraus_dephase(rho, z, n);
                CHECK(std::abs(out.trace().real() - 1) < 1e-13);
                CHECK(is_physical(out, 1e-12));
            }
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(kraus_dephase(ghz_state<double>(3), 1.2, 3), PreconditionError);
        CHECK_THROWS_AS(kraus_dephase(ghz_state<double>(3), 0.5, 2), PreconditionError);
    }
}

TEST_CASE("GHZ and W states") {
    DensityMatrixd bell_phi = DensityMatrixd::Zero(4, 4);
    bell_phi(0, 0) = bell_phi(0, 3) = bell_phi(3, 0) = bell_phi(3, 3) = 0.5;
    CHECK(max_abs_diff(ghz_state<double>(2), bell_phi) == 0);
    CHECK(max_abs_diff(w_state<double>(2), bell_psi_plus()) < 1e-15);

    Eigen::VectorXcd w3 = Eigen::VectorXcd::Zero(8);
    w3[0b001] = w3[0b010] = w3[0b100] = 1 / std::sqrt(3.0);
    CHECK(max_abs_diff(w_state<double>(3), ket_projector(w3)) < 1e-15);

    for (int n = 2; n <= 5; ++n) {
        CHECK(is_physical(ghz_state<double>(n)));
        CHECK(is_physical(w_state<double>(n)));
        CHECK((ghz_state<double>(n) * ghz_state<double>(n) - ghz_state<double>(n)).cwiseAbs().maxCoeff() < 1e-15);
    }
    CHECK_THROWS_AS(ghz_state<double>(1), PreconditionError);
    CHECK_THROWS_AS(w_state<double>(1), PreconditionError);
}

TEST_CASE("closed-form negativities") {
    CHECK(negativity_ghz_closed(1.0, 3) == 0.5);
    CHECK(negativity_w_closed(1.0, 2) == doctest::Approx(0.5));
    CHECK(negativity_w_closed(0.5, 4) == doctest::Approx(std::sqrt(3.0) / 16));
    CHECK(negativity_w_closed(0.5, 4) == doctest::Approx(0.10825317547305482));

    // Values frozen from an independent numpy Kraus + partial-transpose run.
    CHECK(negativity_ghz_closed(0.5, 4) == doctest::Approx(0.03125));
    CHECK(negativity_ghz_closed(0.75, 5) == doctest::Approx(0.11865234375));
    CHECK(negativity_ghz_closed(0.25, 2) == doctest::Approx(0.03125));
    // The |zeta|^3 form, kept selectable, disagrees away from N = 3.
    CHECK(negativity_ghz_closed(0.5, 4, GhzExponent::Cubic) == doctest::Approx(0.0625));
    CHECK(negativity_ghz_closed(0.5, 3, GhzExponent::Cubic) == negativity_ghz_closed(0.5, 3));
    CHECK(negativity_ghz_closed(-0.5, 3) == negativity_ghz_closed(0.5, 3));

    CHECK_THROWS_AS(negativity_ghz_closed(1.5, 3), PreconditionError);
    CHECK_THROWS_AS(negativity_w_closed(0.5, 1), PreconditionError);
}

TEST_CASE("closed forms agree with Kraus evolution and partial transpose") {
    for (int n = 2; n <= 5; ++n) {
        for (double z : {0.0, 0.25, 0.5, 0.75, 1.0, -0.6}) {
            const double ghz = negativity(kraus_dephase(ghz_state<double>(n), z, n), Partition{0});
            const double w = negativity(kraus_dephase(w_state<double>(n), z, n), Partition{0});
            CHECK(std::abs(ghz - negativity_ghz_closed(z, n)) <= 1e-10);
            CHECK(std::abs(w - negativity_w_closed(z, n)) <= 1e-10);
        }
    }
}

TEST_CASE("negativity does not depend on which qubit is transposed for symmetric states") {
    for (int n = 2; n <= 5; ++n) {
        for (double z : {1.0, 0.8, 0.35}) {
            for (const auto& rho0 : {ghz_state<double>(n), w_state<double>(n)}) {
                const auto rho = kraus_dephase(rho0, z, n);
                double lo = 1;
                double hi = 0;
                for (int k = 0; k < n; ++k) {
                    const double v = negativity(rho, Partition{k});
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
                CHECK(hi - lo <= 1e-12);
            }
        }
    }
}

TEST_CASE("ghz_bloch") {
    SUBCASE("pure GHZ sits on the equator") {
        const auto b = ghz_bloch(ghz_state<double>(4));
        CHECK(b.n_x == doctest::Approx(1));
        CHECK(b.n_y == doctest::Approx(0));
        CHECK(b.n_z == doctest::Approx(0));
        CHECK(ghz_bloch_negativity(b) == doctest::Approx(0.5));
    }
    SUBCASE("fully dephased GHZ is on the axis") {
        const auto b = ghz_bloch(kraus_dephase(ghz_state<double>(3), 0.0, 3));
        CHECK(b.n_x == 0.0);
        CHECK(ghz_bloch_negativity(b) == 0.0);
    }
    SUBCASE("dephased GHZ: n_X = zeta^N and the modulus form matches the oracle") {
        for (int n = 2; n <= 5; ++n)
            for (double z : {0.2, 0.5, 0.9}) {
                const auto rho = kraus_dephase(ghz_state<double>(n), z, n);
                const auto b = ghz_bloch(rho);
                CHECK(b.n_x == doctest::Approx(std::pow(z, n)));
                CHECK(std::abs(ghz_bloch_negativity(b) - negativity(rho)) < 1e-12);
            }
    }
    SUBCASE("complex coherence and unequal populations") {
        DensityMatrixd rho = DensityMatrixd::Zero(8, 8);
        rho(0, 0) = 0.7;
        rho(7, 7) = 0.3;
        rho(0, 7) = Cd(0.2, -0.1);
        rho(7, 0) = std::conj(rho(0, 7));
        const auto b = ghz_bloch(rho);
        CHECK(b.n_x == doctest::Approx(0.4));
        CHECK(b.n_y == doctest::Approx(0.2));
        CHECK(b.n_z == doctest::Approx(0.4));
        CHECK(ghz_bloch_negativity(b) == doctest::Approx(negativity(rho)).epsilon(1e-12));
        // The squared form undershoots off the equator.
        CHECK(ghz_bloch_negativity(b, GhzBlochForm::Squared) < negativity(rho) - 0.05);
    }
    SUBCASE("support outside the cat states") {
        CHECK_THROWS_AS(ghz_bloch(w_state<double>(3)), PreconditionError);
    }
}

TEST_CASE("W-basis negativity matches the direct value on dephased W states") {
    for (int n = 2; n <= 5; ++n)
        for (double z : {0.0, 0.3, 0.6, 1.0})
            for (int k = 0; k < n; ++k) {
                const auto rho = kraus_dephase(w_state<double>(n), z, n);
                const auto beta = w_coherences(rho, Partition{k});
                CHECK(beta.beta.size() == static_cast<std::size_t>(n - 1));
                CHECK(std::abs(negativity_w_basis(beta) - negativity(rho, Partition{k})) <= 1e-10);
            }
}
