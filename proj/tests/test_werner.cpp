#include <catch2/catch_amalgamated.hpp>

#include "triwerner/werner.hpp"

using namespace triwerner;
using Catch::Approx;

TEST_CASE("state validity", "[werner]") {
    REQUIRE(is_valid_state({1, 0, 0, 0, 0}, 2));
    REQUIRE(is_valid_state({1, 0, 0, 0, 0}, 3));
    REQUIRE_FALSE(is_valid_state({0.4, 0.4, 0.3, 0, 0}, 3));  // r0 = 0.2 < 0.3

    const WernerPoint a{1.0 / 6, 1.0 / 6, 0, 0, 0};
    REQUIRE_FALSE(is_valid_state(a, 2));  // r_- > 0 impossible for qubits
    REQUIRE(is_valid_state(a, 3));

    // boundary points count as valid
    REQUIRE(is_valid_state({0.3, 0.2, 0.5, 0, 0}, 3));
}

TEST_CASE("dimension independence of validity above d = 2", "[werner]") {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        WernerPoint p = random_valid_point(3, rng);
        for (int d = 3; d <= 6; ++d) REQUIRE(is_valid_state(p, d));
        // scale outside the ball: invalid in every dimension
        const double n = p.bloch_norm();
        if (n > 1e-6) {
            const double f = 1.5 * p.r0() / n;
            const WernerPoint q{p.r_plus, p.r_minus, p.r1 * f, p.r2 * f, p.r3 * f};
            for (int d = 3; d <= 4; ++d) REQUIRE_FALSE(is_valid_state(q, d));
        }
    }
}

TEST_CASE("reconstruction of the fully symmetric point", "[werner]") {
    const ComplexMatrix rho = point_to_density_matrix({1, 0, 0, 0, 0}, 2);
    const ComplexMatrix want = r_operator(RBasis::plus, 2) / 4.0;
    REQUIRE((rho - want).cwiseAbs().maxCoeff() < 1e-14);
    REQUIRE(rho.trace().real() == Approx(1.0).margin(1e-13));
    REQUIRE(min_eigenvalue_hermitian(rho) > -1e-9);
}

TEST_CASE("reconstruction recovers the coordinates", "[werner]") {
    Rng rng(32);
    for (int d = 2; d <= 3; ++d)
        for (int trial = 0; trial < 100; ++trial) {
            const WernerPoint p = random_valid_point(d, rng);
            const WernerPoint q = density_matrix_to_point(point_to_density_matrix(p, d), d);
            REQUIRE(max_coordinate_distance(p, q) < 1e-10);
        }
}

TEST_CASE("Bloch boundary gives a vanishing eigenvalue", "[werner]") {
    Rng rng(33);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int d = 2; d <= 3; ++d)
        for (int trial = 0; trial < 25; ++trial) {
            const double rp = 0.05 + 0.3 * unit(rng);
            const double rm = (d == 2) ? 0.0 : 0.05 + 0.3 * unit(rng);
            const double r0 = 1.0 - rp - rm;
            double v[3] = {2 * unit(rng) - 1, 2 * unit(rng) - 1, 2 * unit(rng) - 1};
            const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
            for (double& x : v) x *= r0 / n;
            const WernerPoint p{rp, rm, v[0], v[1], v[2]};
            REQUIRE(std::abs(min_eigenvalue_hermitian(point_to_density_matrix(p, d))) < 1e-9);
        }
}

TEST_CASE("reconstruction rejects invalid points", "[werner]") {
    REQUIRE_THROWS_AS(point_to_density_matrix({0.4, 0.4, 0.3, 0, 0}, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(point_to_density_matrix({1.0 / 6, 1.0 / 6, 0, 0, 0}, 2), std::invalid_argument);
}

TEST_CASE("coordinates of the maximally mixed state", "[werner]") {
    {
        const ComplexMatrix rho = ComplexMatrix::Identity(8, 8) / 8.0;
        const WernerPoint p = density_matrix_to_point(rho, 2);
        REQUIRE(p.r_plus == Approx(0.5).margin(1e-13));
        REQUIRE(p.r_minus == Approx(0.0).margin(1e-13));
        REQUIRE(p.bloch_norm() == Approx(0.0).margin(1e-13));
    }
    {
        const ComplexMatrix rho = ComplexMatrix::Identity(27, 27) / 27.0;
        const WernerPoint p = density_matrix_to_point(rho, 3);
        REQUIRE(p.r_plus == Approx(10.0 / 27).margin(1e-13));
        REQUIRE(p.r_minus == Approx(1.0 / 27).margin(1e-13));
        REQUIRE(p.bloch_norm() == Approx(0.0).margin(1e-13));
    }
}

TEST_CASE("coordinates of the G vector", "[werner]") {
    // (|112> - |121> - sqrt(3)|122>)/sqrt(5) twirls to (1/5, 0, 0, 0, 0)
    PureVector psi = PureVector::Zero(8);
    psi(0 * 4 + 0 * 2 + 1) = 1.0 / std::sqrt(5.0);
    psi(0 * 4 + 1 * 2 + 0) = -1.0 / std::sqrt(5.0);
    psi(0 * 4 + 1 * 2 + 1) = -std::sqrt(3.0) / std::sqrt(5.0);
    const WernerPoint p = density_matrix_to_point(psi * psi.adjoint(), 2);
    REQUIRE(p.r_plus == Approx(0.2).margin(1e-14));
    REQUIRE(p.r_minus == Approx(0.0).margin(1e-14));
    REQUIRE(std::abs(p.r1) < 1e-14);
    REQUIRE(std::abs(p.r2) < 1e-14);
    REQUIRE(std::abs(p.r3) < 1e-14);
}

TEST_CASE("density_matrix_to_point rejects non-states", "[werner]") {
    ComplexMatrix not_hermitian = ComplexMatrix::Zero(8, 8);
    not_hermitian(0, 1) = 1.0;
    REQUIRE_THROWS_AS(density_matrix_to_point(not_hermitian, 2), std::invalid_argument);

    const ComplexMatrix wrong_trace = ComplexMatrix::Identity(8, 8);
    REQUIRE_THROWS_AS(density_matrix_to_point(wrong_trace, 2), std::invalid_argument);

    ComplexMatrix not_psd = ComplexMatrix::Identity(8, 8) / 8.0;
    not_psd(0, 0) = -0.25;
    not_psd(1, 1) = 0.5;
    REQUIRE_THROWS_AS(density_matrix_to_point(not_psd, 2), std::invalid_argument);
}

TEST_CASE("Monte-Carlo twirl fixes invariant states sample by sample", "[werner]") {
    Rng rng(34);
    const WernerPoint p = random_valid_point(3, rng);
    const ComplexMatrix rho = point_to_density_matrix(p, 3);
    const ComplexMatrix t = twirl_monte_carlo(rho, 3, 20, rng);
    REQUIRE((t - rho).cwiseAbs().maxCoeff() < 1e-12);
    REQUIRE(t.trace().real() == Approx(1.0).margin(1e-13));
}

TEST_CASE("Monte-Carlo twirl converges to the reconstruction", "[werner]") {
    PureVector psi = PureVector::Zero(8);
    psi(0) = 1.0;  // |111>
    const ComplexMatrix rho = psi * psi.adjoint();
    const ComplexMatrix mc = twirl_monte_carlo(rho, 2, 2000, 4242);
    const ComplexMatrix exact = point_to_density_matrix({1, 0, 0, 0, 0}, 2);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> dev(0.5 * ((mc - exact) + (mc - exact).adjoint()));
    const double opnorm = dev.eigenvalues().cwiseAbs().maxCoeff();
    REQUIRE(opnorm < 5e-2);
    REQUIRE(mc.trace().real() == Approx(1.0).margin(1e-12));
}

TEST_CASE("relabeling fixed sets", "[werner]") {
    // (23)-relabeling fixes exactly the plane r2 = r3 = 0
    const WernerPoint fixed{0.2, 0.1, 0.4, 0, 0};
    REQUIRE(max_coordinate_distance(relabel_point(fixed, Perm::swap23), fixed) < 1e-15);
    const WernerPoint moved{0.2, 0.1, 0.4, 0.1, 0};
    REQUIRE(max_coordinate_distance(relabel_point(moved, Perm::swap23), moved) > 0.05);

    // cyclic relabeling fixes exactly the line r1 = r2 = 0
    const WernerPoint axis{0.2, 0.1, 0, 0, 0.3};
    REQUIRE(max_coordinate_distance(relabel_point(axis, Perm::cycle123), axis) < 1e-15);
    const WernerPoint off{0.2, 0.1, 0.1, 0, 0.3};
    REQUIRE(max_coordinate_distance(relabel_point(off, Perm::cycle123), off) > 0.05);
}

TEST_CASE("relabeling matches matrix conjugation", "[werner]") {
    Rng rng(35);
    for (int trial = 0; trial < 100; ++trial) {
        const WernerPoint p = random_valid_point(3, rng);
        const ComplexMatrix rho = point_to_density_matrix(p, 3);
        for (Perm s : all_perms) {
            const ComplexMatrix v = perm_operator(s, 3);
            const WernerPoint got = density_matrix_to_point(v * rho * v.adjoint(), 3);
            REQUIRE(max_coordinate_distance(got, relabel_point(p, s)) < 1e-10);
        }
    }
}

TEST_CASE("relabeling is a group action", "[werner]") {
    const WernerPoint p{0.22, 0.13, 0.25, -0.17, 0.08};
    for (Perm s : all_perms)
        for (Perm t : all_perms) {
            const WernerPoint a = relabel_point(relabel_point(p, s), t);
            const WernerPoint b = relabel_point(p, compose(t, s));
            REQUIRE(max_coordinate_distance(a, b) < 1e-14);
        }
}

TEST_CASE("permutation average", "[werner]") {
    const WernerPoint p{0.3, 0.1, 0.2, -0.1, 0.05};
    const WernerPoint avg = permutation_average(p);
    REQUIRE(avg == WernerPoint{0.3, 0.1, 0, 0, 0});
    REQUIRE(permutation_average(avg) == avg);

    // agrees with averaging the six relabelings coordinate-wise
    double sum[3] = {0, 0, 0};
    for (Perm s : all_perms) {
        const WernerPoint q = relabel_point(p, s);
        sum[0] += q.r1;
        sum[1] += q.r2;
        sum[2] += q.r3;
    }
    for (double x : sum) REQUIRE(std::abs(x / 6.0) < 1e-15);

    // and with averaging the six conjugated matrices
    const ComplexMatrix rho = point_to_density_matrix(p, 3);
    ComplexMatrix acc = ComplexMatrix::Zero(27, 27);
    for (Perm s : all_perms) {
        const ComplexMatrix v = perm_operator(s, 3);
        acc += v * rho * v.adjoint();
    }
    const WernerPoint got = density_matrix_to_point(acc / 6.0, 3);
    REQUIRE(max_coordinate_distance(got, avg) < 1e-12);
}
