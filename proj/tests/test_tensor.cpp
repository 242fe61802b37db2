#include <catch2/catch_amalgamated.hpp>

#include "triwerner/tensor.hpp"

using namespace triwerner;
using Catch::Approx;

namespace {
ComplexMatrix random_matrix(int rows, int cols, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m(i, j) = Complex(gauss(rng), gauss(rng));
    return m;
}
}  // namespace

TEST_CASE("kron basics", "[tensor]") {
    const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
    REQUIRE((kron(i2, i2) - ComplexMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

    ComplexMatrix p0 = ComplexMatrix::Zero(2, 2), p1 = ComplexMatrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    ComplexMatrix want = ComplexMatrix::Zero(4, 4);
    want(1, 1) = 1.0;
    REQUIRE((kron(p0, p1) - want).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("kron index formula", "[tensor]") {
    Rng rng(11);
    const ComplexMatrix a = random_matrix(2, 2, rng), b = random_matrix(2, 2, rng);
    const ComplexMatrix k = kron(a, b);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int l = 0; l < 2; ++l)
                for (int m = 0; m < 2; ++m)
                    REQUIRE(std::abs(k(i * 2 + l, j * 2 + m) - a(i, j) * b(l, m)) < 1e-15);
}

TEST_CASE("kron associativity", "[tensor]") {
    Rng rng(12);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix a = random_matrix(2, 3, rng);
        const ComplexMatrix b = random_matrix(3, 2, rng);
        const ComplexMatrix c = random_matrix(2, 2, rng);
        REQUIRE((kron(kron(a, b), c) - kron(a, kron(b, c))).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("partial transpose of a product term", "[tensor]") {
    Rng rng(13);
    const ComplexMatrix a = random_matrix(2, 2, rng), b = random_matrix(3, 3, rng);
    const ComplexMatrix got = partial_transpose_first(kron(a, b), 2, 3);
    REQUIRE((got - kron(a.transpose().eval(), b)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("partial transpose involution, trace and Hermiticity", "[tensor]") {
    Rng rng(14);
    ComplexMatrix m = random_matrix(6, 6, rng);
    m = (m + m.adjoint()).eval();
    const ComplexMatrix t1 = partial_transpose_first(m, 2, 3);
    REQUIRE((partial_transpose_first(t1, 2, 3) - m).cwiseAbs().maxCoeff() < 1e-14);
    REQUIRE(std::abs((t1.trace() - m.trace())) < 1e-13);
    REQUIRE(hermiticity_error(t1) < 1e-13);
}

TEST_CASE("partial transpose of the swap operator", "[tensor]") {
    // Swap on C^2 x C^2 has spectrum {-1, 1, 1, 1}; its partial transpose is
    // twice the maximally entangled projector, spectrum {0, 0, 0, 2}.
    ComplexMatrix swap = ComplexMatrix::Zero(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) swap(j * 2 + i, i * 2 + j) = 1.0;

    const RealVector ev_swap = eigvals_hermitian(swap);
    REQUIRE(ev_swap(0) == Approx(-1.0).margin(1e-12));
    for (int k = 1; k < 4; ++k) REQUIRE(ev_swap(k) == Approx(1.0).margin(1e-12));

    const ComplexMatrix t1 = partial_transpose_first(swap, 2, 2);
    const RealVector ev_t1 = eigvals_hermitian(t1);
    for (int k = 0; k < 3; ++k) REQUIRE(ev_t1(k) == Approx(0.0).margin(1e-12));
    REQUIRE(ev_t1(3) == Approx(2.0).margin(1e-12));

    // transposing the scaled entangled projector recovers the swap spectrum,
    // in particular the minimum eigenvalue -1
    const RealVector back = eigvals_hermitian(partial_transpose_first(t1, 2, 2));
    REQUIRE(back(0) == Approx(-1.0).margin(1e-12));
}

TEST_CASE("partial transpose rejects dimension mismatch", "[tensor]") {
    REQUIRE_THROWS_AS(partial_transpose_first(ComplexMatrix::Identity(5, 5), 2, 3),
                      std::invalid_argument);
}

TEST_CASE("eigvals_hermitian basics", "[tensor]") {
    const RealVector ones = eigvals_hermitian(ComplexMatrix::Identity(8, 8));
    for (int k = 0; k < 8; ++k) REQUIRE(ones(k) == Approx(1.0).margin(1e-14));

    ComplexMatrix d = ComplexMatrix::Zero(3, 3);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = 2.0;
    const RealVector ev = eigvals_hermitian(d);
    REQUIRE(ev(0) == Approx(1.0));
    REQUIRE(ev(1) == Approx(2.0));
    REQUIRE(ev(2) == Approx(3.0));
}

TEST_CASE("eigvals_hermitian against the spectral-theorem oracle", "[tensor]") {
    Rng rng(15);
    ComplexMatrix m = random_matrix(9, 9, rng);
    m = (0.5 * (m + m.adjoint())).eval();

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> full(m);
    const ComplexMatrix rebuilt = full.eigenvectors() *
                                  full.eigenvalues().asDiagonal() *
                                  full.eigenvectors().adjoint();
    REQUIRE((rebuilt - m).cwiseAbs().maxCoeff() < 1e-9);

    const RealVector ev = eigvals_hermitian(m);
    for (int k = 0; k < 9; ++k) REQUIRE(ev(k) == Approx(full.eigenvalues()(k)).margin(1e-9));
    REQUIRE(ev.sum() == Approx(m.trace().real()).margin(1e-9));
}

TEST_CASE("eigvals_hermitian rejects non-Hermitian input", "[tensor]") {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = 1.0;
    REQUIRE_THROWS_AS(eigvals_hermitian(m), std::invalid_argument);
}

TEST_CASE("projector spectra are 0/1", "[tensor]") {
    Rng rng(16);
    const PureVector v = random_pure_state(5, rng);
    const ComplexMatrix proj = v * v.adjoint();
    const RealVector ev = eigvals_hermitian(proj);
    for (int k = 0; k < ev.size(); ++k) {
        const double dist = std::min(std::abs(ev(k)), std::abs(ev(k) - 1.0));
        REQUIRE(dist < 1e-9);
    }
}

TEST_CASE("Haar samples are unitary", "[tensor]") {
    Rng rng(17);
    for (int d = 2; d <= 4; ++d)
        for (int trial = 0; trial < 100; ++trial) {
            const ComplexMatrix u = haar_random_unitary(d, rng);
            REQUIRE((u.adjoint() * u - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-10);
        }
}

TEST_CASE("Haar first and second moments", "[tensor]") {
    const int n = 10000;
    for (int d = 2; d <= 4; ++d) {
        Rng rng(100 + d);
        Complex mean1(0, 0);
        double mean2 = 0;
        for (int i = 0; i < n; ++i) {
            const ComplexMatrix u = haar_random_unitary(d, rng);
            mean1 += u(0, 0);
            mean2 += std::norm(u(0, 0));
        }
        mean1 /= double(n);
        mean2 /= double(n);
        REQUIRE(std::abs(mean1) < 5.0 / std::sqrt(double(n)));
        const double var = (d - 1.0) / (double(d) * d * (d + 1.0));
        REQUIRE(std::abs(mean2 - 1.0 / d) < 5.0 * std::sqrt(var / n));
    }
}

TEST_CASE("random pure states", "[tensor]") {
    Rng rng(18);
    for (int trial = 0; trial < 50; ++trial)
        REQUIRE(random_pure_state(4, rng).norm() == Approx(1.0).margin(1e-12));

    const int n = 10000;
    for (int d = 2; d <= 3; ++d) {
        Rng moment_rng(200 + d);
        double mean = 0;
        for (int i = 0; i < n; ++i) mean += std::norm(random_pure_state(d, moment_rng)(0));
        mean /= double(n);
        const double var = (d - 1.0) / (double(d) * d * (d + 1.0));
        REQUIRE(std::abs(mean - 1.0 / d) < 5.0 * std::sqrt(var / n));
    }

    const PureVector single = random_pure_state(1, rng);
    REQUIRE(std::abs(single(0)) == Approx(1.0).margin(1e-12));
}

TEST_CASE("seed overloads are deterministic", "[tensor]") {
    REQUIRE((haar_random_unitary(3, 777) - haar_random_unitary(3, 777)).cwiseAbs().maxCoeff() == 0.0);
    REQUIRE((random_pure_state(4, 777) - random_pure_state(4, 777)).cwiseAbs().maxCoeff() == 0.0);
}
