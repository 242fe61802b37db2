#pragma once

// Dense complex linear-algebra substrate: Kronecker products, partial
// transposition, Hermitian spectra, Haar-random unitaries and random pure
// states. Everything is a plain function of its inputs; random routines take
// an explicit engine or seed.

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "triwerner/tolerances.hpp"

namespace triwerner {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using PureVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Rng = std::mt19937_64;

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline ComplexMatrix kron3(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c) {
    return kron(kron(a, b), c);
}

inline PureVector kron_vec(const PureVector& a, const PureVector& b) {
    PureVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
        out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

inline PureVector kron_vec3(const PureVector& a, const PureVector& b, const PureVector& c) {
    return kron_vec(kron_vec(a, b), c);
}

inline double hermiticity_error(const ComplexMatrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

// Transposes the first tensor factor of an operator on C^d_first ⊗ C^d_rest:
// entry ((i,k),(j,l)) moves to ((j,k),(i,l)).
inline ComplexMatrix partial_transpose_first(const ComplexMatrix& m, int d_first, int d_rest) {
    const Eigen::Index dim = static_cast<Eigen::Index>(d_first) * d_rest;
    if (m.rows() != dim || m.cols() != dim)
        throw std::invalid_argument("partial_transpose_first: matrix is not (d_first*d_rest)-square");
    ComplexMatrix out(dim, dim);
    for (int i = 0; i < d_first; ++i)
        for (int j = 0; j < d_first; ++j)
            out.block(i * d_rest, j * d_rest, d_rest, d_rest) =
                m.block(j * d_rest, i * d_rest, d_rest, d_rest);
    return out;
}

// Real eigenvalues of a Hermitian matrix, ascending. The input is
// symmetrized first; deviations from Hermiticity beyond tol.structural are
// rejected.
inline RealVector eigvals_hermitian(const ComplexMatrix& m,
                                    const Tolerances& tol = default_tolerances()) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("eigvals_hermitian: matrix is not square");
    if (hermiticity_error(m) > tol.structural)
        throw std::invalid_argument("eigvals_hermitian: input is not Hermitian within tolerance");
    ComplexMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

inline double min_eigenvalue_hermitian(const ComplexMatrix& m,
                                       const Tolerances& tol = default_tolerances()) {
    return eigvals_hermitian(m, tol)(0);
}

// Haar-distributed random unitary via QR of a complex Ginibre matrix with the
// phases of R's diagonal folded into Q.
inline ComplexMatrix haar_random_unitary(int d, Rng& rng) {
    if (d < 1) throw std::invalid_argument("haar_random_unitary: d must be >= 1");
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(d, d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i)
            g(i, j) = Complex(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        Complex rjj = r(j, j);
        Complex phase = (std::abs(rjj) > 0) ? rjj / std::abs(rjj) : Complex(1, 0);
        q.col(j) *= phase;
    }
    return q;
}

inline ComplexMatrix haar_random_unitary(int d, std::uint64_t seed) {
    Rng rng(seed);
    return haar_random_unitary(d, rng);
}

// Unit vector drawn from the unitarily invariant measure on the sphere.
inline PureVector random_pure_state(int d, Rng& rng) {
    if (d < 1) throw std::invalid_argument("random_pure_state: d must be >= 1");
    std::normal_distribution<double> gauss(0.0, 1.0);
    PureVector v(d);
    for (int i = 0; i < d; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    v /= v.norm();
    return v;
}

inline PureVector random_pure_state(int d, std::uint64_t seed) {
    Rng rng(seed);
    return random_pure_state(d, rng);
}

}  // namespace triwerner
