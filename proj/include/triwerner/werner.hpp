#pragma once

// Coordinates for states commuting with all U⊗U⊗U: the tuple
// (r_+, r_-, r_1, r_2, r_3) with r_0 = 1 - r_+ - r_- derived. Such a tuple
// describes a density operator iff r_+, r_-, r_0 >= 0 and
// r_1^2 + r_2^2 + r_3^2 <= r_0^2; for d = 2 the antisymmetric block is empty
// and additionally r_- = 0.

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "triwerner/permutation.hpp"
#include "triwerner/tensor.hpp"
#include "triwerner/tolerances.hpp"

namespace triwerner {

struct WernerPoint {
    double r_plus = 0;
    double r_minus = 0;
    double r1 = 0;
    double r2 = 0;
    double r3 = 0;

    double r0() const { return 1.0 - r_plus - r_minus; }
    double bloch_norm() const { return std::sqrt(r1 * r1 + r2 * r2 + r3 * r3); }

    std::array<double, 5> as_array() const { return {r_plus, r_minus, r1, r2, r3}; }
    static WernerPoint from_array(const std::array<double, 5>& a) {
        return {a[0], a[1], a[2], a[3], a[4]};
    }

    friend bool operator==(const WernerPoint& x, const WernerPoint& y) = default;
};

inline double max_coordinate_distance(const WernerPoint& x, const WernerPoint& y) {
    double m = 0;
    const auto a = x.as_array(), b = y.as_array();
    for (int k = 0; k < 5; ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

// Signed slack of the state conditions, ignoring the d = 2 constraint:
// nonnegative iff r_+, r_- >= 0 and the Bloch vector fits in the ball.
inline double validity_margin(const WernerPoint& p) {
    return std::min({p.r_plus, p.r_minus, p.r0() - p.bloch_norm()});
}

inline bool is_valid_state(const WernerPoint& p, int d,
                           const Tolerances& tol = default_tolerances()) {
    if (d < 2) throw std::invalid_argument("is_valid_state: d must be >= 2");
    if (validity_margin(p) < -tol.criterion) return false;
    if (d == 2 && std::abs(p.r_minus) > tol.criterion) return false;
    return true;
}

// Reconstruction of the unique invariant density operator with the given
// coordinates:
//
//   rho = r_+ R_+/tr R_+  +  r_- R_-/tr R_-  +  (r_0 R_0 + r_1 R_1 + r_2 R_2 + r_3 R_3)/tr R_0,
//
// the r_- term being dropped at d = 2. The normalizations follow from
// tr(R_i R_j) = delta_ij tr R_0 and R_0 acting as the identity of the
// mixed-symmetry block; they are validated against the Monte-Carlo twirl in
// the test suite.
inline ComplexMatrix point_to_density_matrix(const WernerPoint& p, int d,
                                             const Tolerances& tol = default_tolerances()) {
    if (!is_valid_state(p, d, tol))
        throw std::invalid_argument("point_to_density_matrix: not a valid state for this dimension");
    const double tr0 = r_projector_trace(RBasis::zero, d);
    ComplexMatrix rho = (p.r_plus / r_projector_trace(RBasis::plus, d)) * r_operator(RBasis::plus, d);
    if (d >= 3)
        rho += (p.r_minus / r_projector_trace(RBasis::minus, d)) * r_operator(RBasis::minus, d);
    rho += (p.r0() / tr0) * r_operator(RBasis::zero, d);
    rho += (p.r1 / tr0) * r_operator(RBasis::one, d);
    rho += (p.r2 / tr0) * r_operator(RBasis::two, d);
    rho += (p.r3 / tr0) * r_operator(RBasis::three, d);
    return rho;
}

// r_k(rho) = tr(rho R_k). Twirling preserves these traces, so the result
// also parametrizes the twirl of rho. Rejects inputs that are not density
// matrices (Hermitian, unit trace, positive semidefinite within tolerance).
inline WernerPoint density_matrix_to_point(const ComplexMatrix& rho, int d,
                                           const Tolerances& tol = default_tolerances()) {
    const Eigen::Index dim = static_cast<Eigen::Index>(d) * d * d;
    if (rho.rows() != dim || rho.cols() != dim)
        throw std::invalid_argument("density_matrix_to_point: matrix is not d^3-square");
    if (hermiticity_error(rho) > tol.structural)
        throw std::invalid_argument("density_matrix_to_point: matrix is not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > tol.spectral)
        throw std::invalid_argument("density_matrix_to_point: trace is not 1");
    if (min_eigenvalue_hermitian(rho, tol) < -tol.spectral)
        throw std::invalid_argument("density_matrix_to_point: matrix is not positive semidefinite");
    auto trace_against = [&](RBasis k) {
        return (rho * r_operator(k, d)).trace().real();
    };
    return {trace_against(RBasis::plus), trace_against(RBasis::minus),
            trace_against(RBasis::one), trace_against(RBasis::two),
            trace_against(RBasis::three)};
}

// Average of (U⊗U⊗U) rho (U⊗U⊗U)^† over Haar samples. Converges to the
// exact twirl at rate O(1/sqrt(n)); each individual sample preserves the
// trace exactly.
inline ComplexMatrix twirl_monte_carlo(const ComplexMatrix& rho, int d, int n_samples, Rng& rng) {
    if (n_samples < 1) throw std::invalid_argument("twirl_monte_carlo: n_samples must be >= 1");
    ComplexMatrix acc = ComplexMatrix::Zero(rho.rows(), rho.cols());
    for (int s = 0; s < n_samples; ++s) {
        ComplexMatrix u = haar_random_unitary(d, rng);
        ComplexMatrix u3 = kron3(u, u, u);
        acc.noalias() += u3 * rho * u3.adjoint();
    }
    return acc / static_cast<double>(n_samples);
}

inline ComplexMatrix twirl_monte_carlo(const ComplexMatrix& rho, int d, int n_samples,
                                       std::uint64_t seed) {
    Rng rng(seed);
    return twirl_monte_carlo(rho, d, n_samples, rng);
}

// The exact twirl: project onto the invariant family by coordinate
// extraction followed by reconstruction.
inline ComplexMatrix twirl_exact(const ComplexMatrix& rho, int d,
                                 const Tolerances& tol = default_tolerances()) {
    return point_to_density_matrix(density_matrix_to_point(rho, d, tol), d, tol);
}

// --- Site relabeling -------------------------------------------------------

// Relabeling sites by pi maps rho to V_pi rho V_pi^†. The coordinates
// (r_+, r_-) are fixed and (r_1, r_2, r_3) transforms by a signed orthogonal
// matrix: the 2D standard representation of S3 on (r_1, r_2) together with a
// sign flip of r_3 for odd permutations. The six matrices are frozen here
// and validated against matrix-level conjugation in the tests.
using SiteRelabeling = Perm;

namespace detail {
inline const std::array<std::array<std::array<double, 3>, 3>, 6>& relabel_tables() {
    static const auto tables = [] {
        const double h = 0.5, q = std::sqrt(3.0) / 2.0;
        std::array<std::array<std::array<double, 3>, 3>, 6> t{};
        t[static_cast<int>(Perm::identity)] = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
        t[static_cast<int>(Perm::swap12)] = {{{-h, -q, 0}, {-q, h, 0}, {0, 0, -1}}};
        t[static_cast<int>(Perm::swap23)] = {{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}};
        t[static_cast<int>(Perm::swap31)] = {{{-h, q, 0}, {q, h, 0}, {0, 0, -1}}};
        t[static_cast<int>(Perm::cycle123)] = {{{-h, q, 0}, {-q, -h, 0}, {0, 0, 1}}};
        t[static_cast<int>(Perm::cycle321)] = {{{-h, -q, 0}, {q, -h, 0}, {0, 0, 1}}};
        return t;
    }();
    return tables;
}
}  // namespace detail

inline WernerPoint relabel_point(const WernerPoint& p, SiteRelabeling s) {
    const auto& m = detail::relabel_tables()[static_cast<int>(s)];
    const double v[3] = {p.r1, p.r2, p.r3};
    double out[3];
    for (int i = 0; i < 3; ++i)
        out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return {p.r_plus, p.r_minus, out[0], out[1], out[2]};
}

// Mean over the six relabelings; the S3 average of the (r_1, r_2, r_3)
// action vanishes, so this is the projection onto the permutation-invariant
// subset.
inline WernerPoint permutation_average(const WernerPoint& p) {
    return {p.r_plus, p.r_minus, 0.0, 0.0, 0.0};
}

// Uniform-ish sampler over the valid set: (r_+, r_-) uniform on the
// triangle, Bloch vector uniform in the ball of radius r_0. Test and
// verification plumbing.
inline WernerPoint random_valid_point(int d, Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double rp, rm;
    do {
        rp = unit(rng);
        rm = unit(rng);
    } while (rp + rm > 1.0);
    if (d == 2) rm = 0.0;
    const double r0 = 1.0 - rp - rm;
    double v[3];
    double n2;
    do {
        for (double& x : v) x = 2.0 * unit(rng) - 1.0;
        n2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    } while (n2 > 1.0);
    return {rp, rm, v[0] * r0, v[1] * r0, v[2] * r0};
}

}  // namespace triwerner
