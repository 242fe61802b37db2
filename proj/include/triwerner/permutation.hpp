#pragma once

// The six permutation operators V_pi on H⊗H⊗H and the R basis built from
// them. Conventions, fixed once and verified by the algebra test suite:
//
//   V_pi (phi_1 ⊗ phi_2 ⊗ phi_3) = phi_{pi^{-1}(1)} ⊗ phi_{pi^{-1}(2)} ⊗ phi_{pi^{-1}(3)},
//
// so V_pi V_sigma = V_{pi∘sigma} and the cycle (123) acts on basis kets as
// |i1 i2 i3> -> |i3 i1 i2>. With this orientation the R basis satisfies
// R1 R2 = i R3 (and cyclic), which pins the orientation unambiguously.

#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "triwerner/tensor.hpp"

namespace triwerner {

enum class Perm : int {
    identity = 0,
    swap12 = 1,
    swap23 = 2,
    swap31 = 3,
    cycle123 = 4,  // 1 -> 2 -> 3 -> 1
    cycle321 = 5,  // 1 -> 3 -> 2 -> 1
};

inline constexpr std::array<Perm, 6> all_perms = {
    Perm::identity, Perm::swap12, Perm::swap23,
    Perm::swap31,   Perm::cycle123, Perm::cycle321};

namespace detail {
// images[p][i] = pi(i) on 0-based sites
inline constexpr int perm_images[6][3] = {
    {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};

inline Perm perm_from_images(const int img[3]) {
    for (int p = 0; p < 6; ++p)
        if (perm_images[p][0] == img[0] && perm_images[p][1] == img[1] &&
            perm_images[p][2] == img[2])
            return static_cast<Perm>(p);
    throw std::logic_error("perm_from_images: not a permutation of {0,1,2}");
}
}  // namespace detail

// Site pi(i) (0-based) under the permutation.
inline int perm_apply(Perm p, int site) {
    return detail::perm_images[static_cast<int>(p)][site];
}

// Composition p∘q: apply q first, then p.
inline Perm compose(Perm p, Perm q) {
    int img[3];
    for (int i = 0; i < 3; ++i) img[i] = perm_apply(p, perm_apply(q, i));
    return detail::perm_from_images(img);
}

inline Perm inverse(Perm p) {
    int img[3];
    for (int i = 0; i < 3; ++i) img[perm_apply(p, i)] = i;
    return detail::perm_from_images(img);
}

inline int perm_sign(Perm p) {
    switch (p) {
        case Perm::identity:
        case Perm::cycle123:
        case Perm::cycle321:
            return +1;
        default:
            return -1;
    }
}

inline std::string perm_name(Perm p) {
    switch (p) {
        case Perm::identity: return "e";
        case Perm::swap12: return "(12)";
        case Perm::swap23: return "(23)";
        case Perm::swap31: return "(31)";
        case Perm::cycle123: return "(123)";
        case Perm::cycle321: return "(321)";
    }
    std::abort();
}

// d^3-dimensional permutation matrix implementing V_pi by permuting
// computational basis indices directly.
inline ComplexMatrix perm_operator(Perm p, int d) {
    if (d < 2) throw std::invalid_argument("perm_operator: d must be >= 2");
    const Perm pinv = inverse(p);
    const Eigen::Index dim = static_cast<Eigen::Index>(d) * d * d;
    ComplexMatrix v = ComplexMatrix::Zero(dim, dim);
    for (int i0 = 0; i0 < d; ++i0)
        for (int i1 = 0; i1 < d; ++i1)
            for (int i2 = 0; i2 < d; ++i2) {
                const int in[3] = {i0, i1, i2};
                int out[3];
                for (int k = 0; k < 3; ++k) out[k] = in[perm_apply(pinv, k)];
                const Eigen::Index col = (static_cast<Eigen::Index>(i0) * d + i1) * d + i2;
                const Eigen::Index row = (static_cast<Eigen::Index>(out[0]) * d + out[1]) * d + out[2];
                v(row, col) = 1.0;
            }
    return v;
}

// A linear combination sum_pi mu_pi V_pi, stored by coefficient.
struct PermutationExpansion {
    std::array<Complex, 6> mu{};  // indexed by Perm

    Complex& operator[](Perm p) { return mu[static_cast<std::size_t>(p)]; }
    const Complex& operator[](Perm p) const { return mu[static_cast<std::size_t>(p)]; }

    // Hermitian iff mu_{pi^{-1}} = conj(mu_pi) for every pi.
    bool is_hermitian(double tol = default_tolerances().structural) const {
        for (Perm p : all_perms)
            if (std::abs((*this)[inverse(p)] - std::conj((*this)[p])) > tol) return false;
        return true;
    }
};

inline ComplexMatrix expansion_to_matrix(const PermutationExpansion& x, int d) {
    const Eigen::Index dim = static_cast<Eigen::Index>(d) * d * d;
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (Perm p : all_perms)
        if (x[p] != Complex(0, 0)) out += x[p] * perm_operator(p, d);
    return out;
}

enum class RBasis : int { plus = 0, minus = 1, zero = 2, one = 3, two = 4, three = 5 };

inline constexpr std::array<RBasis, 6> all_r_labels = {
    RBasis::plus, RBasis::minus, RBasis::zero, RBasis::one, RBasis::two, RBasis::three};

inline std::string r_label_name(RBasis k) {
    switch (k) {
        case RBasis::plus: return "+";
        case RBasis::minus: return "-";
        case RBasis::zero: return "0";
        case RBasis::one: return "1";
        case RBasis::two: return "2";
        case RBasis::three: return "3";
    }
    std::abort();
}

// Coefficients of R_+, R_-, R_0, R_1, R_2, R_3 over the permutation operators.
inline PermutationExpansion r_expansion(RBasis k) {
    const double s3 = std::sqrt(3.0);
    PermutationExpansion x;
    switch (k) {
        case RBasis::plus:
            for (Perm p : all_perms) x[p] = 1.0 / 6.0;
            break;
        case RBasis::minus:
            for (Perm p : all_perms) x[p] = perm_sign(p) / 6.0;
            break;
        case RBasis::zero:
            x[Perm::identity] = 2.0 / 3.0;
            x[Perm::cycle123] = -1.0 / 3.0;
            x[Perm::cycle321] = -1.0 / 3.0;
            break;
        case RBasis::one:
            x[Perm::swap23] = 2.0 / 3.0;
            x[Perm::swap31] = -1.0 / 3.0;
            x[Perm::swap12] = -1.0 / 3.0;
            break;
        case RBasis::two:
            x[Perm::swap12] = 1.0 / s3;
            x[Perm::swap31] = -1.0 / s3;
            break;
        case RBasis::three:
            x[Perm::cycle123] = Complex(0, 1.0 / s3);
            x[Perm::cycle321] = Complex(0, -1.0 / s3);
            break;
    }
    return x;
}

inline ComplexMatrix r_operator(RBasis k, int d) {
    return expansion_to_matrix(r_expansion(k), d);
}

// Closed-form traces of the three projectors (the dimensions of the
// symmetric, antisymmetric and mixed-symmetry blocks).
inline double r_projector_trace(RBasis k, int d) {
    const double dd = d;
    switch (k) {
        case RBasis::plus: return dd * (dd + 1) * (dd + 2) / 6.0;
        case RBasis::minus: return dd * (dd - 1) * (dd - 2) / 6.0;
        case RBasis::zero: return 2.0 * dd * (dd * dd - 1) / 3.0;
        default: return 0.0;  // R_1, R_2, R_3 are traceless
    }
}

// Coordinates (r_+, r_-, r_1, r_2, r_3) of the twirled pure product state
// with Gram overlaps a = <phi1|phi2>, b = <phi2|phi3>, c = <phi3|phi1>.
// Uses tr(rho V_(ij)) = |<phi_i|phi_j>|^2 and tr(rho V_(321)) = abc; the sign
// of r_3 follows the cycle orientation fixed above and is checked against the
// matrix-level twirl in the tests.
inline std::array<double, 5> product_state_r_coords(Complex a, Complex b, Complex c) {
    const double s3 = std::sqrt(3.0);
    const double aa = std::norm(a), bb = std::norm(b), cc = std::norm(c);
    const Complex abc = a * b * c;
    const double re = abc.real(), im = abc.imag();
    return {
        (1.0 + aa + bb + cc + 2.0 * re) / 6.0,  // r_+
        (1.0 - aa - bb - cc + 2.0 * re) / 6.0,  // r_-
        (2.0 * bb - cc - aa) / 3.0,             // r_1
        (aa - cc) / s3,                         // r_2
        2.0 * im / s3,                          // r_3
    };
}

}  // namespace triwerner
