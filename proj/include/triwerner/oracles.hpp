#pragma once

// Brute-force verifiers that are independent of the closed-form membership
// tests: eigenvalue-level partial-transpose positivity, convex-hull inner
// certification by twirled product / biproduct sampling, and explicit witness
// decompositions. The hull feasibility problem is solved by a self-contained
// phase-1 simplex; no code is shared with the tests it checks.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "triwerner/separability.hpp"
#include "triwerner/werner.hpp"

namespace triwerner {

// Partial transpose of a d^3-square operator over one site (1-based), by
// direct index reshuffling.
inline ComplexMatrix partial_transpose_site(const ComplexMatrix& m, int d, int site) {
    if (site < 1 || site > 3) throw std::invalid_argument("partial_transpose_site: site must be 1..3");
    const Eigen::Index dim = static_cast<Eigen::Index>(d) * d * d;
    if (m.rows() != dim || m.cols() != dim)
        throw std::invalid_argument("partial_transpose_site: matrix is not d^3-square");
    ComplexMatrix out(dim, dim);
    const int s = site - 1;
    for (int i0 = 0; i0 < d; ++i0)
        for (int i1 = 0; i1 < d; ++i1)
            for (int i2 = 0; i2 < d; ++i2)
                for (int j0 = 0; j0 < d; ++j0)
                    for (int j1 = 0; j1 < d; ++j1)
                        for (int j2 = 0; j2 < d; ++j2) {
                            int i[3] = {i0, i1, i2}, j[3] = {j0, j1, j2};
                            std::swap(i[s], j[s]);
                            out((i0 * d + i1) * d + i2, (j0 * d + j1) * d + j2) =
                                m((i[0] * d + i[1]) * d + i[2], (j[0] * d + j[1]) * d + j[2]);
                        }
    return out;
}

// Smallest eigenvalue of rho^{T_lone} for the reconstructed state.
inline double ppt_oracle_min_eigenvalue(const WernerPoint& p, int d, Partition part,
                                        const Tolerances& tol = default_tolerances()) {
    const ComplexMatrix rho = point_to_density_matrix(p, d, tol);
    return min_eigenvalue_hermitian(partial_transpose_site(rho, d, lone_site(part)), tol);
}

inline bool ppt_oracle(const WernerPoint& p, int d, Partition part,
                       const Tolerances& tol = default_tolerances()) {
    return ppt_oracle_min_eigenvalue(p, d, part, tol) >= -tol.spectral;
}

// --- Product-state witnesses --------------------------------------------------

struct TriProduct {
    PureVector phi1, phi2, phi3;
};

struct BiProduct {
    int lone = 1;      // 1-based lone site
    PureVector lone_vector;  // dimension d
    PureVector pair_vector;  // dimension d^2, remaining sites in ascending order
};

using ProductState = std::variant<TriProduct, BiProduct>;

inline PureVector product_vector(const TriProduct& s) {
    return kron_vec3(s.phi1, s.phi2, s.phi3);
}

inline PureVector product_vector(const BiProduct& s, int d) {
    PureVector out(static_cast<Eigen::Index>(d) * d * d);
    for (int i0 = 0; i0 < d; ++i0)
        for (int i1 = 0; i1 < d; ++i1)
            for (int i2 = 0; i2 < d; ++i2) {
                const int idx[3] = {i0, i1, i2};
                const int l = idx[s.lone - 1];
                int rest[2], r = 0;
                for (int k = 0; k < 3; ++k)
                    if (k != s.lone - 1) rest[r++] = idx[k];
                out((i0 * d + i1) * d + i2) =
                    s.lone_vector(l) * s.pair_vector(rest[0] * d + rest[1]);
            }
    return out;
}

// lambda_alpha >= 0 summing to one, one product atom each.
struct SeparableDecomposition {
    std::vector<double> weights;
    std::vector<ProductState> atoms;
};

// --- Samplers -----------------------------------------------------------------

namespace detail {

inline PureVector basis_vector(int d, int k) {
    PureVector v = PureVector::Zero(d);
    v(k) = 1.0;
    return v;
}

inline PureVector perturbed(const PureVector& v, double scale, Rng& rng) {
    if (scale <= 0.0) return v;
    PureVector w = v + scale * random_pure_state(static_cast<int>(v.size()), rng);
    return w / w.norm();
}

// Three unit vectors at mutual angle 2*pi/3 in a two-dimensional real plane.
inline std::array<PureVector, 3> mercedes_triple(int d) {
    std::array<PureVector, 3> out;
    for (int k = 0; k < 3; ++k) {
        PureVector v = PureVector::Zero(d);
        v(0) = std::cos(2.0 * M_PI * k / 3.0);
        v(1) = std::sin(2.0 * M_PI * k / 3.0);
        out[k] = v;
    }
    return out;
}

// Mixture of generic, clustered and near-extremal product triples. The
// clustered and structured branches populate the neighborhoods of the
// extreme points, which pure Haar sampling never reaches.
inline TriProduct sample_tri_product(int d, Rng& rng, int index) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int branch = index % 3;
    if (branch == 0) {
        return {random_pure_state(d, rng), random_pure_state(d, rng), random_pure_state(d, rng)};
    }
    if (branch == 1) {
        const PureVector base = random_pure_state(d, rng);
        const double u = unit(rng);
        const double spread = 2.0 * u * u;
        return {perturbed(base, spread, rng), perturbed(base, spread, rng),
                perturbed(base, spread, rng)};
    }
    const double u = unit(rng);
    // every fourth 12-index window emits the exact configurations
    const double delta = ((index / 12) % 4 == 0) ? 0.0 : 0.6 * u * u * u;
    const int family = (index / 3) % 4;
    if (family == 0) {  // coincident triple
        const PureVector base = random_pure_state(d, rng);
        return {perturbed(base, delta, rng), perturbed(base, delta, rng),
                perturbed(base, delta, rng)};
    }
    if (family == 1 && d >= 3) {  // orthonormal triple
        return {perturbed(basis_vector(d, 0), delta, rng), perturbed(basis_vector(d, 1), delta, rng),
                perturbed(basis_vector(d, 2), delta, rng)};
    }
    if (family == 3) {  // coincident pair with an orthogonal third vector
        const PureVector base = random_pure_state(d, rng);
        PureVector ortho = random_pure_state(d, rng);
        ortho -= base.dot(ortho) * base;
        if (ortho.norm() < 1e-6) ortho = basis_vector(d, 1);
        ortho /= ortho.norm();
        return {perturbed(ortho, delta, rng), perturbed(base, delta, rng),
                perturbed(base, delta, rng)};
    }
    const auto m = mercedes_triple(d);
    return {perturbed(m[0], delta, rng), perturbed(m[1], delta, rng), perturbed(m[2], delta, rng)};
}

inline PureVector singlet_pair(int d, int x, int y) {
    PureVector v = PureVector::Zero(static_cast<Eigen::Index>(d) * d);
    v(x * d + y) = 1.0 / std::sqrt(2.0);
    v(y * d + x) = -1.0 / std::sqrt(2.0);
    return v;
}

inline BiProduct sample_bi_product(int d, Partition part, Rng& rng, int index) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int site = lone_site(part);
    const int branch = index % 3;
    if (branch == 0) {
        return {site, random_pure_state(d, rng), random_pure_state(d * d, rng)};
    }
    if (branch == 1) {  // pair itself a product: reaches the triseparable part
        const PureVector a = random_pure_state(d, rng);
        const PureVector b = random_pure_state(d, rng);
        return {site, random_pure_state(d, rng), kron_vec(a, b)};
    }
    const double u = unit(rng);
    // every fourth 15-index window emits the exact configurations
    const double delta = ((index / 15) % 4 == 0) ? 0.0 : 0.6 * u * u * u;
    const int family = (index / 3) % 5;
    const PureVector e0 = basis_vector(d, 0), e1 = basis_vector(d, 1);
    switch (family) {
        case 0: {  // coincident product
            const PureVector base = random_pure_state(d, rng);
            return {site, perturbed(base, delta, rng),
                    perturbed(kron_vec(base, base), delta, rng)};
        }
        case 1:  // |1>|22>
            return {site, perturbed(e0, delta, rng), perturbed(kron_vec(e1, e1), delta, rng)};
        case 2:  // lone vector inside the singlet plane
            return {site, perturbed(e0, delta, rng), perturbed(singlet_pair(d, 0, 1), delta, rng)};
        case 3: {  // lone vector orthogonal to the singlet plane (needs d >= 3)
            if (d < 3)
                return {site, perturbed(e0, delta, rng), perturbed(singlet_pair(d, 0, 1), delta, rng)};
            return {site, perturbed(e0, delta, rng), perturbed(singlet_pair(d, 1, 2), delta, rng)};
        }
        default: {  // (|12> - |21> - sqrt(3)|22>)/sqrt(5)
            PureVector pair = PureVector::Zero(static_cast<Eigen::Index>(d) * d);
            pair(0 * d + 1) = 1.0 / std::sqrt(5.0);
            pair(1 * d + 0) = -1.0 / std::sqrt(5.0);
            pair(1 * d + 1) = -std::sqrt(3.0) / std::sqrt(5.0);
            return {site, perturbed(e0, delta, rng), perturbed(pair, delta, rng)};
        }
    }
}

}  // namespace detail

inline WernerPoint tri_product_point(const TriProduct& s) {
    const Complex a = s.phi1.dot(s.phi2);  // <phi1|phi2>
    const Complex b = s.phi2.dot(s.phi3);
    const Complex c = s.phi3.dot(s.phi1);
    return WernerPoint::from_array(product_state_r_coords(a, b, c));
}

inline WernerPoint bi_product_point(const BiProduct& s, int d,
                                    const Tolerances& tol = default_tolerances()) {
    const PureVector psi = product_vector(s, d);
    const ComplexMatrix rho = psi * psi.adjoint();
    return density_matrix_to_point(rho, d, tol);
}

// n coordinates of twirled pure product states; every output is
// triseparable by construction.
inline std::vector<WernerPoint> sample_trisep_inner(int n, int d, Rng& rng) {
    if (n < 1 || d < 2) throw std::invalid_argument("sample_trisep_inner: need n >= 1 and d >= 2");
    std::vector<WernerPoint> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i)
        out.push_back(tri_product_point(detail::sample_tri_product(d, rng, i)));
    return out;
}

inline std::vector<WernerPoint> sample_trisep_inner(int n, int d, std::uint64_t seed) {
    Rng rng(seed);
    return sample_trisep_inner(n, d, rng);
}

// n coordinates of twirled biproduct states across the given split; every
// output is biseparable for that split by construction.
inline std::vector<WernerPoint> sample_bisep_inner(int n, int d, Partition part, Rng& rng,
                                                   const Tolerances& tol = default_tolerances()) {
    if (n < 1 || d < 2) throw std::invalid_argument("sample_bisep_inner: need n >= 1 and d >= 2");
    std::vector<WernerPoint> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i)
        out.push_back(bi_product_point(detail::sample_bi_product(d, part, rng, i), d, tol));
    return out;
}

// --- Convex-hull membership ----------------------------------------------------

struct HullResult {
    bool feasible = false;
    double residual = 0;             // phase-1 objective at termination
    std::vector<double> weights;     // per generator; meaningful when feasible
};

namespace detail {

// Phase-1 simplex for { sum_j w_j col_j = rhs, w >= 0 } with m equality rows.
// Dantzig pricing, switching to Bland's rule after a while; artificial
// variables are dropped once they leave the basis.
inline HullResult phase_one_simplex(const std::vector<std::array<double, 6>>& cols,
                                    std::array<double, 6> rhs, double tol) {
    constexpr int m = 6;
    const int n = static_cast<int>(cols.size());
    const int width = n + m + 1;
    std::vector<double> t(static_cast<std::size_t>(m + 1) * width, 0.0);
    auto at = [&](int row, int col) -> double& { return t[static_cast<std::size_t>(row) * width + col]; };

    std::array<double, m> sign;
    for (int i = 0; i < m; ++i) sign[i] = (rhs[i] < 0.0) ? -1.0 : 1.0;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) at(i, j) = sign[i] * cols[j][i];
        at(i, n + i) = 1.0;
        at(i, width - 1) = sign[i] * rhs[i];
    }
    for (int j = 0; j < n; ++j) {
        double s = 0;
        for (int i = 0; i < m; ++i) s += at(i, j);
        at(m, j) = -s;
    }
    {
        double s = 0;
        for (int i = 0; i < m; ++i) s += at(i, width - 1);
        at(m, width - 1) = -s;
    }

    std::array<int, m> basis;
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    const double eps = 1e-11;
    const int max_iter = 2000 + 10 * m;
    for (int iter = 0; iter < max_iter; ++iter) {
        const bool bland = iter >= 200;
        int enter = -1;
        double best = -eps;
        for (int j = 0; j < n; ++j) {
            const double c = at(m, j);
            if (c < -eps) {
                if (bland) { enter = j; break; }
                if (c < best) { best = c; enter = j; }
            }
        }
        if (enter < 0) break;

        int leave = -1;
        double best_ratio = 0;
        for (int i = 0; i < m; ++i) {
            const double a = at(i, enter);
            if (a > eps) {
                const double ratio = at(i, width - 1) / a;
                if (leave < 0 || ratio < best_ratio - 1e-15 ||
                    (ratio < best_ratio + 1e-15 && basis[i] < basis[leave]))
                    { leave = i; best_ratio = ratio; }
            }
        }
        if (leave < 0) break;  // unbounded: cannot happen with the simplex constraint

        const double pivot = at(leave, enter);
        for (int j = 0; j < width; ++j) at(leave, j) /= pivot;
        for (int i = 0; i <= m; ++i) {
            if (i == leave) continue;
            const double f = at(i, enter);
            if (f == 0.0) continue;
            for (int j = 0; j < width; ++j) at(i, j) -= f * at(leave, j);
        }
        basis[leave] = enter;
    }

    HullResult out;
    out.residual = -at(m, width - 1);
    out.feasible = out.residual <= tol;
    if (out.feasible) {
        out.weights.assign(n, 0.0);
        for (int i = 0; i < m; ++i)
            if (basis[i] < n) out.weights[basis[i]] = std::max(at(i, width - 1), 0.0);
        double s = 0;
        for (double w : out.weights) s += w;
        if (s > 0)
            for (double& w : out.weights) w /= s;
    }
    return out;
}

}  // namespace detail

// Linear feasibility of target = sum_j lambda_j gen_j with lambda >= 0 and
// sum lambda = 1, over the five coordinates.
inline HullResult hull_membership(const WernerPoint& target,
                                  const std::vector<WernerPoint>& generators,
                                  const Tolerances& tol = default_tolerances()) {
    if (generators.empty()) throw std::invalid_argument("hull_membership: no generators");
    std::vector<std::array<double, 6>> cols;
    cols.reserve(generators.size());
    for (const WernerPoint& g : generators) {
        const auto a = g.as_array();
        cols.push_back({a[0], a[1], a[2], a[3], a[4], 1.0});
    }
    const auto ta = target.as_array();
    return detail::phase_one_simplex(cols, {ta[0], ta[1], ta[2], ta[3], ta[4], 1.0}, tol.hull);
}

// One-sided membership certificate for the biseparable set: certifies by
// exhibiting the target as a convex combination of n twirled biproduct
// samples. True certifies membership; false is inconclusive.
inline bool bisep_inner_oracle(const WernerPoint& target, int n, int d, std::uint64_t seed,
                               Partition part, const Tolerances& tol = default_tolerances()) {
    Rng rng(seed);
    return hull_membership(target, sample_bisep_inner(n, d, part, rng, tol), tol).feasible;
}

// As above for the triseparable set, returning the witness decomposition on
// success.
inline std::optional<SeparableDecomposition> certify_triseparable(
    const WernerPoint& target, int n, int d, std::uint64_t seed,
    const Tolerances& tol = default_tolerances()) {
    Rng rng(seed);
    std::vector<TriProduct> states;
    states.reserve(n);
    std::vector<WernerPoint> points;
    points.reserve(n);
    for (int i = 0; i < n; ++i) {
        states.push_back(detail::sample_tri_product(d, rng, i));
        points.push_back(tri_product_point(states.back()));
    }
    const HullResult hull = hull_membership(target, points, tol);
    if (!hull.feasible) return std::nullopt;
    SeparableDecomposition dec;
    for (std::size_t j = 0; j < hull.weights.size(); ++j) {
        if (hull.weights[j] > 1e-14) {
            dec.weights.push_back(hull.weights[j]);
            dec.atoms.emplace_back(states[j]);
        }
    }
    return dec;
}

inline std::optional<SeparableDecomposition> certify_biseparable(
    const WernerPoint& target, int n, int d, std::uint64_t seed, Partition part,
    const Tolerances& tol = default_tolerances()) {
    Rng rng(seed);
    std::vector<BiProduct> states;
    states.reserve(n);
    std::vector<WernerPoint> points;
    points.reserve(n);
    for (int i = 0; i < n; ++i) {
        states.push_back(detail::sample_bi_product(d, part, rng, i));
        points.push_back(bi_product_point(states.back(), d, tol));
    }
    const HullResult hull = hull_membership(target, points, tol);
    if (!hull.feasible) return std::nullopt;
    SeparableDecomposition dec;
    for (std::size_t j = 0; j < hull.weights.size(); ++j) {
        if (hull.weights[j] > 1e-14) {
            dec.weights.push_back(hull.weights[j]);
            dec.atoms.emplace_back(states[j]);
        }
    }
    return dec;
}

// --- Named reference points -----------------------------------------------------

struct GalleryEntry {
    std::string name;
    WernerPoint point;
    int dimension = 2;   // smallest dimension realizing the generating vector
    PureVector vector;   // generating tripartite vector in C^{d^3}
};

// The seven reference points with their generating vectors. A through D are
// twirled product states; E through G are twirled biproducts across 1|23.
inline std::vector<GalleryEntry> gallery() {
    using detail::basis_vector;
    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s5 = std::sqrt(5.0);
    std::vector<GalleryEntry> out;

    auto ket = [](int d, int i, int j, int k) {
        return kron_vec3(basis_vector(d, i), basis_vector(d, j), basis_vector(d, k));
    };

    out.push_back({"A", {1.0 / 6, 1.0 / 6, 0, 0, 0}, 3, ket(3, 0, 1, 2)});
    out.push_back({"B", {1, 0, 0, 0, 0}, 2, ket(2, 0, 0, 0)});
    {
        const auto m = detail::mercedes_triple(2);
        out.push_back({"C", {0.25, 0, 0, 0, 0}, 2, kron_vec3(m[0], m[1], m[2])});
    }
    out.push_back({"D", {1.0 / 3, 0, 2.0 / 3, 0, 0}, 2, ket(2, 0, 1, 1)});
    out.push_back({"E", {0, 0, -1, 0, 0}, 2, (ket(2, 0, 0, 1) - ket(2, 0, 1, 0)) / s2});
    out.push_back({"F", {0, 1.0 / 3, -2.0 / 3, 0, 0}, 3, (ket(3, 0, 1, 2) - ket(3, 0, 2, 1)) / s2});
    out.push_back({"G", {0.2, 0, 0, 0, 0}, 2,
                   (ket(2, 0, 0, 1) - ket(2, 0, 1, 0) - s3 * ket(2, 0, 1, 1)) / s5});
    return out;
}

inline GalleryEntry find_gallery(const std::string& name) {
    for (auto& e : gallery())
        if (e.name == name) return e;
    throw std::invalid_argument("find_gallery: unknown point " + name);
}

}  // namespace triwerner
