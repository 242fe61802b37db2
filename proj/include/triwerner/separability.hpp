#pragma once

// Closed-form membership tests on the invariant family: triseparability,
// biseparability with respect to a fixed lone-site|pair split, and positivity
// of the partial transpose. All inequalities are evaluated with a small
// slack, so boundary points count as members. The sets are exactly nested:
// triseparable ⊂ biseparable(any split) ⊂ PPT(same split) ⊂ valid.

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "triwerner/werner.hpp"

namespace triwerner {

// The split lone|pair; e.g. one_23 separates site 1 from the pair (2,3).
enum class Partition : int { one_23 = 0, two_13 = 1, three_12 = 2 };

inline constexpr std::array<Partition, 3> all_partitions = {
    Partition::one_23, Partition::two_13, Partition::three_12};

inline int lone_site(Partition p) { return static_cast<int>(p) + 1; }

inline std::string partition_name(Partition p) {
    switch (p) {
        case Partition::one_23: return "1|23";
        case Partition::two_13: return "2|13";
        case Partition::three_12: return "3|12";
    }
    std::abort();
}

// Transposition that carries the given split to 1|23 under site relabeling.
inline Perm partition_to_canonical(Partition p) {
    switch (p) {
        case Partition::one_23: return Perm::identity;
        case Partition::two_13: return Perm::swap12;
        case Partition::three_12: return Perm::swap31;
    }
    std::abort();
}

// Image of a split under a site relabeling: lone site l goes to pi(l).
inline Partition relabeled_partition(Partition p, Perm pi) {
    return static_cast<Partition>(perm_apply(pi, lone_site(p) - 1));
}

// Coordinates of the state relabeled so that the requested split becomes
// 1|23; the closed forms below are stated for that split.
inline WernerPoint canonical_coordinates(const WernerPoint& p, Partition part) {
    return relabel_point(p, partition_to_canonical(part));
}

// Expectation of the transposition operator V_(ij) in coordinates:
// tr(rho V_(23)) = r_1 + r_+ - r_-, and the (12)/(31) variants are its images
// under the standard 2D action. For a twirled product state these are the
// squared overlaps |<phi_i|phi_j>|^2, hence nonnegative on every
// triseparable state.
inline double swap23_expectation(const WernerPoint& p) { return p.r1 + p.r_plus - p.r_minus; }
inline double swap12_expectation(const WernerPoint& p) {
    return -0.5 * p.r1 + 0.5 * std::sqrt(3.0) * p.r2 + p.r_plus - p.r_minus;
}
inline double swap31_expectation(const WernerPoint& p) {
    return -0.5 * p.r1 - 0.5 * std::sqrt(3.0) * p.r2 + p.r_plus - p.r_minus;
}

// --- Triseparability --------------------------------------------------------

struct TrisepMargins {
    double r_minus_window;  // min(r_-, 1/6 - r_-)
    double r_plus_window;   // min(r_+ - (1-2r_-)/4, (1-5r_-) - r_+)
    double swap_floor;      // min of the three transposition expectations
    double cubic;           // RHS - LHS of the cubic surface inequality
    double value() const { return std::min({r_minus_window, r_plus_window, swap_floor, cubic}); }
};

// A state is triseparable iff
//   (a) 0 <= r_- <= 1/6,
//   (b) (1 - 2 r_-)/4 <= r_+ <= 1 - 5 r_-,
//   (c) all three transposition expectations t_12, t_23, t_31 are >= 0 and
//       (3 r_3^2 + (1 - 3 r_+ - 3 r_-)^2)(1 - 6 r_-) <= 4 t_12 t_23 t_31.
//
// The product 4 t_12 t_23 t_31 equals
// (r_1 + r_+ - r_-)((r_1 - 2 r_+ + 2 r_-)^2 - 3 r_2^2), so (c) is a cubic
// surface with the threefold site symmetry. The whole region is validated in
// the test suite against the convex hull of twirled product states.
inline TrisepMargins triseparability_margins(const WernerPoint& p) {
    const double t23 = swap23_expectation(p);
    const double t12 = swap12_expectation(p);
    const double t31 = swap31_expectation(p);
    const double lin = 1.0 - 3.0 * p.r_plus - 3.0 * p.r_minus;
    const double lhs = (3.0 * p.r3 * p.r3 + lin * lin) * (1.0 - 6.0 * p.r_minus);
    return {
        std::min(p.r_minus, 1.0 / 6.0 - p.r_minus),
        std::min(p.r_plus - 0.25 * (1.0 - 2.0 * p.r_minus), (1.0 - 5.0 * p.r_minus) - p.r_plus),
        std::min({t12, t23, t31}),
        4.0 * t12 * t23 * t31 - lhs,
    };
}

inline bool is_triseparable(const WernerPoint& p,
                            const Tolerances& tol = default_tolerances()) {
    return triseparability_margins(p).value() >= -tol.criterion;
}

// --- Biseparability ---------------------------------------------------------

struct BisepMargins {
    double r_minus_window;  // min(r_-, 1/3 - r_-)
    double branch_a;        // window and quadratic of the first alternative
    double branch_b;        // window and quadratic of the second alternative
    double value() const { return std::min(r_minus_window, std::max(branch_a, branch_b)); }
};

// For the split 1|23: with h = 1 + r_1 - r_- - 2 r_+, the state is
// biseparable iff 0 <= r_- <= 1/3 and either
//   (a) 3 r_- - 1 <= h <= 0 and
//       3 r_2^2 + 3 r_3^2 + (1 + 2 r_1 + r_- - r_+)^2 <= (2 + r_1 - 4 r_- - 2 r_+)^2, or
//   (b) 0 <= h <= 1 - 3 r_- and
//       3 r_2^2 + 3 r_3^2 + (1 - 3 r_- - 3 r_+)^2 <= (r_1 + 2 r_- - 2 r_+)^2.
// Other splits reduce to 1|23 by the transposition relabeling.
inline BisepMargins biseparability_margins(const WernerPoint& p, Partition part) {
    const WernerPoint q = canonical_coordinates(p, part);
    const double h = 1.0 + q.r1 - q.r_minus - 2.0 * q.r_plus;
    const double rr = 3.0 * (q.r2 * q.r2 + q.r3 * q.r3);

    const double qa_in = 1.0 + 2.0 * q.r1 + q.r_minus - q.r_plus;
    const double qa_out = 2.0 + q.r1 - 4.0 * q.r_minus - 2.0 * q.r_plus;
    const double branch_a = std::min({h - (3.0 * q.r_minus - 1.0), -h,
                                      qa_out * qa_out - (rr + qa_in * qa_in)});

    const double qb_in = 1.0 - 3.0 * q.r_minus - 3.0 * q.r_plus;
    const double qb_out = q.r1 + 2.0 * q.r_minus - 2.0 * q.r_plus;
    const double branch_b = std::min({h, (1.0 - 3.0 * q.r_minus) - h,
                                      qb_out * qb_out - (rr + qb_in * qb_in)});

    return {std::min(q.r_minus, 1.0 / 3.0 - q.r_minus), branch_a, branch_b};
}

inline bool is_biseparable(const WernerPoint& p, Partition part,
                           const Tolerances& tol = default_tolerances()) {
    return biseparability_margins(p, part).value() >= -tol.criterion;
}

// --- Positive partial transpose ---------------------------------------------

struct PptSlacks {
    double s1 = 0;  // 1 - r_1 - 5 r_- - r_+
    double s2 = 0;  // -1 - r_1 + r_- + 5 r_+
};

inline PptSlacks ppt_slacks(const WernerPoint& p, Partition part) {
    const WernerPoint q = canonical_coordinates(p, part);
    return {1.0 - q.r1 - 5.0 * q.r_minus - q.r_plus,
            -1.0 - q.r1 + q.r_minus + 5.0 * q.r_plus};
}

// The partial transpose over the lone site is positive iff s1 >= 0, s2 >= 0
// and r_2^2 + r_3^2 <= s1 s2 / 3.
inline double ppt_margin(const WernerPoint& p, Partition part) {
    const WernerPoint q = canonical_coordinates(p, part);
    const PptSlacks s = ppt_slacks(p, part);
    return std::min({s.s1, s.s2, s.s1 * s.s2 / 3.0 - q.r2 * q.r2 - q.r3 * q.r3});
}

inline bool is_ppt(const WernerPoint& p, Partition part,
                   const Tolerances& tol = default_tolerances()) {
    return ppt_margin(p, part) >= -tol.criterion;
}

// --- Classification ---------------------------------------------------------

enum class Classification { invalid, werner_entangled, ppt_only, biseparable, triseparable };

inline std::string classification_name(Classification c) {
    switch (c) {
        case Classification::invalid: return "invalid";
        case Classification::werner_entangled: return "werner-entangled";
        case Classification::ppt_only: return "ppt-only";
        case Classification::biseparable: return "biseparable";
        case Classification::triseparable: return "triseparable";
    }
    std::abort();
}

struct RegionLabel {
    bool valid = false;
    bool triseparable = false;
    std::array<bool, 3> biseparable{};  // indexed by Partition
    std::array<bool, 3> ppt{};

    bool biseparable_all() const {
        return biseparable[0] && biseparable[1] && biseparable[2];
    }
    bool ppt_all() const { return ppt[0] && ppt[1] && ppt[2]; }

    // Aggregate label with respect to the 1|23 split.
    Classification classification() const {
        if (!valid) return Classification::invalid;
        if (triseparable) return Classification::triseparable;
        if (biseparable[0]) return Classification::biseparable;
        if (ppt[0]) return Classification::ppt_only;
        return Classification::werner_entangled;
    }
};

// Evaluates all membership flags. The inclusion chain
// triseparable => biseparable(all) => ppt(all) => valid is enforced after
// evaluation: a stronger flag that holds only within the boundary band while
// a weaker one fails is demoted; a genuine violation (margins beyond the
// band) raises logic_error.
inline RegionLabel classify(const WernerPoint& p, int d,
                            const Tolerances& tol = default_tolerances()) {
    RegionLabel out;
    out.valid = is_valid_state(p, d, tol);
    if (!out.valid) return out;

    const double tri = triseparability_margins(p).value();
    std::array<double, 3> bi{}, pt{};
    for (Partition part : all_partitions) {
        const int k = static_cast<int>(part);
        bi[k] = biseparability_margins(p, part).value();
        pt[k] = ppt_margin(p, part);
    }
    out.triseparable = tri >= -tol.criterion;
    for (int k = 0; k < 3; ++k) {
        out.biseparable[k] = bi[k] >= -tol.criterion;
        out.ppt[k] = pt[k] >= -tol.criterion;
    }

    for (int k = 0; k < 3; ++k) {
        if (out.biseparable[k] && !out.ppt[k]) {
            if (bi[k] > tol.hull)
                throw std::logic_error("classify: biseparable point with negative partial transpose");
            out.biseparable[k] = false;
        }
    }
    if (out.triseparable && !out.biseparable_all()) {
        if (tri > tol.hull)
            throw std::logic_error("classify: triseparable point that is not biseparable");
        out.triseparable = false;
    }
    return out;
}

// --- Projection of the biseparable set --------------------------------------

// True iff some Bloch vector (r_1, r_2, r_3) inside the ball of radius r_0
// makes (r_+, r_-, r_1, r_2, r_3) biseparable for the split. Decided by a
// numerical existence search: a dense scan of the r_2 = r_3 = 0 axis (where
// the quadratic constraints are loosest), a coarse 31^3 grid over the ball,
// and local refinement around the best cell.
inline bool biseparable_projection_test(double r_plus, double r_minus, Partition part,
                                        const Tolerances& tol = default_tolerances()) {
    if (r_plus < -tol.criterion || r_minus < -tol.criterion ||
        r_plus + r_minus > 1.0 + tol.criterion)
        throw std::invalid_argument("biseparable_projection_test: (r_+, r_-) outside the triangle");
    const double r0 = std::max(1.0 - r_plus - r_minus, 0.0);

    auto objective = [&](double x, double y, double z) {
        const WernerPoint p{r_plus, r_minus, x, y, z};
        const double ball = r0 - p.bloch_norm();
        return std::min(ball, biseparability_margins(p, part).value());
    };

    double best = objective(0.0, 0.0, 0.0);
    std::array<double, 3> arg = {0.0, 0.0, 0.0};
    if (best >= -tol.criterion) return true;

    const int axis_steps = 1024;
    for (int i = 0; i <= axis_steps; ++i) {
        const double x = -r0 + 2.0 * r0 * i / axis_steps;
        const double m = objective(x, 0.0, 0.0);
        if (m > best) { best = m; arg = {x, 0.0, 0.0}; }
    }
    if (best >= -tol.criterion) return true;

    const int n = 31;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const double x = -r0 + 2.0 * r0 * i / (n - 1);
                const double y = -r0 + 2.0 * r0 * j / (n - 1);
                const double z = -r0 + 2.0 * r0 * k / (n - 1);
                if (x * x + y * y + z * z > r0 * r0 * 1.0001 + tol.criterion) continue;
                const double m = objective(x, y, z);
                if (m > best) { best = m; arg = {x, y, z}; }
            }
    if (best >= -tol.criterion) return true;

    double half = (n > 1) ? 2.0 * r0 / (n - 1) : r0;
    for (int round = 0; round < 8; ++round) {
        const auto center = arg;
        for (int i = -3; i <= 3; ++i)
            for (int j = -3; j <= 3; ++j)
                for (int k = -3; k <= 3; ++k) {
                    const double x = center[0] + half * i / 3.0;
                    const double y = center[1] + half * j / 3.0;
                    const double z = center[2] + half * k / 3.0;
                    const double m = objective(x, y, z);
                    if (m > best) { best = m; arg = {x, y, z}; }
                }
        if (best >= -tol.criterion) return true;
        half /= 3.0;
    }
    return best >= -tol.criterion;
}

// --- Region maps -------------------------------------------------------------

struct Figure1Cell {
    double r_plus = 0;
    double r_minus = 0;
    bool trisep = false;            // triseparable at vanishing Bloch vector
    bool bisep_wp = false;          // biseparable (1|23) at vanishing Bloch vector
    bool bisep_projection = false;  // some Bloch vector makes it biseparable
};

// Grid over the triangle r_+, r_- >= 0, r_+ + r_- <= 1 with steps of
// 1/resolution; rows emitted row-major in (i, j) with r_+ = i/resolution.
inline std::vector<Figure1Cell> region_map_figure1(int resolution,
                                                   const Tolerances& tol = default_tolerances()) {
    if (resolution < 2) throw std::invalid_argument("region_map_figure1: resolution must be >= 2");
    std::vector<Figure1Cell> cells;
    cells.reserve(static_cast<std::size_t>(resolution + 1) * (resolution + 2) / 2);
    for (int i = 0; i <= resolution; ++i) {
        for (int j = 0; j + i <= resolution; ++j) {
            Figure1Cell cell;
            cell.r_plus = static_cast<double>(i) / resolution;
            cell.r_minus = static_cast<double>(j) / resolution;
            const WernerPoint p{cell.r_plus, cell.r_minus, 0.0, 0.0, 0.0};
            cell.trisep = is_triseparable(p, tol);
            cell.bisep_wp = is_biseparable(p, Partition::one_23, tol);
            cell.bisep_projection =
                cell.bisep_wp ||
                biseparable_projection_test(cell.r_plus, cell.r_minus, Partition::one_23, tol);
            cells.push_back(cell);
        }
    }
    return cells;
}

struct Figure2Cell {
    double r1 = 0;
    double r2 = 0;
    double r3 = 0;
    Classification label = Classification::invalid;
};

// Cube grid over [-r_0, r_0]^3 with `resolution` points per axis (odd
// resolutions include the center), each cell labeled by classify; cells
// outside the ball come out invalid. Row-major in (i, j, k) over
// (r_1, r_2, r_3).
inline std::vector<Figure2Cell> region_map_figure2(double r_plus, double r_minus, int resolution,
                                                   int d = 3,
                                                   const Tolerances& tol = default_tolerances()) {
    if (resolution < 2) throw std::invalid_argument("region_map_figure2: resolution must be >= 2");
    if (r_plus < -tol.criterion || r_minus < -tol.criterion ||
        r_plus + r_minus > 1.0 + tol.criterion)
        throw std::invalid_argument("region_map_figure2: (r_+, r_-) outside the triangle");
    const double r0 = std::max(1.0 - r_plus - r_minus, 0.0);
    std::vector<Figure2Cell> cells;
    cells.reserve(static_cast<std::size_t>(resolution) * resolution * resolution);
    auto axis = [&](int k) { return -r0 + 2.0 * r0 * k / (resolution - 1); };
    for (int i = 0; i < resolution; ++i)
        for (int j = 0; j < resolution; ++j)
            for (int k = 0; k < resolution; ++k) {
                Figure2Cell cell{axis(i), axis(j), axis(k), Classification::invalid};
                const WernerPoint p{r_plus, r_minus, cell.r1, cell.r2, cell.r3};
                cell.label = classify(p, d, tol).classification();
                cells.push_back(cell);
            }
    return cells;
}

}  // namespace triwerner
