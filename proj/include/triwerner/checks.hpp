#pragma once

// Re-runnable verification scans: closed-form tests against their
// matrix-level oracles, algebraic identities, hyperplane coincidences and
// strict-inclusion witnesses. The named suites back the `verify` command;
// the scan primitives are shared with the acceptance tests.

#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "triwerner/oracles.hpp"
#include "triwerner/separability.hpp"
#include "triwerner/werner.hpp"

namespace triwerner {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyConfig {
    int dimension = 3;
    std::uint64_t seed = 12345;
    int samples = 2000;
    Tolerances tol{};
};

namespace detail {
inline ComplexMatrix random_density_matrix(Eigen::Index dim, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j)
        for (Eigen::Index i = 0; i < dim; ++i) g(i, j) = Complex(gauss(rng), gauss(rng));
    ComplexMatrix rho = g * g.adjoint();
    return rho / rho.trace().real();
}

template <typename... Args>
inline std::string cat(Args&&... args) {
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}
}  // namespace detail

// --- Scan primitives ----------------------------------------------------------

struct AgreementScan {
    long long checked = 0;
    long long band_skipped = 0;
    long long disagreements = 0;
};

// Closed-form partial-transpose test against the eigenvalue oracle; points
// whose criterion margin lies inside the band are logged, not compared.
inline AgreementScan scan_ppt_agreement(int d, int n, std::uint64_t seed,
                                        const Tolerances& tol = default_tolerances()) {
    Rng rng(seed);
    AgreementScan s;
    for (int i = 0; i < n; ++i) {
        const WernerPoint p = random_valid_point(d, rng);
        for (Partition part : all_partitions) {
            const double margin = ppt_margin(p, part);
            if (std::abs(margin) < tol.hull) {
                ++s.band_skipped;
                continue;
            }
            ++s.checked;
            if ((margin >= 0) != ppt_oracle(p, d, part, tol)) ++s.disagreements;
        }
    }
    return s;
}

// Coincidence of the biseparable and PPT sets on one of the two hyperplanes:
// 0 selects r_- = 0, 1 selects r_2 = r_3 = 0.
inline AgreementScan scan_hyperplane_coincidence(int which, int n, std::uint64_t seed,
                                                 const Tolerances& tol = default_tolerances()) {
    Rng rng(which == 0 ? seed : seed + 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    AgreementScan s;
    for (int i = 0; i < n; ++i) {
        WernerPoint p;
        if (which == 0) {
            // r_- = 0 slice: r_+ uniform, Bloch vector uniform in the ball
            const double rp = unit(rng);
            const double r0 = 1.0 - rp;
            double v[3], n2;
            do {
                for (double& x : v) x = 2.0 * unit(rng) - 1.0;
                n2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
            } while (n2 > 1.0);
            p = {rp, 0.0, v[0] * r0, v[1] * r0, v[2] * r0};
        } else {
            p = random_valid_point(3, rng);
            p.r2 = p.r3 = 0.0;
        }
        // on the r_- = 0 slice the global window margin is identically zero,
        // so the informative biseparability margin is the branch part
        const BisepMargins bm = biseparability_margins(p, Partition::one_23);
        const double bmv = (which == 0) ? std::max(bm.branch_a, bm.branch_b) : bm.value();
        const double pm = ppt_margin(p, Partition::one_23);
        if (std::abs(bmv) < tol.hull || std::abs(pm) < tol.hull) {
            ++s.band_skipped;
            continue;
        }
        ++s.checked;
        if ((bmv >= 0) != (pm >= 0)) ++s.disagreements;
    }
    return s;
}

// Identity of the branch-(b) quadratic and the PPT quadratic inside the
// branch-(b) window.
inline AgreementScan scan_quadratic_identity(int n, std::uint64_t seed,
                                             const Tolerances& tol = default_tolerances()) {
    Rng rng(seed);
    AgreementScan s;
    long long attempts = 0;
    while (s.checked + s.band_skipped < n && attempts < 100LL * n) {
        ++attempts;
        const WernerPoint p = random_valid_point(3, rng);
        const double h = 1.0 + p.r1 - p.r_minus - 2.0 * p.r_plus;
        if (p.r_minus > 1.0 / 3.0 || h < 0 || h > 1.0 - 3.0 * p.r_minus) continue;
        const double qb_in = 1.0 - 3.0 * p.r_minus - 3.0 * p.r_plus;
        const double qb_out = p.r1 + 2.0 * p.r_minus - 2.0 * p.r_plus;
        const double branch_quad = qb_out * qb_out - 3.0 * (p.r2 * p.r2 + p.r3 * p.r3) - qb_in * qb_in;
        const PptSlacks sl = ppt_slacks(p, Partition::one_23);
        const double ppt_quad = sl.s1 * sl.s2 / 3.0 - p.r2 * p.r2 - p.r3 * p.r3;
        if (std::abs(branch_quad) < tol.hull || std::abs(ppt_quad) < tol.hull) {
            ++s.band_skipped;
            continue;
        }
        ++s.checked;
        if ((branch_quad >= 0) != (ppt_quad >= 0)) ++s.disagreements;
    }
    return s;
}

struct InclusionScan {
    long long checked = 0;
    long long violations = 0;
};

inline InclusionScan scan_inclusion_chain(int d, int n, std::uint64_t seed,
                                          const Tolerances& tol = default_tolerances()) {
    Rng rng(seed);
    InclusionScan s;
    for (int i = 0; i < n; ++i) {
        const WernerPoint p = random_valid_point(d, rng);
        ++s.checked;
        bool bisep_all = true, ppt_all = true;
        for (Partition part : all_partitions) {
            bisep_all = bisep_all && is_biseparable(p, part, tol);
            ppt_all = ppt_all && is_ppt(p, part, tol);
        }
        if (is_triseparable(p, tol) && !bisep_all) ++s.violations;
        if (bisep_all && !ppt_all) ++s.violations;
    }
    return s;
}

struct SoundnessScan {
    long long checked = 0;
    long long violations = 0;
    double min_margin = std::numeric_limits<double>::infinity();
};

// Every twirled pure product state must pass the triseparability test.
inline SoundnessScan scan_trisep_inner_soundness(int d, int n, std::uint64_t seed,
                                                 const Tolerances& tol = default_tolerances()) {
    SoundnessScan s;
    for (const WernerPoint& p : sample_trisep_inner(n, d, seed)) {
        ++s.checked;
        const double m = triseparability_margins(p).value();
        s.min_margin = std::min(s.min_margin, m);
        if (m < -tol.criterion) ++s.violations;
    }
    return s;
}

// Every twirled biproduct must pass the biseparability test for its split.
inline SoundnessScan scan_bisep_inner_soundness(int d, int n, std::uint64_t seed, Partition part,
                                                const Tolerances& tol = default_tolerances()) {
    Rng rng(seed);
    SoundnessScan s;
    for (const WernerPoint& p : sample_bisep_inner(n, d, part, rng, tol)) {
        ++s.checked;
        const double m = biseparability_margins(p, part).value();
        s.min_margin = std::min(s.min_margin, m);
        if (m < -tol.criterion) ++s.violations;
    }
    return s;
}

struct WitnessSearch {
    bool found_ppt_not_bisep = false;
    WernerPoint ppt_not_bisep;
    bool found_bisep_not_trisep = false;
    WernerPoint bisep_not_trisep;
    long long attempts = 0;
};

// Random search for points witnessing the strictness of the inclusions:
// a PPT(1|23) point that is not biseparable (with r_- > 0 and nonvanishing
// (r_2, r_3)), and a biseparable point that is not triseparable.
inline WitnessSearch search_strict_inclusion(int d, int max_attempts, std::uint64_t seed,
                                             const Tolerances& tol = default_tolerances()) {
    Rng rng(seed);
    WitnessSearch w;
    while (w.attempts < max_attempts && !(w.found_ppt_not_bisep && w.found_bisep_not_trisep)) {
        ++w.attempts;
        const WernerPoint p = random_valid_point(d, rng);
        if (!w.found_ppt_not_bisep && p.r_minus > 0.01 &&
            p.r2 * p.r2 + p.r3 * p.r3 > 1e-4 &&
            ppt_margin(p, Partition::one_23) > tol.hull &&
            biseparability_margins(p, Partition::one_23).value() < -tol.hull) {
            w.found_ppt_not_bisep = true;
            w.ppt_not_bisep = p;
        }
        if (!w.found_bisep_not_trisep &&
            biseparability_margins(p, Partition::one_23).value() > tol.hull &&
            biseparability_margins(p, Partition::two_13).value() > tol.hull &&
            biseparability_margins(p, Partition::three_12).value() > tol.hull &&
            triseparability_margins(p).value() < -tol.hull) {
            w.found_bisep_not_trisep = true;
            w.bisep_not_trisep = p;
        }
    }
    return w;
}

struct DimIndependenceScan {
    long long checked = 0;
    long long mismatches = 0;
};

// Classification flags agree between d = 3 and d = 4; d = 2 differs exactly
// by rejecting r_- > 0.
inline DimIndependenceScan scan_dimension_independence(int n, std::uint64_t seed,
                                                       const Tolerances& tol = default_tolerances()) {
    Rng rng(seed);
    DimIndependenceScan s;
    auto flags_equal = [](const RegionLabel& a, const RegionLabel& b) {
        return a.valid == b.valid && a.triseparable == b.triseparable &&
               a.biseparable == b.biseparable && a.ppt == b.ppt;
    };
    for (int i = 0; i < n; ++i) {
        const WernerPoint p = random_valid_point(3, rng);
        ++s.checked;
        const RegionLabel l3 = classify(p, 3, tol);
        const RegionLabel l4 = classify(p, 4, tol);
        if (!flags_equal(l3, l4)) ++s.mismatches;
        const RegionLabel l2 = classify(p, 2, tol);
        if (std::abs(p.r_minus) <= tol.criterion) {
            if (!flags_equal(l2, l3)) ++s.mismatches;
        } else if (l2.valid) {
            ++s.mismatches;
        }
    }
    return s;
}

// --- Suites ---------------------------------------------------------------------

inline std::vector<std::string> suite_names() {
    return {"algebra", "twirl", "criteria", "oracles", "hyperplanes", "all"};
}

inline std::vector<CheckResult> run_algebra_suite(const VerifyConfig& cfg) {
    using detail::cat;
    std::vector<CheckResult> out;
    const int d = cfg.dimension;
    const Eigen::Index dim = static_cast<Eigen::Index>(d) * d * d;
    const ComplexMatrix eye = ComplexMatrix::Identity(dim, dim);
    std::array<ComplexMatrix, 6> R;
    for (RBasis k : all_r_labels) R[static_cast<int>(k)] = r_operator(k, d);
    const auto& Rp = R[0];
    const auto& Rm = R[1];
    const auto& R0 = R[2];

    {
        const double dev = (Rp + Rm + R0 - eye).cwiseAbs().maxCoeff();
        out.push_back({"r_sum_identity", dev <= cfg.tol.structural, cat("max deviation ", dev)});
    }
    {
        double dev = 0;
        dev = std::max(dev, (Rp * Rp - Rp).cwiseAbs().maxCoeff());
        dev = std::max(dev, (Rm * Rm - Rm).cwiseAbs().maxCoeff());
        dev = std::max(dev, (R0 * R0 - R0).cwiseAbs().maxCoeff());
        dev = std::max(dev, (Rp * Rm).cwiseAbs().maxCoeff());
        dev = std::max(dev, (Rp * R0).cwiseAbs().maxCoeff());
        dev = std::max(dev, (Rm * R0).cwiseAbs().maxCoeff());
        out.push_back({"projector_orthogonality", dev <= cfg.tol.structural, cat("max deviation ", dev)});
    }
    {
        const Complex i1(0, 1);
        double dev = 0;
        for (int k = 3; k <= 5; ++k) {
            dev = std::max(dev, (R[k] * R[k] - R0).cwiseAbs().maxCoeff());
            dev = std::max(dev, (R[k] * Rp).cwiseAbs().maxCoeff());
            dev = std::max(dev, (R[k] * Rm).cwiseAbs().maxCoeff());
        }
        dev = std::max(dev, (R[3] * R[4] - i1 * R[5]).cwiseAbs().maxCoeff());
        dev = std::max(dev, (R[4] * R[5] - i1 * R[3]).cwiseAbs().maxCoeff());
        dev = std::max(dev, (R[5] * R[3] - i1 * R[4]).cwiseAbs().maxCoeff());
        out.push_back({"pauli_relations", dev <= cfg.tol.structural, cat("max deviation ", dev)});
    }
    if (d == 2) {
        const double dev = Rm.cwiseAbs().maxCoeff();
        out.push_back({"r_minus_vanishes_d2", dev <= cfg.tol.structural, cat("max entry ", dev)});
    }
    {
        double dev = 0;
        for (Perm p : all_perms)
            for (Perm q : all_perms)
                dev = std::max(dev, (perm_operator(p, d) * perm_operator(q, d) -
                                     perm_operator(compose(p, q), d))
                                        .cwiseAbs()
                                        .maxCoeff());
        out.push_back({"group_law", dev <= cfg.tol.structural, cat("max deviation over 36 pairs ", dev)});
    }
    {
        double dev = 0;
        for (Perm p : all_perms) {
            int cycles = (p == Perm::identity) ? 3 : (perm_sign(p) < 0 ? 2 : 1);
            dev = std::max(dev, std::abs(perm_operator(p, d).trace().real() - std::pow(d, cycles)));
        }
        out.push_back({"perm_traces", dev <= cfg.tol.structural, cat("max deviation ", dev)});
    }
    {
        double dev = 0;
        for (RBasis k : all_r_labels)
            dev = std::max(dev, std::abs(R[static_cast<int>(k)].trace().real() -
                                         r_projector_trace(k, d)));
        for (int i = 3; i <= 5; ++i)
            for (int j = 3; j <= 5; ++j) {
                const double want = (i == j) ? r_projector_trace(RBasis::zero, d) : 0.0;
                dev = std::max(dev, std::abs((R[i] * R[j]).trace().real() - want));
            }
        out.push_back({"r_traces", dev <= cfg.tol.structural * dim, cat("max deviation ", dev)});
    }
    {
        // frozen relabeling tables against matrix conjugation
        Rng rng(cfg.seed);
        double dev = 0;
        const int samples = std::min(cfg.samples, 50);
        for (int i = 0; i < samples; ++i) {
            const WernerPoint p = random_valid_point(d, rng);
            const ComplexMatrix rho = point_to_density_matrix(p, d, cfg.tol);
            for (Perm s : all_perms) {
                const ComplexMatrix v = perm_operator(s, d);
                const WernerPoint got = density_matrix_to_point(v * rho * v.adjoint(), d, cfg.tol);
                dev = std::max(dev, max_coordinate_distance(got, relabel_point(p, s)));
            }
        }
        out.push_back({"relabel_matrix_oracle", dev <= 1e-10, cat("max deviation ", dev)});
    }
    {
        double dev = 0;
        for (Perm s : all_perms)
            for (Perm t : all_perms) {
                const WernerPoint p{0.2, 0.1, 0.3, -0.2, 0.1};
                const WernerPoint a = relabel_point(relabel_point(p, s), t);
                const WernerPoint b = relabel_point(p, compose(t, s));
                dev = std::max(dev, max_coordinate_distance(a, b));
            }
        out.push_back({"relabel_group_action", dev <= cfg.tol.structural, cat("max deviation ", dev)});
    }
    return out;
}

inline std::vector<CheckResult> run_twirl_suite(const VerifyConfig& cfg) {
    using detail::cat;
    std::vector<CheckResult> out;
    const int d = cfg.dimension;
    Rng rng(cfg.seed);

    {
        double dev = 0;
        for (int i = 0; i < std::min(cfg.samples, 200); ++i) {
            const WernerPoint p = random_valid_point(d, rng);
            const WernerPoint q = density_matrix_to_point(point_to_density_matrix(p, d, cfg.tol), d, cfg.tol);
            dev = std::max(dev, max_coordinate_distance(p, q));
        }
        out.push_back({"coordinate_roundtrip", dev <= 1e-10, cat("max deviation ", dev)});
    }
    {
        // states already invariant are fixed by every twirl sample
        const WernerPoint p = random_valid_point(d, rng);
        const ComplexMatrix rho = point_to_density_matrix(p, d, cfg.tol);
        const ComplexMatrix t = twirl_monte_carlo(rho, d, 10, rng);
        const double dev = (t - rho).cwiseAbs().maxCoeff();
        out.push_back({"twirl_fixed_point", dev <= 1e-10, cat("max deviation ", dev)});
    }
    {
        const Eigen::Index dim = static_cast<Eigen::Index>(d) * d * d;
        const ComplexMatrix rho = detail::random_density_matrix(dim, rng);
        const int n = cfg.samples;
        const ComplexMatrix mc = twirl_monte_carlo(rho, d, n, rng);
        const ComplexMatrix exact = twirl_exact(rho, d, cfg.tol);
        const double dev = (mc - exact).norm();
        const double bound = 1.5 / std::sqrt(static_cast<double>(n));
        out.push_back({"mc_twirl_matches_exact", dev <= bound,
                       cat("deviation ", dev, " bound ", bound, " at n=", n)});
        const WernerPoint a = density_matrix_to_point(rho, d, cfg.tol);
        const WernerPoint b = density_matrix_to_point((mc + mc.adjoint()) / 2.0, d, cfg.tol);
        out.push_back({"twirl_preserves_coordinates", max_coordinate_distance(a, b) <= bound,
                       cat("max deviation ", max_coordinate_distance(a, b))});
    }
    {
        double dev = 0;
        for (int i = 0; i < std::min(cfg.samples, 200); ++i) {
            const PureVector v1 = random_pure_state(d, rng);
            const PureVector v2 = random_pure_state(d, rng);
            const PureVector v3 = random_pure_state(d, rng);
            const WernerPoint closed = tri_product_point({v1, v2, v3});
            const PureVector psi = kron_vec3(v1, v2, v3);
            const WernerPoint matrix = density_matrix_to_point(psi * psi.adjoint(), d, cfg.tol);
            dev = std::max(dev, max_coordinate_distance(closed, matrix));
        }
        out.push_back({"product_coords_match_matrix", dev <= 1e-12, cat("max deviation ", dev)});
    }
    {
        const int n = std::max(cfg.samples, 1000);
        Complex mean1(0, 0);
        double mean2 = 0;
        for (int i = 0; i < n; ++i) {
            const ComplexMatrix u = haar_random_unitary(d, rng);
            mean1 += u(0, 0);
            mean2 += std::norm(u(0, 0));
        }
        mean1 /= static_cast<double>(n);
        mean2 /= static_cast<double>(n);
        const double var2 = (d - 1.0) / (static_cast<double>(d) * d * (d + 1.0));
        const bool ok1 = std::abs(mean1) <= cfg.tol.mc_sigmas / std::sqrt(static_cast<double>(n));
        const bool ok2 = std::abs(mean2 - 1.0 / d) <=
                         cfg.tol.mc_sigmas * std::sqrt(var2 / static_cast<double>(n));
        out.push_back({"haar_moments", ok1 && ok2,
                       cat("|mean U00| = ", std::abs(mean1), ", mean |U00|^2 = ", mean2)});
    }
    {
        const int n = std::max(cfg.samples, 1000);
        double mean = 0;
        for (int i = 0; i < n; ++i) mean += std::norm(random_pure_state(d, rng)(0));
        mean /= static_cast<double>(n);
        const double var = (d - 1.0) / (static_cast<double>(d) * d * (d + 1.0));
        const bool ok = std::abs(mean - 1.0 / d) <=
                        cfg.tol.mc_sigmas * std::sqrt(var / static_cast<double>(n));
        out.push_back({"pure_state_moments", ok, cat("mean |<e0|phi>|^2 = ", mean)});
    }
    {
        // Bloch boundary <=> vanishing smallest eigenvalue
        double worst_boundary = 0, best_interior = 1;
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int i = 0; i < 50; ++i) {
            const double rp = 0.05 + 0.35 * unit(rng);
            const double rm = (d == 2) ? 0.0 : 0.05 + 0.35 * unit(rng);
            const double r0 = 1.0 - rp - rm;
            double v[3];
            double n2 = 0;
            for (double& x : v) {
                x = 2.0 * unit(rng) - 1.0;
            }
            n2 = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
            for (double& x : v) x *= r0 / n2;
            const WernerPoint boundary{rp, rm, v[0], v[1], v[2]};
            const WernerPoint interior{rp, rm, 0.8 * v[0], 0.8 * v[1], 0.8 * v[2]};
            worst_boundary = std::max(worst_boundary,
                                      std::abs(min_eigenvalue_hermitian(
                                          point_to_density_matrix(boundary, d, cfg.tol), cfg.tol)));
            best_interior = std::min(best_interior,
                                     min_eigenvalue_hermitian(
                                         point_to_density_matrix(interior, d, cfg.tol), cfg.tol));
        }
        const bool ok = worst_boundary <= cfg.tol.spectral && best_interior > cfg.tol.spectral;
        out.push_back({"bloch_boundary_spectrum", ok,
                       cat("max |min eig| on boundary ", worst_boundary,
                           ", min eig strictly inside ", best_interior)});
    }
    return out;
}

inline std::vector<CheckResult> run_criteria_suite(const VerifyConfig& cfg) {
    using detail::cat;
    std::vector<CheckResult> out;
    {
        const InclusionScan s = scan_inclusion_chain(cfg.dimension, cfg.samples, cfg.seed, cfg.tol);
        out.push_back({"inclusion_chain", s.violations == 0,
                       cat(s.violations, " violations over ", s.checked, " points")});
    }
    {
        const AgreementScan s = scan_quadratic_identity(cfg.samples, cfg.seed + 2, cfg.tol);
        out.push_back({"quadratic_identity", s.disagreements == 0,
                       cat(s.disagreements, " disagreements over ", s.checked,
                           " window points (", s.band_skipped, " in band)")});
    }
    {
        Rng rng(cfg.seed + 3);
        long long bad = 0;
        const int n = std::min(cfg.samples, 500);
        for (int i = 0; i < n; ++i) {
            const WernerPoint p = random_valid_point(cfg.dimension, rng);
            const bool tri = is_triseparable(p, cfg.tol);
            for (Perm s : all_perms) {
                const WernerPoint q = relabel_point(p, s);
                if (is_triseparable(q, cfg.tol) != tri) ++bad;
                for (Partition part : all_partitions) {
                    if (is_biseparable(q, relabeled_partition(part, s), cfg.tol) !=
                        is_biseparable(p, part, cfg.tol))
                        ++bad;
                    if (is_ppt(q, relabeled_partition(part, s), cfg.tol) != is_ppt(p, part, cfg.tol))
                        ++bad;
                }
            }
        }
        out.push_back({"relabel_covariance", bad == 0, cat(bad, " covariance failures over ", n, " points")});
    }
    {
        const DimIndependenceScan s = scan_dimension_independence(cfg.samples, cfg.seed + 4, cfg.tol);
        out.push_back({"dimension_independence", s.mismatches == 0,
                       cat(s.mismatches, " mismatches over ", s.checked, " points")});
    }
    return out;
}

inline std::vector<CheckResult> run_oracles_suite(const VerifyConfig& cfg) {
    using detail::cat;
    std::vector<CheckResult> out;
    {
        const AgreementScan s = scan_ppt_agreement(cfg.dimension, cfg.samples, cfg.seed, cfg.tol);
        out.push_back({"ppt_criterion_vs_eigenvalues", s.disagreements == 0,
                       cat(s.disagreements, " disagreements over ", s.checked,
                           " tests (", s.band_skipped, " in band)")});
    }
    {
        const SoundnessScan s =
            scan_trisep_inner_soundness(cfg.dimension, cfg.samples, cfg.seed + 1, cfg.tol);
        out.push_back({"trisep_inner_soundness", s.violations == 0,
                       cat(s.violations, " violations, min margin ", s.min_margin)});
    }
    {
        const SoundnessScan s = scan_bisep_inner_soundness(cfg.dimension, cfg.samples, cfg.seed + 2,
                                                           Partition::one_23, cfg.tol);
        out.push_back({"bisep_inner_soundness", s.violations == 0,
                       cat(s.violations, " violations, min margin ", s.min_margin)});
    }
    {
        double dev = 0;
        for (const GalleryEntry& e : gallery()) {
            const ComplexMatrix rho = e.vector * e.vector.adjoint();
            dev = std::max(dev, max_coordinate_distance(
                                    density_matrix_to_point(rho, e.dimension, cfg.tol), e.point));
        }
        out.push_back({"gallery_exact_coordinates", dev <= cfg.tol.structural, cat("max deviation ", dev)});
    }
    {
        double worst = 0;
        for (const std::string name : {"B", "D", "E", "F", "G"}) {
            const GalleryEntry e = find_gallery(name);
            const PptSlacks s = ppt_slacks(e.point, Partition::one_23);
            worst = std::max(worst, std::min(std::abs(s.s1), std::abs(s.s2)));
            worst = std::max(worst,
                             std::abs(ppt_oracle_min_eigenvalue(e.point, e.dimension,
                                                                Partition::one_23, cfg.tol)));
        }
        out.push_back({"gallery_ppt_boundary", worst <= cfg.tol.hull, cat("worst slack/eigenvalue ", worst)});
    }
    {
        // hull certification is sound and certifies interior gallery points
        const std::uint64_t seed = cfg.seed + 3;
        const WernerPoint mixed{10.0 / 27, 1.0 / 27, 0, 0, 0};
        bool sound = true, complete = true;
        for (const std::string name : {"A", "B", "C"}) {
            const GalleryEntry e = find_gallery(name);
            WernerPoint target = e.point;
            const double eps = 1e-3;
            target = {target.r_plus + eps * (mixed.r_plus - target.r_plus),
                      target.r_minus + eps * (mixed.r_minus - target.r_minus),
                      target.r1 + eps * (mixed.r1 - target.r1),
                      target.r2 + eps * (mixed.r2 - target.r2),
                      target.r3 + eps * (mixed.r3 - target.r3)};
            const auto cert = certify_triseparable(target, cfg.samples, 3, seed, cfg.tol);
            if (!cert) complete = false;
            if (cert && !is_triseparable(target, cfg.tol)) sound = false;
        }
        const auto g_cert = certify_triseparable(find_gallery("G").point, cfg.samples, 3, seed, cfg.tol);
        out.push_back({"hull_certification", sound && complete && !g_cert,
                       cat("inward-perturbed A,B,C certified: ", complete,
                           "; G rejected: ", !g_cert)});
    }
    {
        const WitnessSearch w = search_strict_inclusion(3, 200000, cfg.seed + 4, cfg.tol);
        out.push_back({"strict_inclusion_witnesses",
                       w.found_ppt_not_bisep && w.found_bisep_not_trisep,
                       cat("found after ", w.attempts, " attempts")});
    }
    return out;
}

inline std::vector<CheckResult> run_hyperplanes_suite(const VerifyConfig& cfg) {
    using detail::cat;
    std::vector<CheckResult> out;
    {
        const AgreementScan s = scan_hyperplane_coincidence(0, cfg.samples, cfg.seed, cfg.tol);
        out.push_back({"bisep_equals_ppt_on_rminus0", s.disagreements == 0,
                       cat(s.disagreements, " disagreements over ", s.checked, " points")});
    }
    {
        const AgreementScan s = scan_hyperplane_coincidence(1, cfg.samples, cfg.seed, cfg.tol);
        out.push_back({"bisep_equals_ppt_on_r2r30", s.disagreements == 0,
                       cat(s.disagreements, " disagreements over ", s.checked, " points")});
    }
    return out;
}

inline std::vector<CheckResult> run_suite(const std::string& name, const VerifyConfig& cfg) {
    if (name == "algebra") return run_algebra_suite(cfg);
    if (name == "twirl") return run_twirl_suite(cfg);
    if (name == "criteria") return run_criteria_suite(cfg);
    if (name == "oracles") return run_oracles_suite(cfg);
    if (name == "hyperplanes") return run_hyperplanes_suite(cfg);
    if (name == "all") {
        std::vector<CheckResult> out;
        for (const char* s : {"algebra", "twirl", "criteria", "oracles", "hyperplanes"}) {
            auto part = run_suite(s, cfg);
            for (auto& c : part) c.name = std::string(s) + "/" + c.name;
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw std::invalid_argument("run_suite: unknown suite " + name);
}

}  // namespace triwerner
