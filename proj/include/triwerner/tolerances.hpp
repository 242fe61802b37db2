#pragma once

namespace triwerner {

// Numerical tolerances used throughout the library. All are absolute.
struct Tolerances {
    double structural = 1e-12;  // Hermiticity checks, operator identities
    double spectral = 1e-9;     // eigenvalue-level positivity checks
    double criterion = 1e-10;   // slack on membership inequalities (boundary counts as inside)
    double hull = 1e-8;         // LP feasibility residual / boundary disagreement band
    double mc_sigmas = 5.0;     // sigma multiplier for Monte-Carlo moment checks
};

inline const Tolerances& default_tolerances() {
    static const Tolerances t{};
    return t;
}

}  // namespace triwerner
