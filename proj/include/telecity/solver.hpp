#pragma once

#include "telecity/equilibrium.hpp"
#include "telecity/params.hpp"
#include "telecity/regime.hpp"

#include <array>
#include <cstddef>
#include <string>

namespace telecity {

struct SolveOptions {
    FringeGeometry geometry = FringeGeometry::LandMarket;
    std::size_t scan_cells = 1024;
    double theta_lo = 1e-9;
    double theta_hi = 1.0 - 1e-9;
    double residual_tol = 1e-10;
};

/// Closed-form monocentric city with offices only.
/// Throws PreconditionFailed when the benchmark admissibility bound fails.
Equilibrium solve_benchmark(const CityParams& params);

/// Candidate CBD-fringe equilibrium at a given office share: w and z are
/// eliminated from the two boundary conditions that are linear in them.
Equilibrium regime_b_candidate(const CityParams& params, double theta, FringeGeometry geometry = {});
/// phi_t(b2) - psi(b2) at the candidate; its root in theta is the equilibrium.
double regime_b_residual(const CityParams& params, double theta, FringeGeometry geometry = {});
Equilibrium solve_regime_b(const CityParams& params, const SolveOptions& options = {});

Equilibrium regime_f_candidate(const CityParams& params, double theta);
/// phi_o(b1) - psi(b1) at the candidate.
double regime_f_residual(const CityParams& params, double theta);
/// Throws MixedConditionViolated when the solved candidate fails the mixed-zone bounds.
Equilibrium solve_regime_f(const CityParams& params, const SolveOptions& options = {});

/// Residuals of the three boundary conditions of the equilibrium's regime,
/// evaluated directly from its profiles:
///   Benchmark:   phi_o(b) - psi(b), psi(f) - R_A, w_t - z - h R_A
///   CBD fringe:  phi_o(b1) - phi_t(b1), phi_t(b2) - psi(b2), psi(f) - R_A
///   urban fringe: phi_o(b1) - psi(b1), wage jump at b2, psi(f) - R_A
std::array<double, 3> boundary_residuals(const Equilibrium& eq);

/// Newton iteration on (theta, w, z) using `boundary_residuals` with a
/// forward-difference Jacobian. Independent of the elimination used by the
/// bisection solvers; used to cross-check them.
Equilibrium solve_newton(const CityParams& params, RegimeTag regime, double theta, double w, double z,
                         FringeGeometry geometry = {}, double tol = 1e-12, int max_iter = 50);

/// lower < kappa/tau < upper is necessary and sufficient for the mixed pattern.
struct MixedConditionBounds {
    double lower;
    double ratio;
    double upper;

    bool holds() const noexcept { return lower < ratio && ratio < upper; }
};

MixedConditionBounds mixed_condition_bounds(const Equilibrium& eq);

/// Closed forms for telework firms located only at the urban fringe. They carry
/// their own FTF expression T(f) = 2 f (b1 + 1) rather than the layout integral.
struct FOnlyClosedForm {
    double theta;
    double b1_theta_form;  ///< a_so theta M / 2
    double b1_shift_form;  ///< a_so M / 2 - a_so / D
    double f_theta_form;   ///< from the urban-fringe geometry at theta
    double f_shift_form;   ///< (a_so + h) M / 2 - (a_so - a_st + h beta) / D
    double w;
    double z;
    double w_t;
    double phi_t_at_f;
    double dphi_t_dmc;  ///< finite difference of phi_t(f) in MC_t
    Equilibrium equilibrium;
    /// Differences against the general urban-fringe solver at the same params
    /// (NaN when that solver fails).
    double general_theta_gap;
    double general_w_gap;
    double general_z_gap;
    std::string note;
};

FOnlyClosedForm closed_form_f_only(const CityParams& params);

struct EntryPoint {
    double location;
    double mc;  ///< MC_t at which phi_t first touches the market rent there
};

struct EntryReport {
    EntryPoint cbd_fringe;
    EntryPoint urban_fringe;
    Regime regime;       ///< first-entry classification
    double mc_entry;     ///< threshold at the classified location (NaN when unclassified)
};

/// Entry thresholds from the parallel shift of the telework bid in MC_t.
EntryReport entry_threshold(const CityParams& params);

/// Benchmark when MC_t is at or above the entry threshold, otherwise the
/// classified post-entry regime.
Equilibrium solve_equilibrium(const CityParams& params, const SolveOptions& options = {});

} // namespace telecity
