#pragma once

#include "telecity/equilibrium.hpp"

#include <cstddef>

namespace telecity {

struct ValidationReport {
    std::size_t grid_points = 0;
    /// Grid points where the designated occupant is outbid (beyond tolerance).
    std::size_t envelope_violations = 0;
    double envelope_worst_gap = 0.0;
    /// max |h n + a_so m_o + a_st m_t - 1| on occupied land
    double land_accounting_error = 0.0;
    /// max deviation of the integrated firm and household counts from theta M,
    /// (1 - theta) M and M - beta_t (1 - theta) M
    double population_error = 0.0;
    /// |on-site jobs - resident workers|
    double labor_error = 0.0;
    /// largest disagreement of the occupants' bids across a segment edge
    /// (the outermost edge is compared with R_A)
    double rent_continuity_gap = 0.0;
    /// grid points where some workers would have to commute outward
    std::size_t commuting_violations = 0;
    double profit_residual = 0.0;
    double utility_gap = 0.0;

    bool ok(double tol = 1e-8) const noexcept;
};

/// Checks the equilibrium conditions on a symmetric grid over [-f, f].
ValidationReport validate_equilibrium(const Equilibrium& eq, std::size_t grid = 2001);

/// Rent paid by a given occupant at x, using that occupant's own wage
/// schedule (the mixed side of b2 reads the mixed-zone wage).
double occupant_bid(const Equilibrium& eq, Occupant occupant, double x);

} // namespace telecity
