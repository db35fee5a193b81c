"""Spatial equilibrium of a linear city with office and telework firms."""

from ._core import (
    CityParams,
    Equilibrium,
    ModelError,
    analytic_cs_regime_b,
    boundary_residuals,
    classify_first_entry,
    curve_intersection,
    entry_threshold,
    entry_thresholds,
    fd_derivatives,
    labor_shift_cost,
    mc_trajectory,
    run_config,
    solve_benchmark,
    solve_equilibrium,
    solve_regime_b,
    solve_regime_f,
    urban_costs,
    validate,
)

__all__ = [
    "CityParams",
    "Equilibrium",
    "ModelError",
    "analytic_cs_regime_b",
    "boundary_residuals",
    "classify_first_entry",
    "curve_intersection",
    "entry_threshold",
    "entry_thresholds",
    "fd_derivatives",
    "labor_shift_cost",
    "mc_trajectory",
    "run_config",
    "solve_benchmark",
    "solve_equilibrium",
    "solve_regime_b",
    "solve_regime_f",
    "urban_costs",
    "validate",
]
