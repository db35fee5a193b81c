#pragma once

#include "telecity/equilibrium.hpp"
#include "telecity/params.hpp"

#include <array>
#include <functional>
#include <string_view>

namespace telecity {

enum class CsMethod { Analytic, FiniteDifference };

std::string_view to_string(CsMethod method) noexcept;

/// Fixed locations at which rent derivatives are taken: the midpoints of the
/// office block, of the land with telework firms and of the household band.
struct ReferencePoints {
    double office;
    double telework;
    double household;
};

ReferencePoints reference_points(const Equilibrium& eq);

/// Derivatives of the endogenous quantities with respect to MC_t.
struct CsReport {
    double d_theta = 0.0;
    double d_w = 0.0;
    double d_z = 0.0;
    double d_b1 = 0.0;
    double d_b2 = 0.0;
    double d_f = 0.0;
    double d_phi_o = 0.0;
    double d_phi_t = 0.0;
    double d_psi = 0.0;
    CsMethod method = CsMethod::Analytic;
    double step = 0.0;
    ReferencePoints at{};

    std::array<double, 9> values() const noexcept;
};

using RegimeSolver = std::function<Equilibrium(const CityParams&)>;

/// Central differences of every endogenous quantity over MC_t +/- step.
/// A non-positive step selects 1e-4 max(1, MC_t). On a failed solve the
/// step is halved up to six times; after that SolverFailedAtPerturbedPoint.
CsReport fd_derivatives(const CityParams& params, const RegimeSolver& solver, double step = 0.0);

/// Linear system A [dtheta, dw] = rhs obtained by totally differentiating
/// the two CBD-fringe boundary conditions (phi_o = phi_t at b1 and
/// phi_t = psi at b2, with z and w_t eliminated through psi(f) = R_A).
struct RegimeBSystem {
    std::array<std::array<double, 2>, 2> a;
    std::array<double, 2> rhs;  ///< +/- d phi_t / d MC_t = -/+ beta_t / a_st
    double db1_dtheta;
    double db2_dtheta;
    double df_dtheta;
};

RegimeBSystem regime_b_system(const Equilibrium& eq);

/// Throws SingularSystem when the 2x2 matrix is numerically singular.
CsReport analytic_cs_regime_b(const Equilibrium& eq);

enum class Sign { Negative, Zero, Positive };

char symbol(Sign sign) noexcept;

struct SignTable {
    static constexpr std::array<std::string_view, 9> names{"theta", "w",     "z",     "b1", "b2",
                                                            "f",     "phi_o", "phi_t", "psi"};
    std::array<Sign, 9> cells{};

    friend bool operator==(const SignTable&, const SignTable&) = default;
};

inline constexpr double kSignThreshold = 1e-7;

SignTable sign_table(const CsReport& report, double threshold = kSignThreshold);

/// Expected signs after entry at the CBD fringe and at the urban fringe.
SignTable expected_sign_table_cbd_fringe() noexcept;
SignTable expected_sign_table_urban_fringe() noexcept;

std::array<bool, 9> compare_cells(const SignTable& got, const SignTable& expected) noexcept;

} // namespace telecity
