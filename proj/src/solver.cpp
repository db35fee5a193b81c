#include "telecity/solver.hpp"

#include "telecity/error.hpp"
#include "telecity/numerics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace telecity {

Equilibrium solve_benchmark(const CityParams& params) {
    if (!benchmark_condition(params)) {
        std::ostringstream msg;
        msg << "kappa/tau = " << params.kappa_over_tau() << " is not below the benchmark bound "
            << entry_thresholds(params).benchmark_bound;
        throw ModelError(ErrorKind::PreconditionFailed, msg.str());
    }
    const auto bd = benchmark_boundaries(params);
    const double rA = params.agri_rent();
    const double w = params.price() - 2.0 * params.tau() * bd.b1 * bd.b1 - params.office_land() * rA;
    const double z = w - params.kappa() * bd.f - params.lot_size() * rA;
    return Equilibrium(RegimeTag::Benchmark, params, 1.0, w, z, z + params.lot_size() * rA, bd);
}

Equilibrium regime_b_candidate(const CityParams& params, double theta, FringeGeometry geometry) {
    const double a_so = params.office_land();
    const double a_st = params.telework_land();
    if (std::abs(a_so - a_st) <= 1e-12 * std::max(a_so, a_st))
        throw ModelError(ErrorKind::SingularSystem, "wage elimination needs a_so != a_st");

    const auto bd = regime_b_boundaries(params, theta, geometry);
    const double p = params.price();
    const double kappa = params.kappa();
    const double tau = params.tau();
    const double beta = params.beta_t();
    const double s = bd.b1 * bd.b1 + bd.b2 * bd.b2;  // T(b1)

    // phi_o(b1) = phi_t(b1) with w_t = w - kappa f is linear in w
    const double office_num = p + kappa * bd.b1 - tau * s;
    const double tele_num = p + beta * kappa * bd.f - beta * params.mc_t() + (1.0 - beta) * (kappa * bd.b1 - tau * s);
    const double w = (tele_num * a_so - office_num * a_st) / (a_so - a_st);
    const double w_t = w - kappa * bd.f;
    const double z = w_t - params.lot_size() * params.agri_rent();
    return Equilibrium(RegimeTag::TeleworkAtCbdFringe, params, theta, w, z, w_t, bd);
}

double regime_b_residual(const CityParams& params, double theta, FringeGeometry geometry) {
    const auto eq = regime_b_candidate(params, theta, geometry);
    const double b2 = eq.boundaries().b2;
    return eq.phi_telework(b2) - eq.psi(b2);
}

Equilibrium regime_f_candidate(const CityParams& params, double theta) {
    const auto bd = regime_f_boundaries(params, theta);
    const double beta = params.beta_t();
    const double rA = params.agri_rent();
    // psi(f) = R_A with the mixed-zone wage pins z; w follows from wage continuity at b2.
    Equilibrium probe(RegimeTag::TeleworkAtUrbanFringe, params, theta, 0.0, 0.0, 0.0, bd);
    const double z = params.price() - beta * params.mc_t() - params.tau() * (1.0 - beta) * probe.ftf(bd.f) -
                     rA * (params.telework_land() + params.lot_size());
    const double w_t = z + params.lot_size() * rA;
    const Equilibrium partial(RegimeTag::TeleworkAtUrbanFringe, params, theta, 0.0, z, w_t, bd);
    const double w = partial.mixed_wage(bd.b2) + params.kappa() * bd.b2;
    return Equilibrium(RegimeTag::TeleworkAtUrbanFringe, params, theta, w, z, w_t, bd);
}

double regime_f_residual(const CityParams& params, double theta) {
    const auto eq = regime_f_candidate(params, theta);
    const double b1 = eq.boundaries().b1;
    return eq.phi_office(b1) - eq.psi(b1);
}

namespace {

template <typename Residual>
double solve_theta(Residual&& residual, const SolveOptions& options, const char* what) {
    return numerics::unique_root(residual, options.theta_lo, options.theta_hi, options.scan_cells,
                                 options.residual_tol, std::string(what) + " in theta");
}

} // namespace

Equilibrium solve_regime_b(const CityParams& params, const SolveOptions& options) {
    const double theta = solve_theta(
        [&](double t) { return regime_b_residual(params, t, options.geometry); }, options, "CBD-fringe regime");
    return regime_b_candidate(params, theta, options.geometry);
}

Equilibrium solve_regime_f(const CityParams& params, const SolveOptions& options) {
    const double theta =
        solve_theta([&](double t) { return regime_f_residual(params, t); }, options, "urban-fringe regime");
    auto eq = regime_f_candidate(params, theta);
    const auto bounds = mixed_condition_bounds(eq);
    if (!bounds.holds()) {
        std::ostringstream msg;
        msg << "mixed-zone condition " << bounds.lower << " < kappa/tau = " << bounds.ratio << " < " << bounds.upper
            << " fails at theta = " << theta;
        throw ModelError(ErrorKind::MixedConditionViolated, msg.str());
    }
    return eq;
}

std::array<double, 3> boundary_residuals(const Equilibrium& eq) {
    const auto& bd = eq.boundaries();
    const auto& par = eq.params();
    const double rA = par.agri_rent();
    switch (eq.regime()) {
    case RegimeTag::Benchmark:
        return {eq.phi_office(bd.b1) - eq.psi(bd.b1), eq.psi(bd.f) - rA, eq.w_t() - eq.z() - par.lot_size() * rA};
    case RegimeTag::TeleworkAtCbdFringe:
        return {eq.phi_office(bd.b1) - eq.phi_telework(bd.b1), eq.phi_telework(bd.b2) - eq.psi(bd.b2),
                eq.psi(bd.f) - rA};
    case RegimeTag::TeleworkAtUrbanFringe:
        return {eq.phi_office(bd.b1) - eq.psi(bd.b1), eq.w() - par.kappa() * bd.b2 - eq.mixed_wage(bd.b2),
                eq.psi(bd.f) - rA};
    default: break;
    }
    throw ModelError(ErrorKind::PreconditionFailed, "no boundary conditions for this regime");
}

Equilibrium solve_newton(const CityParams& params, RegimeTag regime, double theta, double w, double z,
                         FringeGeometry geometry, double tol, int max_iter) {
    if (regime != RegimeTag::TeleworkAtCbdFringe && regime != RegimeTag::TeleworkAtUrbanFringe)
        throw ModelError(ErrorKind::PreconditionFailed, "Newton solve needs a post-entry regime");

    const double hr = params.lot_size() * params.agri_rent();
    auto build = [&](const Eigen::Vector3d& v) {
        const auto bd = regime == RegimeTag::TeleworkAtCbdFringe ? regime_b_boundaries(params, v[0], geometry)
                                                                 : regime_f_boundaries(params, v[0]);
        return Equilibrium(regime, params, v[0], v[1], v[2], v[2] + hr, bd);
    };
    auto residual = [&](const Eigen::Vector3d& v) {
        const auto r = boundary_residuals(build(v));
        return Eigen::Vector3d(r[0], r[1], r[2]);
    };

    Eigen::Vector3d v(theta, w, z);
    Eigen::Vector3d r = residual(v);
    for (int it = 0; it < max_iter && r.cwiseAbs().maxCoeff() > tol; ++it) {
        Eigen::Matrix3d jac;
        for (int j = 0; j < 3; ++j) {
            Eigen::Vector3d vp = v;
            const double step = 1e-7 * std::max(1.0, std::abs(v[j]));
            vp[j] += step;
            jac.col(j) = (residual(vp) - r) / step;
        }
        const Eigen::FullPivLU<Eigen::Matrix3d> lu(jac);
        if (!lu.isInvertible()) throw ModelError(ErrorKind::SingularSystem, "singular Jacobian in Newton solve");
        Eigen::Vector3d dv = lu.solve(-r);
        // keep theta inside (0, 1) by halving the step
        double lambda = 1.0;
        while ((v[0] + lambda * dv[0] <= 0.0 || v[0] + lambda * dv[0] >= 1.0) && lambda > 1e-6) lambda *= 0.5;
        v += lambda * dv;
        r = residual(v);
    }
    if (!(r.cwiseAbs().maxCoeff() <= tol))
        throw ModelError(ErrorKind::NoRoot, "Newton solve did not converge");
    return build(v);
}

MixedConditionBounds mixed_condition_bounds(const Equilibrium& eq) {
    if (eq.regime() != RegimeTag::TeleworkAtUrbanFringe)
        throw ModelError(ErrorKind::PreconditionFailed, "mixed-zone bounds need an urban-fringe equilibrium");
    const auto& par = eq.params();
    const auto& bd = eq.boundaries();
    const double h = par.lot_size();
    const double on_site = 1.0 - par.beta_t();
    return MixedConditionBounds{
        .lower = 2.0 * on_site * h / mixed_land_unit(par) * (bd.f - bd.b2 + bd.b1),
        .ratio = par.kappa_over_tau(),
        .upper = h * bd.b1 / (par.office_land() + h),
    };
}

FOnlyClosedForm closed_form_f_only(const CityParams& params) {
    const auto regime = classify_first_entry(params);
    if (regime.tag != RegimeTag::TeleworkAtUrbanFringe)
        throw ModelError(ErrorKind::PreconditionFailed, "closed forms need telework entry at the urban fringe");

    const double M = params.firm_mass();
    const double a_so = params.office_land();
    const double a_st = params.telework_land();
    const double h = params.lot_size();
    const double beta = params.beta_t();
    const double kappa = params.kappa();
    const double tau = params.tau();
    const double p = params.price();
    const double D = mixed_land_unit(params);

    const double theta = 1.0 - 2.0 / (D * M);
    if (!(theta > 0.0 && theta < 1.0))
        throw ModelError(ErrorKind::PreconditionFailed, "closed-form office share falls outside (0, 1)");

    const auto bd = regime_f_boundaries(params, theta);
    const double b1 = bd.b1;
    const double f = bd.f;
    const double w = p - 2.0 * tau * (b1 * b1 + f) - kappa * a_so / h;
    const double z = w - kappa * f;
    const double w_t = z;

    const auto phi_t_f = [&](double mc) {
        return (p - (1.0 - beta) * (w - kappa * f) - beta * (w_t + mc) - 2.0 * (1.0 - beta) * f * (b1 + 1.0)) / a_st;
    };
    const double mc = params.mc_t();
    const double dmc = 1e-3 * std::max(1.0, mc);

    double gap_theta = std::numeric_limits<double>::quiet_NaN();
    double gap_w = gap_theta;
    double gap_z = gap_theta;
    try {
        const auto general = solve_regime_f(params);
        gap_theta = theta - general.theta();
        gap_w = w - general.w();
        gap_z = z - general.z();
    } catch (const ModelError&) {
    }

    return FOnlyClosedForm{
        .theta = theta,
        .b1_theta_form = b1,
        .b1_shift_form = a_so * M / 2.0 - a_so / D,
        .f_theta_form = f,
        .f_shift_form = (a_so + h) * M / 2.0 - (a_so - a_st + h * beta) / D,
        .w = w,
        .z = z,
        .w_t = w_t,
        .phi_t_at_f = phi_t_f(mc),
        .dphi_t_dmc = (phi_t_f(mc + dmc) - phi_t_f(mc - dmc)) / (2.0 * dmc),
        .equilibrium = Equilibrium(RegimeTag::TeleworkAtUrbanFringe, params, theta, w, z, w_t, bd),
        .general_theta_gap = gap_theta,
        .general_w_gap = gap_w,
        .general_z_gap = gap_z,
        .note = "closed forms use T(x) = 2(x^2 + f) and T(f) = 2f(b1 + 1) instead of the layout integral, "
                "and fix theta independently of MC_t; w, z and theta are not comparable with the general solver",
    };
}

EntryReport entry_threshold(const CityParams& params) {
    const auto regime = classify_first_entry(params);
    const auto bench = solve_benchmark(params);
    const auto& bd = bench.boundaries();
    const double shift = params.beta_t() / params.telework_land();
    const double rA = params.agri_rent();

    // telework bid at MC_t = 0, then MC_t at which it falls to the incumbent rent
    auto threshold = [&](double x, double incumbent) {
        const double bid0 = bench.phi_telework(x) + shift * params.mc_t();
        return (bid0 - incumbent) / shift;
    };
    const double rent_b = std::max({bench.phi_office(bd.b1), bench.psi(bd.b1), rA});
    const EntryPoint at_b{bd.b1, threshold(bd.b1, rent_b)};
    const EntryPoint at_f{bd.f, threshold(bd.f, std::max(bench.psi(bd.f), rA))};

    double mc_entry = std::numeric_limits<double>::quiet_NaN();
    if (regime.tag == RegimeTag::TeleworkAtCbdFringe) mc_entry = at_b.mc;
    if (regime.tag == RegimeTag::TeleworkAtUrbanFringe) mc_entry = at_f.mc;
    return EntryReport{at_b, at_f, regime, mc_entry};
}

Equilibrium solve_equilibrium(const CityParams& params, const SolveOptions& options) {
    const auto entry = entry_threshold(params);
    const double mc = params.mc_t();
    switch (entry.regime.tag) {
    case RegimeTag::TeleworkAtCbdFringe:
        return mc >= entry.mc_entry ? solve_benchmark(params) : solve_regime_b(params, options);
    case RegimeTag::TeleworkAtUrbanFringe:
        return mc >= entry.mc_entry ? solve_benchmark(params) : solve_regime_f(params, options);
    default:
        if (mc >= std::max(entry.cbd_fringe.mc, entry.urban_fringe.mc)) return solve_benchmark(params);
        throw ModelError(ErrorKind::PreconditionFailed,
                         "telework firms enter but the entry location is " + std::string(to_string(entry.regime.tag)));
    }
}

} // namespace telecity
