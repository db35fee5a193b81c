#include "telecity/comparative_statics.hpp"

#include "telecity/error.hpp"

#include <algorithm>
#include <cmath>

namespace telecity {

std::string_view to_string(CsMethod method) noexcept {
    return method == CsMethod::Analytic ? "analytic" : "finite-difference";
}

std::array<double, 9> CsReport::values() const noexcept {
    return {d_theta, d_w, d_z, d_b1, d_b2, d_f, d_phi_o, d_phi_t, d_psi};
}

ReferencePoints reference_points(const Equilibrium& eq) {
    ReferencePoints at{0.0, 0.0, 0.0};
    for (const auto& s : eq.segments()) {
        const double mid = 0.5 * (s.lo + s.hi);
        switch (s.occupant) {
        case Occupant::Office: at.office = mid; break;
        case Occupant::Telework:
        case Occupant::Mixed: at.telework = mid; break;
        case Occupant::Household: at.household = mid; break;
        default: break;
        }
    }
    if (eq.regime() == RegimeTag::Benchmark) at.telework = eq.boundaries().b1;
    return at;
}

namespace {

struct Snapshot {
    std::array<double, 9> v;
};

Snapshot snapshot(const Equilibrium& eq, const ReferencePoints& at) {
    const auto& bd = eq.boundaries();
    return {{eq.theta(), eq.w(), eq.z(), bd.b1, bd.b2, bd.f, eq.phi_office(at.office), eq.phi_telework(at.telework),
             eq.psi(at.household)}};
}

} // namespace

CsReport fd_derivatives(const CityParams& params, const RegimeSolver& solver, double step) {
    const double mc = params.mc_t();
    if (!(step > 0.0)) step = 1e-4 * std::max(1.0, mc);

    const auto base = solver(params);
    const auto at = reference_points(base);

    for (int attempt = 0; attempt <= 6; ++attempt, step *= 0.5) {
        if (mc - step < 0.0) continue;
        try {
            const auto up = solver(params.with_telework_cost(mc + step));
            const auto down = solver(params.with_telework_cost(mc - step));
            if (up.regime() != base.regime() || down.regime() != base.regime()) continue;
            const auto hi = snapshot(up, at);
            const auto lo = snapshot(down, at);
            std::array<double, 9> d{};
            for (std::size_t i = 0; i < d.size(); ++i) d[i] = (hi.v[i] - lo.v[i]) / (2.0 * step);
            return CsReport{d[0], d[1], d[2], d[3], d[4], d[5], d[6], d[7], d[8], CsMethod::FiniteDifference, step, at};
        } catch (const ModelError&) {
        }
    }
    throw ModelError(ErrorKind::SolverFailedAtPerturbedPoint,
                     "solver failed or changed regime at MC_t +/- step after 6 halvings");
}

RegimeBSystem regime_b_system(const Equilibrium& eq) {
    if (eq.regime() != RegimeTag::TeleworkAtCbdFringe)
        throw ModelError(ErrorKind::PreconditionFailed, "analytic statics need a CBD-fringe equilibrium");
    const auto& par = eq.params();
    const auto& bd = eq.boundaries();
    const double M = par.firm_mass();
    const double a_so = par.office_land();
    const double a_st = par.telework_land();
    const double h = par.lot_size();
    const double beta = par.beta_t();
    const double kappa = par.kappa();
    const double tau = par.tau();

    const double db1 = a_so * M / 2.0;
    const double db2 = (a_so - a_st) * M / 2.0;
    const double df = (a_so - a_st + h * beta) * M / 2.0;

    // phi_o(b1) - phi_t(b1), holding w_t = w - kappa f
    const double office_theta = (kappa - 2.0 * tau * bd.b1) / a_so * db1 - 2.0 * tau * bd.b2 / a_so * db2;
    const double tele_b1_theta = (1.0 - beta) * (kappa - 2.0 * tau * bd.b1) / a_st * db1 -
                                 2.0 * tau * (1.0 - beta) * bd.b2 / a_st * db2 + beta * kappa / a_st * df;
    // phi_t(b2) - psi(b2) with psi(b2) = kappa (f - b2) / h + R_A
    const double tele_b2_theta = (1.0 - beta) * (kappa - 2.0 * tau * bd.b2) / a_st * db2 -
                                 2.0 * tau * (1.0 - beta) * bd.b2 / a_st * db2 + beta * kappa / a_st * df;
    const double psi_b2_theta = -kappa / h * db2 + kappa / h * df;

    RegimeBSystem sys{};
    sys.a = {{{office_theta - tele_b1_theta, -1.0 / a_so + 1.0 / a_st}, {tele_b2_theta - psi_b2_theta, -1.0 / a_st}}};
    const double shift = beta / a_st;  // d phi_t / d MC_t = -shift
    sys.rhs = {-shift, shift};
    sys.db1_dtheta = db1;
    sys.db2_dtheta = db2;
    sys.df_dtheta = df;
    return sys;
}

CsReport analytic_cs_regime_b(const Equilibrium& eq) {
    const auto sys = regime_b_system(eq);
    const auto& a = sys.a;
    const double det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    const double scale = std::max({std::abs(a[0][0]), std::abs(a[0][1]), std::abs(a[1][0]), std::abs(a[1][1])});
    if (!(std::abs(det) > 1e-12 * scale * scale))
        throw ModelError(ErrorKind::SingularSystem, "total-differential system is singular");

    const double dtheta = (sys.rhs[0] * a[1][1] - a[0][1] * sys.rhs[1]) / det;
    const double dw = (a[0][0] * sys.rhs[1] - a[1][0] * sys.rhs[0]) / det;

    const auto& par = eq.params();
    const double a_so = par.office_land();
    const double a_st = par.telework_land();
    const double beta = par.beta_t();
    const double kappa = par.kappa();
    const double tau = par.tau();
    const double b2 = eq.boundaries().b2;

    CsReport r;
    r.method = CsMethod::Analytic;
    r.at = reference_points(eq);
    r.d_theta = dtheta;
    r.d_w = dw;
    r.d_b1 = sys.db1_dtheta * dtheta;
    r.d_b2 = sys.db2_dtheta * dtheta;
    r.d_f = sys.df_dtheta * dtheta;
    r.d_z = dw - kappa * r.d_f;
    // T(x) = x^2 + b2^2 inside the firm block: rent changes do not depend on x
    r.d_phi_o = (-dw - 2.0 * tau * b2 * r.d_b2) / a_so;
    r.d_phi_t = (-dw + beta * kappa * r.d_f - beta - 2.0 * tau * (1.0 - beta) * b2 * r.d_b2) / a_st;
    r.d_psi = kappa * r.d_f / par.lot_size();
    return r;
}

char symbol(Sign sign) noexcept {
    switch (sign) {
    case Sign::Negative: return '-';
    case Sign::Zero: return '0';
    case Sign::Positive: return '+';
    }
    return '?';
}

SignTable sign_table(const CsReport& report, double threshold) {
    SignTable t;
    const auto v = report.values();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i])) throw ModelError(ErrorKind::PreconditionFailed, "non-finite derivative");
        t.cells[i] = v[i] > threshold ? Sign::Positive : v[i] < -threshold ? Sign::Negative : Sign::Zero;
    }
    return t;
}

SignTable expected_sign_table_cbd_fringe() noexcept {
    using enum Sign;
    return SignTable{{Positive, Negative, Negative, Positive, Positive, Positive, Positive, Positive, Positive}};
}

SignTable expected_sign_table_urban_fringe() noexcept { return expected_sign_table_cbd_fringe(); }

std::array<bool, 9> compare_cells(const SignTable& got, const SignTable& expected) noexcept {
    std::array<bool, 9> out{};
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = got.cells[i] == expected.cells[i];
    return out;
}

} // namespace telecity
