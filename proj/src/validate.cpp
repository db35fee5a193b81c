#include "telecity/validate.hpp"

#include "telecity/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace telecity {

bool ValidationReport::ok(double tol) const noexcept {
    return envelope_violations == 0 && commuting_violations == 0 && land_accounting_error <= tol &&
           population_error <= tol && labor_error <= tol && rent_continuity_gap <= tol && profit_residual <= tol &&
           utility_gap <= tol;
}

double occupant_bid(const Equilibrium& eq, Occupant occupant, double x) {
    switch (occupant) {
    case Occupant::Office: return eq.phi_office(x);
    case Occupant::Telework: return eq.phi_telework(x);
    case Occupant::Household: return eq.psi(x);
    case Occupant::Mixed: return bid_rent_household(eq.params(), eq.mixed_wage(x), eq.z());
    case Occupant::Agriculture: return eq.params().agri_rent();
    }
    return eq.params().agri_rent();
}

namespace {

double scaled_tol(double tol, double value) { return tol * std::max(1.0, std::abs(value)); }

// Integral over the whole city of a density read from the segment interior,
// so the value assigned to a shared edge never leaks into the neighbour.
template <typename Density>
double integrate_density(const Equilibrium& eq, Density&& density) {
    double total = 0.0;
    for (const auto& s : eq.segments()) {
        const double eps = 1e-9 * (s.hi - s.lo);
        auto inside = [&](double x) { return density(std::clamp(x, s.lo + eps, s.hi - eps)); };
        total += 2.0 * numerics::integrate(inside, s.lo, s.hi);
    }
    return total;
}

double on_site_jobs(const Equilibrium& eq, double x) {
    return eq.office_density(x) + (1.0 - eq.params().beta_t()) * eq.telework_density(x);
}

} // namespace

ValidationReport validate_equilibrium(const Equilibrium& eq, std::size_t grid) {
    constexpr double tol = 1e-8;
    const auto& par = eq.params();
    const auto& bd = eq.boundaries();
    const double rA = par.agri_rent();
    const double h = par.lot_size();
    const double kappa = par.kappa();

    ValidationReport rep;
    grid = std::max<std::size_t>(grid, 3);
    rep.grid_points = grid;

    for (std::size_t i = 0; i < grid; ++i) {
        const double x = -bd.f + 2.0 * bd.f * static_cast<double>(i) / static_cast<double>(grid - 1);
        const auto who = eq.occupant_at(x);
        const double top = eq.rent(x);

        double own = occupant_bid(eq, who, x);
        if (who == Occupant::Mixed) own = std::min(own, eq.phi_telework(x));
        const double gap = top - own;
        rep.envelope_worst_gap = std::max(rep.envelope_worst_gap, gap);
        if (gap > scaled_tol(tol, top)) ++rep.envelope_violations;

        if (who == Occupant::Agriculture) continue;
        const double land = h * eq.household_density(x) + par.office_land() * eq.office_density(x) +
                            par.telework_land() * eq.telework_density(x);
        rep.land_accounting_error = std::max(rep.land_accounting_error, std::abs(land - 1.0));

        const double wage = eq.wage(x);
        if (who == Occupant::Office || who == Occupant::Telework || who == Occupant::Mixed) {
            const auto type = who == Occupant::Office ? FirmType::Office : FirmType::Telework;
            const double pi = firm_profit(par, firm_spec(par, type), wage, eq.w_t(), eq.ftf(x), top);
            rep.profit_residual = std::max(rep.profit_residual, std::abs(pi));
        }
        if (who == Occupant::Household || who == Occupant::Mixed) {
            const double u = wage - h * top;
            rep.utility_gap = std::max(rep.utility_gap, std::abs(u - eq.z()));
        }

        // nobody commutes outward: jobs beyond |x| never exceed residents beyond |x|
        if (x >= 0.0) {
            double jobs = 0.0;
            double residents = 0.0;
            for (const auto& s : eq.segments()) {
                const double lo = std::max(x, s.lo);
                if (s.hi <= lo) continue;
                const double mid = 0.5 * (lo + s.hi);
                jobs += (s.hi - lo) * on_site_jobs(eq, mid);
                residents += (s.hi - lo) * eq.household_density(mid);
            }
            bool bad = jobs > residents + 1e-9 * par.firm_mass();
            if (who == Occupant::Mixed) {
                // a local wage falling faster than kappa would pull residents outward
                const double dx = 1e-6 * std::max(1.0, bd.f);
                const double lo = std::max(bd.b2, x - dx);
                const double hi = std::min(bd.f, x + dx);
                if (hi > lo) bad = bad || std::abs(eq.mixed_wage(hi) - eq.mixed_wage(lo)) / (hi - lo) > kappa * (1.0 + 1e-9);
            }
            if (bad) ++rep.commuting_violations;
        }
    }

    const double M = par.firm_mass();
    const double beta = par.beta_t();
    const double theta = eq.theta();
    const double n_office = integrate_density(eq, [&](double x) { return eq.office_density(x); });
    const double n_tele = integrate_density(eq, [&](double x) { return eq.telework_density(x); });
    const double n_house = integrate_density(eq, [&](double x) { return eq.household_density(x); });
    const double n_jobs = integrate_density(eq, [&](double x) { return on_site_jobs(eq, x); });
    rep.population_error = std::max({std::abs(n_office - theta * M), std::abs(n_tele - (1.0 - theta) * M),
                                     std::abs(n_house - (M - beta * (1.0 - theta) * M))});
    rep.labor_error = std::abs(n_jobs - n_house);

    const auto& segs = eq.segments();
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const double edge = segs[i].hi;
        const double inner = occupant_bid(eq, segs[i].occupant, edge);
        const double outer = i + 1 < segs.size() ? occupant_bid(eq, segs[i + 1].occupant, edge) : rA;
        rep.rent_continuity_gap = std::max(rep.rent_continuity_gap, std::abs(inner - outer));
    }
    return rep;
}

} // namespace telecity
