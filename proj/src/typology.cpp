#include "telecity/typology.hpp"

#include "telecity/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace telecity {

std::string_view to_string(Fringe fringe) noexcept { return fringe == Fringe::Cbd ? "b" : "f"; }

std::string_view to_string(LocationChoice choice) noexcept {
    switch (choice) {
    case LocationChoice::AtCbdFringe: return "locates-at-b";
    case LocationChoice::AtUrbanFringe: return "locates-at-f";
    case LocationChoice::Indifferent: return "indifferent";
    }
    return "unknown";
}

double fringe_location(const Equilibrium& host, Fringe fringe, const TypologyOptions& options) {
    const auto& bd = host.boundaries();
    const double x = fringe == Fringe::Urban ? bd.f : options.cbd_edge == CbdEdge::OfficeEdge ? bd.b1 : bd.b2;
    if (!(x > 0.0) || !std::isfinite(x))
        throw ModelError(ErrorKind::LocationUndefined,
                         std::string("fringe ") + std::string(to_string(fringe)) + " is not defined in this equilibrium");
    return x;
}

LaborShiftQuote labor_shift_cost(const Equilibrium& host, Fringe fringe, const TypologyOptions& options) {
    const double x = fringe_location(host, fringe, options);
    const auto& par = host.params();
    const double on_site_cost = host.wage(x) + par.tau() * host.ftf(x);
    return LaborShiftQuote{
        .location = fringe,
        .x = x,
        .cost = host.w_t() + par.mc_t() - on_site_cost,
        .p_net = par.price() - on_site_cost,
        .phi = host.phi_telework(x),
    };
}

std::vector<double> default_beta_grid(std::size_t n) {
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) grid[i] = static_cast<double>(i + 1) / static_cast<double>(n + 1);
    return grid;
}

IndifferenceCurve indifference_curve(const LaborShiftQuote& quote, std::span<const double> beta_grid,
                                     double office_land) {
    if (!(quote.phi > 0.0))
        throw ModelError(ErrorKind::DegenerateRent, "telework bid at " + std::string(to_string(quote.location)) +
                                                        " is " + std::to_string(quote.phi) + ", not positive");
    IndifferenceCurve curve{quote.location, quote.p_net / quote.phi, -quote.cost / quote.phi, {}};
    for (double beta : beta_grid) {
        const double a = curve.at(beta);
        if (a > 0.0 && 1.0 - beta < a / office_land) curve.points.push_back({beta, a});
    }
    return curve;
}

IndifferenceCurve indifference_curve(const Equilibrium& host, Fringe fringe, std::span<const double> beta_grid,
                                     const TypologyOptions& options) {
    return indifference_curve(labor_shift_cost(host, fringe, options), beta_grid, host.params().office_land());
}

TypologyPoint curve_intersection(const LaborShiftQuote& at_b, const LaborShiftQuote& at_f) {
    // beta C + a phi = p_net at both fringes
    const double det = at_b.cost * at_f.phi - at_f.cost * at_b.phi;
    const double scale = std::max({std::abs(at_b.cost * at_f.phi), std::abs(at_f.cost * at_b.phi), 1e-300});
    if (!(std::abs(det) > 1e-12 * scale))
        throw ModelError(ErrorKind::ParallelCurves, "zero-profit lines at b and f are parallel");
    return TypologyPoint{
        .beta_star = (at_f.phi * at_b.p_net - at_b.phi * at_f.p_net) / det,
        .a_star = (at_f.cost * at_b.p_net - at_b.cost * at_f.p_net) / -det,
    };
}

TypologyPoint curve_intersection(const Equilibrium& host, const TypologyOptions& options) {
    return curve_intersection(labor_shift_cost(host, Fringe::Cbd, options),
                              labor_shift_cost(host, Fringe::Urban, options));
}

double curve_residual(const LaborShiftQuote& quote, double beta, double a_st) noexcept {
    return quote.p_net - a_st * quote.phi - beta * quote.cost;
}

LocationChoice classify_firm_type(double beta, double a_st, const TypologyPoint& point, const LaborShiftQuote& at_b,
                                  const LaborShiftQuote& at_f, double office_land) {
    if (!(beta > 0.0 && beta < 1.0 && a_st > 0.0 && a_st / (1.0 - beta) > office_land))
        throw ModelError(ErrorKind::OutsideAdmissibleRegion, "firm type outside the admissible (beta, a_st) region");
    if (!(at_b.phi > 0.0 && at_f.phi > 0.0))
        throw ModelError(ErrorKind::DegenerateRent, "telework bids at both fringes must be positive");

    const double tol_b = kIndifferenceTolerance * std::max(1.0, std::abs(point.beta_star));
    const double tol_a = kIndifferenceTolerance * std::max(1.0, std::abs(point.a_star));
    if (std::abs(beta - point.beta_star) <= tol_b && std::abs(a_st - point.a_star) <= tol_a)
        return LocationChoice::Indifferent;

    const double height_b = (at_b.p_net - beta * at_b.cost) / at_b.phi;
    const double height_f = (at_f.p_net - beta * at_f.cost) / at_f.phi;
    const double tol = kIndifferenceTolerance * std::max({1.0, std::abs(height_b), std::abs(height_f)});
    if (height_b > height_f + tol) return LocationChoice::AtCbdFringe;
    if (height_f > height_b + tol) return LocationChoice::AtUrbanFringe;
    return LocationChoice::Indifferent;
}

void write_curves_csv(std::ostream& out, std::span<const IndifferenceCurve> curves) {
    out << "beta,a_st,location\n";
    char buf[64];
    for (const auto& c : curves) {
        for (const auto& p : c.points) {
            std::snprintf(buf, sizeof buf, "%.12g,%.12g,", p.beta, p.a_st);
            out << buf << to_string(c.location) << '\n';
        }
    }
}

} // namespace telecity
