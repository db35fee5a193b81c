#include "telecity/equilibrium.hpp"

#include "telecity/error.hpp"

#include <array>
#include <cmath>
#include <string>
#include <utility>

namespace telecity {

std::string_view to_string(Occupant occupant) noexcept {
    switch (occupant) {
    case Occupant::Office: return "office";
    case Occupant::Telework: return "telework";
    case Occupant::Household: return "household";
    case Occupant::Mixed: return "mixed";
    case Occupant::Agriculture: return "agriculture";
    }
    return "unknown";
}

Boundaries benchmark_boundaries(const CityParams& params) noexcept {
    const double b = params.office_land() * params.firm_mass() / 2.0;
    return {b, b, b + params.lot_size() * params.firm_mass() / 2.0};
}

Boundaries regime_b_boundaries(const CityParams& params, double theta, FringeGeometry geometry) noexcept {
    const double M = params.firm_mass();
    const double b1 = params.office_land() * theta * M / 2.0;
    const double block = geometry == FringeGeometry::LandMarket ? params.telework_land()
                                                                 : params.lot_size() + params.office_land();
    const double b2 = b1 + block * (1.0 - theta) * M / 2.0;
    const double f = b2 + params.lot_size() * (1.0 - (1.0 - theta) * params.beta_t()) * M / 2.0;
    return {b1, b2, f};
}

double mixed_land_unit(const CityParams& params) noexcept {
    return params.lot_size() * (1.0 - params.beta_t()) + params.telework_land();
}

Boundaries regime_f_boundaries(const CityParams& params, double theta) noexcept {
    const double M = params.firm_mass();
    const double b1 = params.office_land() * theta * M / 2.0;
    const double b2 = b1 + params.lot_size() * theta * M / 2.0;
    return {b1, b2, b2 + mixed_land_unit(params) * (1.0 - theta) * M / 2.0};
}

namespace {

std::vector<Segment> make_segments(RegimeTag regime, const Boundaries& bd) {
    std::vector<Segment> out;
    auto add = [&](double lo, double hi, Occupant who) {
        if (hi > lo) out.push_back({lo, hi, who});
    };
    switch (regime) {
    case RegimeTag::Benchmark:
        add(0.0, bd.b1, Occupant::Office);
        add(bd.b1, bd.f, Occupant::Household);
        break;
    case RegimeTag::TeleworkAtCbdFringe:
        add(0.0, bd.b1, Occupant::Office);
        add(bd.b1, bd.b2, Occupant::Telework);
        add(bd.b2, bd.f, Occupant::Household);
        break;
    case RegimeTag::TeleworkAtUrbanFringe:
        add(0.0, bd.b1, Occupant::Office);
        add(bd.b1, bd.b2, Occupant::Household);
        add(bd.b2, bd.f, Occupant::Mixed);
        break;
    default:
        throw ModelError(ErrorKind::PreconditionFailed,
                         "an equilibrium needs a Benchmark, CbdFringe or UrbanFringe regime, got " +
                             std::string(to_string(regime)));
    }
    return out;
}

FirmLayout make_layout(const CityParams& params, const std::vector<Segment>& segments) {
    std::vector<Interval> right;
    for (const auto& s : segments) {
        switch (s.occupant) {
        case Occupant::Office: right.push_back({s.lo, s.hi, 1.0 / params.office_land()}); break;
        case Occupant::Telework: right.push_back({s.lo, s.hi, 1.0 / params.telework_land()}); break;
        case Occupant::Mixed: right.push_back({s.lo, s.hi, 1.0 / mixed_land_unit(params)}); break;
        default: break;
        }
    }
    return FirmLayout::mirrored(right);
}

} // namespace

Equilibrium::Equilibrium(RegimeTag regime, CityParams params, double theta, double w, double z, double w_t,
                         Boundaries boundaries)
    : regime_(regime),
      params_(std::move(params)),
      theta_(theta),
      w_(w),
      z_(z),
      w_t_(w_t),
      bounds_(boundaries),
      segments_(make_segments(regime, boundaries)),
      layout_(make_layout(params_, segments_)) {
    if (!(bounds_.b1 >= 0.0 && bounds_.b1 <= bounds_.b2 && bounds_.b2 <= bounds_.f))
        throw ModelError(ErrorKind::InvalidParams, "boundaries must satisfy 0 <= b1 <= b2 <= f");
}

double Equilibrium::ftf(double x, FtfWeighting weighting) const { return ftf_cost(layout_, x, weighting); }

double Equilibrium::mixed_wage(double x) const {
    const double h = params_.lot_size();
    const double a = params_.telework_land();
    const double on_site = 1.0 - params_.beta_t();
    const double rhs = params_.price() - params_.beta_t() * (w_t_ + params_.mc_t()) -
                       params_.tau() * on_site * ftf(x);
    return (h * rhs + a * z_) / (a + on_site * h);
}

double Equilibrium::wage(double x) const {
    const double d = std::abs(x);
    if (regime_ != RegimeTag::TeleworkAtUrbanFringe || d <= bounds_.b2) return w_ - params_.kappa() * d;
    if (d <= bounds_.f) return mixed_wage(d);
    return mixed_wage(bounds_.f) - params_.kappa() * (d - bounds_.f);
}

double Equilibrium::psi(double x) const { return bid_rent_household(params_, wage(x), z_); }

double Equilibrium::phi(const FirmSpec& spec, double x) const {
    return bid_rent_firm(params_, spec, wage(x), w_t_, ftf(x));
}

double Equilibrium::phi_office(double x) const { return phi(firm_spec(params_, FirmType::Office), x); }

double Equilibrium::phi_telework(double x) const { return phi(firm_spec(params_, FirmType::Telework), x); }

RentQuote Equilibrium::market(double x) const {
    const std::array<RentQuote, 3> quotes{RentQuote{psi(x), Bidder::Household},
                                          RentQuote{phi_telework(x), Bidder::Telework},
                                          RentQuote{phi_office(x), Bidder::Office}};
    return market_rent(quotes, params_.agri_rent());
}

Occupant Equilibrium::occupant_at(double x) const noexcept {
    const double d = std::abs(x);
    for (const auto& s : segments_)
        if (d <= s.hi) return s.occupant;
    return Occupant::Agriculture;
}

double Equilibrium::household_density(double x) const noexcept {
    switch (occupant_at(x)) {
    case Occupant::Household: return 1.0 / params_.lot_size();
    case Occupant::Mixed: return (1.0 - params_.beta_t()) / mixed_land_unit(params_);
    default: return 0.0;
    }
}

double Equilibrium::office_density(double x) const noexcept {
    return occupant_at(x) == Occupant::Office ? 1.0 / params_.office_land() : 0.0;
}

double Equilibrium::telework_density(double x) const noexcept {
    switch (occupant_at(x)) {
    case Occupant::Telework: return 1.0 / params_.telework_land();
    case Occupant::Mixed: return 1.0 / mixed_land_unit(params_);
    default: return 0.0;
    }
}

ProfilePoint Equilibrium::profile_at(double x) const {
    return ProfilePoint{
        .x = x,
        .psi = psi(x),
        .phi_office = phi_office(x),
        .phi_telework = phi_telework(x),
        .rent = rent(x),
        .wage = wage(x),
        .ftf = ftf(x),
        .households = household_density(x),
        .office_firms = office_density(x),
        .telework_firms = telework_density(x),
        .occupant = occupant_at(x),
    };
}

Equilibrium Equilibrium::with_center_wage(double w) const {
    return Equilibrium(regime_, params_, theta_, w, z_, w_t_, bounds_);
}

} // namespace telecity
