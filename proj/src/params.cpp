#include "telecity/params.hpp"

#include "telecity/error.hpp"

#include <cmath>
#include <string>

namespace telecity {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::AssumptionViolated: return "AssumptionViolated";
    case ErrorKind::NoRoot: return "NoRoot";
    case ErrorKind::NonUniqueRoot: return "NonUniqueRoot";
    case ErrorKind::MixedConditionViolated: return "MixedConditionViolated";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::SolverFailedAtPerturbedPoint: return "SolverFailedAtPerturbedPoint";
    case ErrorKind::LocationUndefined: return "LocationUndefined";
    case ErrorKind::DegenerateRent: return "DegenerateRent";
    case ErrorKind::ParallelCurves: return "ParallelCurves";
    case ErrorKind::OutsideAdmissibleRegion: return "OutsideAdmissibleRegion";
    case ErrorKind::IncompatibleRegimes: return "IncompatibleRegimes";
    case ErrorKind::VariantMismatch: return "VariantMismatch";
    case ErrorKind::EmptyAdmissibleRegion: return "EmptyAdmissibleRegion";
    case ErrorKind::ConfigInvalid: return "ConfigInvalid";
    }
    return "Unknown";
}

std::string_view to_string(FirmType type) noexcept {
    return type == FirmType::Office ? "office" : "telework";
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw ModelError(ErrorKind::InvalidParams, what);
}

bool finite_all(const ParamValues& v) {
    for (double x : {v.price, v.firm_mass, v.commuting_cost, v.ftf_rate, v.office_land,
                     v.telework_land, v.lot_size, v.telework_ratio, v.telework_cost, v.agri_rent})
        if (!std::isfinite(x)) return false;
    return true;
}

} // namespace

CityParams::CityParams(const ParamValues& values) : v_(values) {
    require(finite_all(v_), "all parameters must be finite");
    require(v_.price > 0, "price p must be positive");
    require(v_.firm_mass > 0, "firm mass M must be positive");
    // kappa/(2 tau) and kappa/tau are undefined or degenerate otherwise
    require(v_.commuting_cost > 0, "commuting cost kappa must be positive");
    require(v_.ftf_rate > 0, "FTF cost tau must be positive");
    require(v_.office_land > 0, "a_so must be positive");
    require(v_.telework_land > 0, "a_st must be positive");
    require(v_.lot_size > 0, "lot size h must be positive");
    require(v_.telework_ratio > 0 && v_.telework_ratio < 1, "beta_t must lie in (0, 1)");
    require(v_.telework_cost >= 0, "MC_t must be non-negative");
    require(v_.agri_rent >= 0, "R_A must be non-negative");
}

double CityParams::teleworker_ratio(FirmType type) const noexcept {
    return type == FirmType::Office ? office_ratio : v_.telework_ratio;
}

double CityParams::land_per_output(FirmType type) const noexcept {
    return type == FirmType::Office ? v_.office_land : v_.telework_land;
}

bool CityParams::satisfies_land_condition() const noexcept {
    return v_.telework_land / (1.0 - v_.telework_ratio) > v_.office_land;
}

const std::array<std::string_view, 10>& CityParams::parameter_names() noexcept {
    static constexpr std::array<std::string_view, 10> names = {
        "p", "M", "kappa", "tau", "a_so", "a_st", "h", "beta_t", "mc_t", "r_a"};
    return names;
}

namespace {

double* field(ParamValues& v, std::string_view name) {
    if (name == "p") return &v.price;
    if (name == "M") return &v.firm_mass;
    if (name == "kappa") return &v.commuting_cost;
    if (name == "tau") return &v.ftf_rate;
    if (name == "a_so") return &v.office_land;
    if (name == "a_st") return &v.telework_land;
    if (name == "h") return &v.lot_size;
    if (name == "beta_t") return &v.telework_ratio;
    if (name == "mc_t") return &v.telework_cost;
    if (name == "r_a") return &v.agri_rent;
    return nullptr;
}

} // namespace

CityParams CityParams::with(std::string_view name, double value) const {
    ParamValues copy = v_;
    double* slot = field(copy, name);
    if (!slot) throw ModelError(ErrorKind::InvalidParams, "unknown parameter '" + std::string(name) + "'");
    *slot = value;
    return CityParams(copy);
}

CityParams CityParams::with_telework_cost(double mc) const { return with("mc_t", mc); }

double CityParams::get(std::string_view name) const {
    ParamValues copy = v_;
    double* slot = field(copy, name);
    if (!slot) throw ModelError(ErrorKind::InvalidParams, "unknown parameter '" + std::string(name) + "'");
    return *slot;
}

InputBundle firm_inputs(const CityParams& params, FirmType type) {
    const double beta = params.teleworker_ratio(type);
    const double labor = CityParams::labor_per_output * CityParams::output_per_firm;
    return InputBundle{(1.0 - beta) * labor, beta * labor,
                       params.land_per_output(type) * CityParams::output_per_firm};
}

} // namespace telecity
