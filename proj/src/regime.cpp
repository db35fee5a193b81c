#include "telecity/regime.hpp"

#include "telecity/error.hpp"

#include <algorithm>
#include <cmath>

namespace telecity {

std::string_view to_string(RegimeTag tag) noexcept {
    switch (tag) {
    case RegimeTag::Benchmark: return "Benchmark";
    case RegimeTag::TeleworkAtCbdFringe: return "TeleworkAtCbdFringe";
    case RegimeTag::TeleworkAtUrbanFringe: return "TeleworkAtUrbanFringe";
    case RegimeTag::OnThreshold: return "OnThreshold";
    case RegimeTag::OutsideModelScope: return "OutsideModelScope";
    }
    return "Unknown";
}

std::string_view to_string(Threshold threshold) noexcept {
    switch (threshold) {
    case Threshold::None: return "none";
    case Threshold::CbdFringe: return "cbd_fringe";
    case Threshold::UrbanFringe: return "urban_fringe";
    }
    return "unknown";
}

EntryThresholds entry_thresholds(const CityParams& params) noexcept {
    const double h = params.lot_size();
    const double a_so = params.office_land();
    const double a_st = params.telework_land();
    const double on_site = 1.0 - params.beta_t();
    const double b = a_so * params.firm_mass() / 2.0;
    return EntryThresholds{
        .b = b,
        .cbd_fringe = 2.0 * on_site * h * b / (a_st + h * on_site),
        .urban_fringe = h * b / (a_so + h),
        .benchmark_bound = 2.0 * h * b / (h + a_so),
    };
}

double cbd_fringe_threshold_slope(const CityParams& params, double beta) noexcept {
    const double h = params.lot_size();
    const double a_st = params.telework_land();
    const double b = params.office_land() * params.firm_mass() / 2.0;
    const double denom = a_st + h * (1.0 - beta);
    return -2.0 * h * b * a_st / (denom * denom);
}

bool benchmark_condition(const CityParams& params) noexcept {
    return params.kappa_over_tau() < entry_thresholds(params).benchmark_bound;
}

bool benchmark_condition_strict(const CityParams& params) noexcept {
    return params.kappa_over_tau() < entry_thresholds(params).urban_fringe;
}

AverageRentSlopes average_rent_slopes(const CityParams& params) noexcept {
    const double b = params.office_land() * params.firm_mass() / 2.0;
    const double gap = params.kappa() - params.tau() * b;
    return AverageRentSlopes{gap / params.office_land(),
                             (1.0 - params.beta_t()) * gap / params.telework_land()};
}

namespace {

bool near(double a, double b) noexcept {
    return std::abs(a - b) <= kThresholdTolerance * std::max(1.0, std::abs(b));
}

} // namespace

Regime classify_first_entry(const CityParams& params) {
    if (!params.satisfies_land_condition())
        throw ModelError(ErrorKind::AssumptionViolated, "a_st / (1 - beta_t) must exceed a_so");

    const auto th = entry_thresholds(params);
    const double ratio = params.kappa_over_tau();
    if (!(ratio < th.benchmark_bound)) return {RegimeTag::OutsideModelScope, Threshold::None};
    if (near(ratio, th.urban_fringe)) return {RegimeTag::OnThreshold, Threshold::UrbanFringe};
    // kappa/tau >= U lies outside the mapped region even when L > U
    if (ratio > th.urban_fringe) return {RegimeTag::OutsideModelScope, Threshold::None};
    if (near(ratio, th.cbd_fringe)) return {RegimeTag::OnThreshold, Threshold::CbdFringe};
    if (ratio < th.cbd_fringe) return {RegimeTag::TeleworkAtCbdFringe, Threshold::None};
    return {RegimeTag::TeleworkAtUrbanFringe, Threshold::None};
}

} // namespace telecity
