#pragma once

#include "telecity/params.hpp"

#include <string_view>

namespace telecity {

enum class RegimeTag { Benchmark, TeleworkAtCbdFringe, TeleworkAtUrbanFringe, OnThreshold, OutsideModelScope };

/// Which threshold an OnThreshold classification sits on.
enum class Threshold { None, CbdFringe, UrbanFringe };

std::string_view to_string(RegimeTag tag) noexcept;
std::string_view to_string(Threshold threshold) noexcept;

struct Regime {
    RegimeTag tag = RegimeTag::Benchmark;
    Threshold binding = Threshold::None;

    friend bool operator==(const Regime&, const Regime&) = default;
};

/// kappa/tau thresholds that partition first-entry locations.
struct EntryThresholds {
    double b;                ///< benchmark CBD fringe a_so M / 2
    double cbd_fringe;       ///< L = 2 (1 - beta) h b / (a_st + h (1 - beta))
    double urban_fringe;     ///< U = h b / (a_so + h)
    double benchmark_bound;  ///< 2 h b / (h + a_so), the benchmark admissibility bound
};

EntryThresholds entry_thresholds(const CityParams& params) noexcept;

/// dL/dbeta_t at the given ratio (always negative).
double cbd_fringe_threshold_slope(const CityParams& params, double beta) noexcept;

/// Benchmark admissibility with the factor 2: kappa/tau < 2 h b / (h + a_so).
/// Equivalent to the office bid being steeper than the household bid at b.
bool benchmark_condition(const CityParams& params) noexcept;

/// Stricter variant without the factor 2, equivalent to phi_o(0) > psi(0).
bool benchmark_condition_strict(const CityParams& params) noexcept;

/// Average rate of change of each firm bid over [0, b] in the benchmark city.
/// Both are independent of MC_t; the office one is always the steeper.
struct AverageRentSlopes {
    double office;
    double telework;
};

AverageRentSlopes average_rent_slopes(const CityParams& params) noexcept;

inline constexpr double kThresholdTolerance = 1e-12;

/// Where telework firms first appear as MC_t falls.
/// Throws ModelError(AssumptionViolated) when a_st / (1 - beta_t) <= a_so.
Regime classify_first_entry(const CityParams& params);

} // namespace telecity
