#pragma once

#include <array>
#include <string>
#include <string_view>

namespace telecity {

enum class FirmType { Office, Telework };

std::string_view to_string(FirmType type) noexcept;

/// Raw parameter values. Defaults are the benchmark city used throughout the
/// test-suite (p = 50, M = 50, kappa = tau = 0.15, a_so = 0.2, a_st = 0.18,
/// h = 0.14, R_A = 0) with beta_t = 0.4 and a telework cost high enough that
/// no telework firm enters.
struct ParamValues {
    double price = 50.0;           ///< p, output price
    double firm_mass = 50.0;       ///< M, also the household mass N
    double commuting_cost = 0.15;  ///< kappa, per unit distance
    double ftf_rate = 0.15;        ///< tau, FTF communication cost per unit distance
    double office_land = 0.2;      ///< a_so, land per unit output (office firm)
    double telework_land = 0.18;   ///< a_st, land per unit output (telework firm)
    double lot_size = 0.14;        ///< h, fixed household lot
    double telework_ratio = 0.4;   ///< beta_t in (0, 1)
    double telework_cost = 10.0;   ///< MC_t per teleworker
    double agri_rent = 0.0;        ///< R_A
};

/// Validated, immutable set of exogenous scalars.
///
/// beta_o = 0, a_L = 1 and q = 1 are fixed by the model and exposed as
/// constants. The land condition a_st / (1 - beta_t) > a_so is not enforced here
/// so that inadmissible cells of a parameter sweep can still be represented;
/// the regime classifier rejects them.
class CityParams {
public:
    static constexpr double office_ratio = 0.0;
    static constexpr double labor_per_output = 1.0;
    static constexpr double output_per_firm = 1.0;

    CityParams() : CityParams(ParamValues{}) {}
    explicit CityParams(const ParamValues& values);

    const ParamValues& values() const noexcept { return v_; }

    double price() const noexcept { return v_.price; }
    double firm_mass() const noexcept { return v_.firm_mass; }
    double household_mass() const noexcept { return v_.firm_mass; }
    double kappa() const noexcept { return v_.commuting_cost; }
    double tau() const noexcept { return v_.ftf_rate; }
    double office_land() const noexcept { return v_.office_land; }
    double telework_land() const noexcept { return v_.telework_land; }
    double lot_size() const noexcept { return v_.lot_size; }
    double beta_t() const noexcept { return v_.telework_ratio; }
    double mc_t() const noexcept { return v_.telework_cost; }
    double agri_rent() const noexcept { return v_.agri_rent; }

    double kappa_over_tau() const noexcept { return v_.commuting_cost / v_.ftf_rate; }

    /// Teleworker ratio and land/output ratio of the given firm type.
    double teleworker_ratio(FirmType type) const noexcept;
    double land_per_output(FirmType type) const noexcept;

    bool satisfies_land_condition() const noexcept;

    /// Copy with one named parameter replaced (names as in `parameter_names`).
    CityParams with(std::string_view name, double value) const;
    CityParams with_telework_cost(double mc) const;

    static const std::array<std::string_view, 10>& parameter_names() noexcept;
    double get(std::string_view name) const;

private:
    ParamValues v_;
};

/// Leontief input requirements of a single firm.
struct InputBundle {
    double on_site_labor;
    double tele_labor;
    double land;
};

InputBundle firm_inputs(const CityParams& params, FirmType type);

} // namespace telecity
