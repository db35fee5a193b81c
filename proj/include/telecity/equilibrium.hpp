#pragma once

#include "telecity/bid_rent.hpp"
#include "telecity/layout.hpp"
#include "telecity/params.hpp"
#include "telecity/regime.hpp"

#include <string_view>
#include <vector>

namespace telecity {

struct Boundaries {
    double b1;
    double b2;
    double f;
};

/// Land use of one segment of the right half-city.
enum class Occupant { Office, Telework, Household, Mixed, Agriculture };

std::string_view to_string(Occupant occupant) noexcept;

struct Segment {
    double lo;
    double hi;
    Occupant occupant;
};

/// How the telework block boundary b2 is placed in the CBD-fringe regime.
enum class FringeGeometry {
    LandMarket,  ///< b2 = b1 + a_st (1 - theta) M / 2 (clears the land market)
    Compat       ///< b2 = b1 + (h + a_so) (1 - theta) M / 2, kept for comparison only
};

Boundaries benchmark_boundaries(const CityParams& params) noexcept;
Boundaries regime_b_boundaries(const CityParams& params, double theta,
                               FringeGeometry geometry = FringeGeometry::LandMarket) noexcept;
Boundaries regime_f_boundaries(const CityParams& params, double theta) noexcept;

/// h (1 - beta_t) + a_st, the land taken by one telework firm and its
/// on-site workforce in the mixed zone.
double mixed_land_unit(const CityParams& params) noexcept;

/// Everything that can be read off an equilibrium at a single location.
struct ProfilePoint {
    double x;
    double psi;
    double phi_office;
    double phi_telework;
    double rent;
    double wage;
    double ftf;
    double households;
    double office_firms;
    double telework_firms;
    Occupant occupant;
};

/// A candidate or solved equilibrium with evaluable profiles.
///
/// The regime tag fixes the segment pattern: Benchmark is office | household,
/// TeleworkAtCbdFringe is office | telework | household and
/// TeleworkAtUrbanFringe is office | household | mixed.
class Equilibrium {
public:
    Equilibrium(RegimeTag regime, CityParams params, double theta, double w, double z, double w_t,
                Boundaries boundaries);

    RegimeTag regime() const noexcept { return regime_; }
    const CityParams& params() const noexcept { return params_; }
    double theta() const noexcept { return theta_; }
    double w() const noexcept { return w_; }
    double z() const noexcept { return z_; }
    double w_t() const noexcept { return w_t_; }
    const Boundaries& boundaries() const noexcept { return bounds_; }
    const std::vector<Segment>& segments() const noexcept { return segments_; }
    const FirmLayout& layout() const noexcept { return layout_; }

    /// Wage paid by a firm at x; on household land the net wage of a resident.
    double wage(double x) const;
    /// Mixed-zone wage that equates household and telework bids at x.
    double mixed_wage(double x) const;
    double ftf(double x, FtfWeighting weighting = FtfWeighting::Unit) const;

    double psi(double x) const;
    double phi_office(double x) const;
    double phi_telework(double x) const;
    /// Bid of an arbitrary firm technology against this equilibrium's profiles.
    double phi(const FirmSpec& spec, double x) const;

    RentQuote market(double x) const;
    double rent(double x) const { return market(x).value; }

    /// Land use assigned by the regime pattern (boundaries belong to the inner segment).
    Occupant occupant_at(double x) const noexcept;
    double household_density(double x) const noexcept;
    double office_density(double x) const noexcept;
    double telework_density(double x) const noexcept;

    ProfilePoint profile_at(double x) const;

    /// Same endogenous values with the CBD wage replaced (for perturbation checks).
    Equilibrium with_center_wage(double w) const;

private:
    RegimeTag regime_;
    CityParams params_;
    double theta_;
    double w_;
    double z_;
    double w_t_;
    Boundaries bounds_;
    std::vector<Segment> segments_;
    FirmLayout layout_;
};

} // namespace telecity
