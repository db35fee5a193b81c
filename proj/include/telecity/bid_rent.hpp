#pragma once

#include "telecity/params.hpp"

#include <span>
#include <string_view>

namespace telecity {

/// Technology of a firm for bid-rent purposes. Lets counterfactual firm types
/// (other beta / land ratios) be quoted against the same city.
struct FirmSpec {
    double teleworker_ratio;
    double land_per_output;
};

FirmSpec firm_spec(const CityParams& params, FirmType type) noexcept;

/// Zero-profit bid rent per unit of land:
///   (p - beta (w_t + MC_t) - (1 - beta) W - tau (1 - beta) T) / a_s
double bid_rent_firm(const CityParams& params, const FirmSpec& spec, double wage_at_x,
                     double teleworker_wage, double ftf_at_x) noexcept;

double bid_rent_firm(const CityParams& params, FirmType type, double wage_at_x, double teleworker_wage,
                     double ftf_at_x) noexcept;

/// Profit of one firm at x paying `rent` per unit of land.
double firm_profit(const CityParams& params, const FirmSpec& spec, double wage_at_x, double teleworker_wage,
                   double ftf_at_x, double rent) noexcept;

/// (wage_net - z) / h
double bid_rent_household(const CityParams& params, double wage_net, double utility) noexcept;

/// Ordered by tie-break priority: on equal bids the later enumerator wins.
enum class Bidder { Agriculture, Household, Telework, Office };

std::string_view to_string(Bidder bidder) noexcept;

struct RentQuote {
    double value;
    Bidder bidder;
};

/// Relative tolerance under which two bids are treated as tied.
inline constexpr double kRentTieTolerance = 1e-12;

/// Envelope of all quotes and the agricultural rent. Ties (within
/// kRentTieTolerance) resolve agriculture < household < telework < office.
RentQuote market_rent(std::span<const RentQuote> quotes, double agri_rent) noexcept;

} // namespace telecity
