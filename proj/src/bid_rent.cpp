#include "telecity/bid_rent.hpp"

#include <algorithm>
#include <cmath>

namespace telecity {

FirmSpec firm_spec(const CityParams& params, FirmType type) noexcept {
    return FirmSpec{params.teleworker_ratio(type), params.land_per_output(type)};
}

double firm_profit(const CityParams& params, const FirmSpec& spec, double wage_at_x, double teleworker_wage,
                   double ftf_at_x, double rent) noexcept {
    const double beta = spec.teleworker_ratio;
    const double q = CityParams::output_per_firm;
    return params.price() * q - beta * q * (teleworker_wage + params.mc_t()) - (1.0 - beta) * q * wage_at_x -
           spec.land_per_output * q * rent - params.tau() * (1.0 - beta) * q * ftf_at_x;
}

double bid_rent_firm(const CityParams& params, const FirmSpec& spec, double wage_at_x, double teleworker_wage,
                     double ftf_at_x) noexcept {
    const double beta = spec.teleworker_ratio;
    return (params.price() - beta * (teleworker_wage + params.mc_t()) - (1.0 - beta) * wage_at_x -
            params.tau() * (1.0 - beta) * ftf_at_x) /
           spec.land_per_output;
}

double bid_rent_firm(const CityParams& params, FirmType type, double wage_at_x, double teleworker_wage,
                     double ftf_at_x) noexcept {
    return bid_rent_firm(params, firm_spec(params, type), wage_at_x, teleworker_wage, ftf_at_x);
}

double bid_rent_household(const CityParams& params, double wage_net, double utility) noexcept {
    return (wage_net - utility) / params.lot_size();
}

std::string_view to_string(Bidder bidder) noexcept {
    switch (bidder) {
    case Bidder::Agriculture: return "agriculture";
    case Bidder::Household: return "household";
    case Bidder::Telework: return "telework";
    case Bidder::Office: return "office";
    }
    return "unknown";
}

RentQuote market_rent(std::span<const RentQuote> quotes, double agri_rent) noexcept {
    RentQuote best{agri_rent, Bidder::Agriculture};
    for (const auto& q : quotes) {
        const double tol = kRentTieTolerance * std::max({1.0, std::abs(q.value), std::abs(best.value)});
        if (q.value > best.value + tol) {
            best = q;
        } else if (std::abs(q.value - best.value) <= tol && q.bidder > best.bidder) {
            best = RentQuote{std::max(q.value, best.value), q.bidder};
        }
    }
    return best;
}

} // namespace telecity
