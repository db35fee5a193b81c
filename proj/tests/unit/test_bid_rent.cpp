#include "fixtures.hpp"

#include "telecity/bid_rent.hpp"
#include "telecity/solver.hpp"

#include <array>
#include <cmath>

using namespace telecity;

TEST_CASE("benchmark bid rents") {
    const auto eq = solve_benchmark(fixtures::benchmark());
    CHECK(eq.phi_office(0.0) == doctest::Approx(18.75).epsilon(1e-12));
    CHECK(eq.phi_office(5.0) == doctest::Approx(3.75).epsilon(1e-12));
    CHECK(eq.psi(5.0) == doctest::Approx(3.75).epsilon(1e-12));
    CHECK(std::abs(eq.psi(8.5)) < 1e-12);
}

TEST_CASE("zero-profit bid rent leaves no profit") {
    const CityParams p = fixtures::cbd_host();
    const FirmSpec spec = firm_spec(p, FirmType::Telework);
    const double r = bid_rent_firm(p, spec, 42.0, 41.0, 30.0);
    CHECK(std::abs(firm_profit(p, spec, 42.0, 41.0, 30.0, r)) < 1e-12);
    CHECK(firm_profit(p, spec, 42.0, 41.0, 30.0, r - 1.0) == doctest::Approx(spec.land_per_output));
    CHECK(bid_rent_firm(p, FirmType::Office, 42.0, 41.0, 30.0) ==
          doctest::Approx((50.0 - 42.0 - 0.15 * 30.0) / 0.2));
    CHECK(bid_rent_household(p, 42.0, 41.3) == doctest::Approx(0.7 / 0.14));
}

TEST_CASE("market rent takes the envelope and resolves ties by priority") {
    const std::array<RentQuote, 3> quotes{RentQuote{2.0, Bidder::Household}, RentQuote{3.0, Bidder::Telework},
                                          RentQuote{1.0, Bidder::Office}};
    const auto top = market_rent(quotes, 0.0);
    CHECK(top.value == 3.0);
    CHECK(top.bidder == Bidder::Telework);

    const std::array<RentQuote, 3> tied{RentQuote{2.0, Bidder::Office}, RentQuote{2.0, Bidder::Household},
                                        RentQuote{2.0, Bidder::Telework}};
    CHECK(market_rent(tied, 2.0).bidder == Bidder::Office);

    const std::array<RentQuote, 1> low{RentQuote{-1.0, Bidder::Household}};
    const auto agri = market_rent(low, 0.5);
    CHECK(agri.bidder == Bidder::Agriculture);
    CHECK(agri.value == 0.5);

    const std::array<RentQuote, 1> at_agri{RentQuote{0.5, Bidder::Household}};
    CHECK(market_rent(at_agri, 0.5).bidder == Bidder::Household);
}

TEST_CASE("telework bid shifts in parallel with its own cost") {
    const auto host = solve_regime_b(fixtures::cbd_host());
    const FirmSpec spec = firm_spec(host.params(), FirmType::Telework);
    const double slope = -host.params().beta_t() / host.params().telework_land();
    for (double dmc : {-2.0, 0.5, 3.0}) {
        const auto shifted =
            Equilibrium(host.regime(), host.params().with_telework_cost(host.params().mc_t() + dmc), host.theta(),
                        host.w(), host.z(), host.w_t(), host.boundaries());
        for (double x : {0.0, 1.0, 3.0, 4.5})
            CHECK(shifted.phi(spec, x) - host.phi(spec, x) == doctest::Approx(slope * dmc).epsilon(1e-12));
    }
}
