#include "fixtures.hpp"

#include "telecity/regime.hpp"

#include <cmath>

using namespace telecity;

TEST_CASE("entry thresholds at the benchmark parameters") {
    const auto lo = entry_thresholds(fixtures::benchmark());
    CHECK(lo.b == doctest::Approx(5.0));
    CHECK(lo.cbd_fringe == doctest::Approx(3.181818181818).epsilon(1e-10));
    CHECK(lo.urban_fringe == doctest::Approx(2.058823529412).epsilon(1e-10));
    CHECK(lo.benchmark_bound == doctest::Approx(4.117647058824).epsilon(1e-10));
    const auto hi = entry_thresholds(fixtures::benchmark().with("beta_t", 0.9));
    CHECK(hi.cbd_fringe == doctest::Approx(0.721649484536).epsilon(1e-10));
}

TEST_CASE("first-entry classification") {
    CHECK(classify_first_entry(fixtures::benchmark()).tag == RegimeTag::TeleworkAtCbdFringe);
    CHECK(classify_first_entry(fixtures::benchmark().with("beta_t", 0.9)).tag == RegimeTag::TeleworkAtUrbanFringe);

    // kappa/tau above U but below the admissibility bound
    const auto far = fixtures::benchmark().with("kappa", 0.15 * 3.0);
    CHECK(classify_first_entry(far).tag == RegimeTag::OutsideModelScope);
    const auto beyond = fixtures::benchmark().with("kappa", 0.15 * 5.0);
    CHECK(classify_first_entry(beyond).tag == RegimeTag::OutsideModelScope);

    const auto th = entry_thresholds(fixtures::benchmark().with("beta_t", 0.9));
    const auto on_l = fixtures::benchmark().with("beta_t", 0.9).with("kappa", 0.15 * th.cbd_fringe);
    const auto r = classify_first_entry(on_l);
    CHECK(r.tag == RegimeTag::OnThreshold);
    CHECK(r.binding == Threshold::CbdFringe);

    CHECK_MODEL_ERROR(classify_first_entry(fixtures::benchmark().with("a_st", 0.1)), AssumptionViolated);
}

TEST_CASE("L falls in beta and its closed-form slope matches") {
    const auto p = fixtures::benchmark();
    for (double beta : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const double h = 1e-6;
        const double up = entry_thresholds(p.with("beta_t", beta + h)).cbd_fringe;
        const double dn = entry_thresholds(p.with("beta_t", beta - h)).cbd_fringe;
        CHECK(cbd_fringe_threshold_slope(p, beta) == doctest::Approx((up - dn) / (2 * h)).epsilon(1e-6));
        CHECK(cbd_fringe_threshold_slope(p, beta) < 0.0);
    }
}

TEST_CASE("both admissibility predicates on random draws") {
    auto g = fixtures::rng(7);
    int strict_only_wide = 0;
    for (int i = 0; i < 100; ++i) {
        const auto p = fixtures::benchmark()
                           .with("kappa", fixtures::uniform(g, 0.01, 1.0))
                           .with("h", fixtures::uniform(g, 0.05, 0.5))
                           .with("a_so", fixtures::uniform(g, 0.05, 0.5))
                           .with("M", fixtures::uniform(g, 10.0, 100.0));
        const double b = p.office_land() * p.firm_mass() / 2.0;
        const double ratio = p.kappa_over_tau();
        CHECK(benchmark_condition(p) == (ratio < 2.0 * p.lot_size() * b / (p.lot_size() + p.office_land())));
        CHECK(benchmark_condition_strict(p) == (ratio < p.lot_size() * b / (p.lot_size() + p.office_land())));
        // the strict predicate implies the factor-2 one
        if (benchmark_condition_strict(p)) CHECK(benchmark_condition(p));
        if (benchmark_condition(p) && !benchmark_condition_strict(p)) ++strict_only_wide;
    }
    CHECK(strict_only_wide > 0);
}

TEST_CASE("office bid is the steeper on average") {
    auto g = fixtures::rng(11);
    for (int i = 0; i < 100; ++i) {
        const auto p = fixtures::benchmark()
                           .with("beta_t", fixtures::uniform(g, 0.05, 0.95))
                           .with("a_st", fixtures::uniform(g, 0.15, 0.6));
        if (!p.satisfies_land_condition()) continue;
        const auto s = average_rent_slopes(p);
        CHECK(std::abs(s.office) > std::abs(s.telework));
    }
}
