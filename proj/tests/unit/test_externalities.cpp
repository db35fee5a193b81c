#include "fixtures.hpp"

#include "telecity/externalities.hpp"
#include "telecity/solver.hpp"

#include <json.hpp>

#include <cmath>

using namespace telecity;

TEST_CASE("benchmark urban costs") {
    const auto before = urban_costs_before(solve_benchmark(fixtures::benchmark()));
    CHECK(before.closed_form.total_ftf == doctest::Approx(46.875).epsilon(1e-12));
    CHECK(before.integral.total_ftf == doctest::Approx(1000.0 / 3.0).epsilon(1e-10));
    CHECK(before.closed_form.total_commuting == doctest::Approx(7.0875).epsilon(1e-12));
    CHECK(before.integral.total_commuting == doctest::Approx(7.0875).epsilon(1e-10));
    CHECK(before.ftf_ratio == doctest::Approx(64.0 / 9.0).epsilon(1e-10));
    CHECK(before.closed_form.total ==
          doctest::Approx(before.closed_form.total_commuting + before.closed_form.total_ftf));
    CHECK_FALSE(before.note.empty());
}

TEST_CASE("CBD-fringe entry lowers urban costs in both variants") {
    const auto pre = solve_benchmark(fixtures::benchmark());
    const auto post = solve_regime_b(fixtures::cbd_host());
    const auto before = urban_costs_before(pre);
    const auto after = urban_costs_after(post, pre);
    CHECK(after.integral.total_commuting == doctest::Approx(after.closed_form.total_commuting).epsilon(1e-9));
    CHECK(after.closed_form.delta_b == doctest::Approx(5.0 - post.boundaries().b2));
    CHECK(after.closed_form.delta_f == doctest::Approx(8.5 - post.boundaries().f));
    CHECK(externality_sign(before.integral, after.integral) == Externality::Positive);
    CHECK(externality_sign(before.closed_form, after.closed_form) == Externality::Positive);
}

TEST_CASE("urban-fringe entry raises urban costs near entry") {
    const auto pre = solve_benchmark(fixtures::benchmark().with("beta_t", 0.9));
    const double entry = entry_threshold(pre.params()).mc_entry;
    const auto before = urban_costs_before(pre);
    for (double eps : {1e-3, 1e-2, 0.1, 1.0}) {
        const auto post = solve_regime_f(pre.params().with_telework_cost(entry - eps));
        const auto after = urban_costs_after(post, pre);
        CHECK(externality_sign(before.integral, after.integral) == Externality::Negative);
    }
}

TEST_CASE("externality misuse") {
    const auto pre = solve_benchmark(fixtures::benchmark());
    const auto post = solve_regime_b(fixtures::cbd_host());
    CHECK_MODEL_ERROR(urban_costs_before(post), IncompatibleRegimes);
    CHECK_MODEL_ERROR(urban_costs_after(pre, pre), IncompatibleRegimes);
    CHECK_MODEL_ERROR(urban_costs_after(post, post), IncompatibleRegimes);
    const auto before = urban_costs_before(pre);
    CHECK_MODEL_ERROR(externality_sign(before.closed_form, before.integral), VariantMismatch);
    CHECK(externality_sign(before.integral, before.integral) == Externality::Neutral);
}

TEST_CASE("externality report is valid JSON") {
    const auto pre = solve_benchmark(fixtures::benchmark());
    const auto doc = nlohmann::json::parse(
        externality_json(urban_costs_before(pre), urban_costs_after(solve_regime_b(fixtures::cbd_host()), pre)));
    CHECK(doc["sign"]["integral"] == "positive");
    CHECK(doc["before"]["closed_form"]["total_ftf"].get<double>() == doctest::Approx(46.875));
    CHECK(doc.contains("note"));
}
