#include "fixtures.hpp"

#include "telecity/scenario.hpp"

#include <json.hpp>

#include <cmath>
#include <string>

using namespace telecity;

TEST_CASE("config parsing") {
    const auto cfg = parse_config(R"(
# comments with either marker
; are ignored
[params]
kappa_over_tau = 2.0
tau = 0.1
mc_t = 6

[run]
action = trajectory
format = json
output = out.json
profile_points = 51

[trajectory]
from = 8
to = 6
steps = 5
)");
    CHECK(cfg.params.tau() == 0.1);
    CHECK(cfg.params.kappa() == doctest::Approx(0.2));
    CHECK(cfg.params.mc_t() == 6.0);
    CHECK(cfg.action == Action::Trajectory);
    CHECK(cfg.format == OutputFormat::Json);
    CHECK(cfg.output_path == "out.json");
    CHECK(cfg.profile_points == 51);
    REQUIRE(cfg.mc_schedule.size() == 5);
    CHECK(cfg.mc_schedule.front() == 8.0);
    CHECK(cfg.mc_schedule[1] == doctest::Approx(7.5));
    CHECK(cfg.mc_schedule.back() == 6.0);
}

TEST_CASE("config errors") {
    CHECK_MODEL_ERROR(parse_config("[params]\nbogus = 1\n"), ConfigInvalid);
    CHECK_MODEL_ERROR(parse_config("[params]\np = abc\n"), ConfigInvalid);
    CHECK_MODEL_ERROR(parse_config("[params]\np = -1\n"), ConfigInvalid);
    CHECK_MODEL_ERROR(parse_config("[params]\np = 1\np = 2\n"), ConfigInvalid);
    CHECK_MODEL_ERROR(parse_config("[nowhere]\nx = 1\n"), ConfigInvalid);
    CHECK_MODEL_ERROR(parse_config("[run]\naction = dance\n"), ConfigInvalid);
    CHECK_MODEL_ERROR(parse_config("[run]\nformat = xml\n"), ConfigInvalid);
    CHECK_MODEL_ERROR(parse_config("[params]\njust text\n"), ConfigInvalid);
    CHECK_MODEL_ERROR(parse_config("[trajectory]\nfrom = 8\n"), ConfigInvalid);
    CHECK_MODEL_ERROR(parse_config("[trajectory]\nschedule = 8,7\nfrom = 8\nto = 7\nsteps = 2\n"), ConfigInvalid);
    CHECK_MODEL_ERROR(parse_config("[sweep]\nbeta_t = 0.1:0.9\n"), ConfigInvalid);
    CHECK_MODEL_ERROR(load_config("/nonexistent/telecity.ini"), ConfigInvalid);
}

TEST_CASE("grids, schedules and overrides") {
    const auto grid = parse_grid("kappa_over_tau=0.1:3:30,beta_t=0.05:0.95:19");
    REQUIRE(grid.size() == 2);
    CHECK(grid[0].name == "kappa_over_tau");
    CHECK(grid[0].value(0) == 0.1);
    CHECK(grid[0].value(29) == 3.0);
    CHECK(grid[1].value(1) == doctest::Approx(0.1));
    CHECK_MODEL_ERROR(parse_grid("kappa=1:2:0"), ConfigInvalid);
    CHECK_MODEL_ERROR(parse_grid("nope=1:2:3"), ConfigInvalid);

    const auto s = parse_schedule("10:4:13");
    REQUIRE(s.size() == 13);
    CHECK(s[1] == doctest::Approx(9.5));

    ScenarioConfig cfg;
    apply_override(cfg, "beta_t=0.9");
    CHECK(cfg.params.beta_t() == 0.9);
    CHECK_MODEL_ERROR(apply_override(cfg, "beta_t"), ConfigInvalid);
    CHECK_MODEL_ERROR(apply_override(cfg, "gamma=1"), ConfigInvalid);
    CHECK(with_axis(cfg.params, "kappa_over_tau", 2.0).kappa() == doctest::Approx(0.3));
}

TEST_CASE("regime map") {
    ScenarioConfig cfg;
    cfg.grid = parse_grid("kappa_over_tau=0.5:4.5:9,beta_t=0.1:0.9:9");
    const auto cells = sweep_regime_map(cfg);
    CHECK(cells.size() == 81);
    int b = 0, f = 0, out = 0;
    for (const auto& c : cells) {
        if (c.regime == "TeleworkAtCbdFringe") ++b;
        else if (c.regime == "TeleworkAtUrbanFringe") ++f;
        else ++out;
        // first axis varies slowest
    }
    CHECK(b > 0);
    CHECK(f > 0);
    CHECK(out > 0);
    CHECK(cells[1].coords[0] == cells[0].coords[0]);
    CHECK(cells[9].coords[0] > cells[0].coords[0]);

    cfg.grid = parse_grid("kappa_over_tau=5:6:3");
    CHECK_MODEL_ERROR(sweep_regime_map(cfg), EmptyAdmissibleRegion);
}

TEST_CASE("trajectory records entry and keeps going past failures") {
    ScenarioConfig cfg;
    cfg.mc_schedule = parse_schedule("10:4:13");
    const auto recs = mc_trajectory(cfg);
    REQUIRE(recs.size() == 13);
    CHECK(recs.front().regime == "Benchmark");
    int entries = 0;
    for (const auto& r : recs) entries += r.entry ? 1 : 0;
    CHECK(entries == 1);
    CHECK(recs[4].entry);  // MC_t = 8, first point below 8.2125
    CHECK(recs.back().regime.empty());
    CHECK_FALSE(recs.back().error.empty());

    cfg.mc_schedule = {5.0, 6.0};
    CHECK_MODEL_ERROR(mc_trajectory(cfg), ConfigInvalid);
    cfg.mc_schedule.clear();
    CHECK_MODEL_ERROR(mc_trajectory(cfg), ConfigInvalid);
}

TEST_CASE("every action runs and output is deterministic") {
    ScenarioConfig cfg;
    cfg.params = cfg.params.with_telework_cost(6.0);
    cfg.grid = parse_grid("beta_t=0.1:0.9:5");
    cfg.mc_schedule = parse_schedule("10:6:5");
    for (auto action : {Action::Solve, Action::Classify, Action::ComparativeStatics, Action::Typology,
                        Action::Externalities, Action::Sweep, Action::Trajectory}) {
        for (auto format : {OutputFormat::Csv, OutputFormat::Json}) {
            cfg.action = action;
            cfg.format = format;
            INFO(to_string(action));
            const auto a = run_scenario(cfg);
            CHECK_FALSE(a.empty());
            CHECK(a == run_scenario(cfg));
            if (format == OutputFormat::Json) CHECK(nlohmann::json::accept(a));
        }
    }
}

TEST_CASE("action names") {
    CHECK(parse_action("cs") == Action::ComparativeStatics);
    CHECK(parse_action("comparative-statics") == Action::ComparativeStatics);
    CHECK(parse_action("externalities") == Action::Externalities);
    CHECK_FALSE(parse_action("plot").has_value());
    CHECK(to_string(Action::Sweep) == "sweep");
}
