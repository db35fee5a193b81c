#include "fixtures.hpp"

#include "telecity/solver.hpp"
#include "telecity/typology.hpp"

#include <cmath>
#include <sstream>
#include <vector>

using namespace telecity;

namespace {

// synthetic quotes whose lines cross at (0.5, 0.15) with the b line steeper
LaborShiftQuote quote_b() { return {Fringe::Cbd, 1.0, 1.0, 2.0, 10.0}; }
LaborShiftQuote quote_f() { return {Fringe::Urban, 2.0, 0.2, 0.85, 5.0}; }

} // namespace

TEST_CASE("labor shift cost identity at both fringes") {
    for (const auto& host : {solve_regime_b(fixtures::cbd_host()), solve_regime_f(fixtures::urban_host())}) {
        for (auto fr : {Fringe::Cbd, Fringe::Urban}) {
            const auto q = labor_shift_cost(host, fr);
            const auto& par = host.params();
            CHECK(q.p_net - par.telework_land() * q.phi == doctest::Approx(par.beta_t() * q.cost).epsilon(1e-12));
            CHECK(std::abs(curve_residual(q, par.beta_t(), par.telework_land())) < 1e-12);
        }
    }
}

TEST_CASE("labor shift costs at the CBD-fringe host") {
    const auto host = solve_regime_b(fixtures::cbd_host());
    const auto qb = labor_shift_cost(host, Fringe::Cbd);
    CHECK(qb.x == doctest::Approx(host.boundaries().b1));
    CHECK(qb.cost == doctest::Approx(0.4615).epsilon(1e-3));
    CHECK(qb.phi == doctest::Approx(9.23).epsilon(1e-3));
    const auto qb2 = labor_shift_cost(host, Fringe::Cbd, {CbdEdge::ClusterEdge});
    CHECK(qb2.x == doctest::Approx(host.boundaries().b2));
    CHECK(qb2.cost == doctest::Approx(-1.3604).epsilon(1e-3));
    const auto qf = labor_shift_cost(host, Fringe::Urban);
    CHECK(qf.cost == doctest::Approx(-5.1632).epsilon(1e-3));
    CHECK(qf.phi < 0.0);
    CHECK_MODEL_ERROR(indifference_curve(qf, default_beta_grid(), 0.2), DegenerateRent);
}

TEST_CASE("the host type sits on both zero-profit lines") {
    const auto host = solve_regime_b(fixtures::cbd_host());
    const auto x = curve_intersection(host);
    CHECK(x.beta_star == doctest::Approx(0.4).epsilon(1e-10));
    CHECK(x.a_star == doctest::Approx(0.18).epsilon(1e-10));
}

TEST_CASE("intersection of synthetic lines and classification around it") {
    const auto qb = quote_b();
    const auto qf = quote_f();
    const auto x = curve_intersection(qb, qf);
    CHECK(x.beta_star == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(x.a_star == doctest::Approx(0.15).epsilon(1e-12));
    CHECK(std::abs(curve_residual(qb, x.beta_star, x.a_star)) < 1e-12);
    CHECK(std::abs(curve_residual(qf, x.beta_star, x.a_star)) < 1e-12);

    CHECK(classify_firm_type(0.4, 0.2, x, qb, qf, 0.2) == LocationChoice::AtCbdFringe);
    CHECK(classify_firm_type(0.4, 0.14, x, qb, qf, 0.2) == LocationChoice::AtCbdFringe);
    CHECK(classify_firm_type(0.6, 0.1, x, qb, qf, 0.2) == LocationChoice::AtUrbanFringe);
    CHECK(classify_firm_type(0.6, 0.2, x, qb, qf, 0.2) == LocationChoice::AtUrbanFringe);
    CHECK(classify_firm_type(0.5, 0.15, x, qb, qf, 0.2) == LocationChoice::Indifferent);
    CHECK_MODEL_ERROR(classify_firm_type(0.1, 0.1, x, qb, qf, 0.2), OutsideAdmissibleRegion);
    CHECK_MODEL_ERROR(classify_firm_type(1.0, 0.1, x, qb, qf, 0.2), OutsideAdmissibleRegion);
    auto bad = qf;
    bad.phi = -1.0;
    CHECK_MODEL_ERROR(classify_firm_type(0.6, 0.2, x, qb, bad, 0.2), DegenerateRent);
}

TEST_CASE("parallel lines have no intersection") {
    auto qf = quote_f();
    qf.cost = 0.5;  // same slope -C/phi as the b line
    CHECK_MODEL_ERROR(curve_intersection(quote_b(), qf), ParallelCurves);
}

TEST_CASE("curves keep only admissible points") {
    const auto grid = default_beta_grid(9);
    CHECK(grid.front() == doctest::Approx(0.1));
    CHECK(grid.back() == doctest::Approx(0.9));
    // with a_so = 0.28 the line leaves the admissible region for beta < 4/9
    const auto curve = indifference_curve(quote_b(), grid, 0.28);
    CHECK(curve.intercept == doctest::Approx(0.2));
    CHECK(curve.slope == doctest::Approx(-0.1));
    for (const auto& pt : curve.points) {
        CHECK(pt.a_st > 0.0);
        CHECK(1.0 - pt.beta < pt.a_st / 0.28);
    }
    CHECK(curve.points.size() == 5);

    std::ostringstream out;
    const std::vector<IndifferenceCurve> curves{curve};
    write_curves_csv(out, curves);
    CHECK(out.str().rfind("beta,a_st,location\n", 0) == 0);
}

TEST_CASE("collapsed fringe is undefined") {
    const auto p = fixtures::cbd_host();
    const Equilibrium collapsed(RegimeTag::TeleworkAtCbdFringe, p, 0.0, 43.0, 42.0, 42.0, Boundaries{0.0, 4.5, 7.5});
    CHECK_MODEL_ERROR(fringe_location(collapsed, Fringe::Cbd), LocationUndefined);
    CHECK(fringe_location(collapsed, Fringe::Cbd, {CbdEdge::ClusterEdge}) == 4.5);
}
