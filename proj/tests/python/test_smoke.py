import json
import math

import pytest

import telecity


def test_benchmark_values():
    eq = telecity.solve_benchmark(telecity.CityParams())
    assert eq.regime == "Benchmark"
    assert eq.b1 == pytest.approx(5.0, abs=1e-12)
    assert eq.f == pytest.approx(8.5, abs=1e-12)
    assert eq.w == pytest.approx(42.5, abs=1e-12)
    assert eq.z == pytest.approx(41.225, abs=1e-12)
    assert eq.psi(eq.f) == pytest.approx(0.0, abs=1e-12)


def test_params_keywords_and_errors():
    p = telecity.CityParams(beta_t=0.9, mc_t=7)
    assert p.beta_t == 0.9
    assert p.as_dict()["mc_t"] == 7.0
    with pytest.raises(telecity.ModelError) as err:
        telecity.CityParams(beta_t=1.5)
    assert err.value.kind == "InvalidParams"


def test_regimes_and_thresholds():
    assert telecity.classify_first_entry(telecity.CityParams())[0] == "TeleworkAtCbdFringe"
    assert telecity.classify_first_entry(telecity.CityParams(beta_t=0.9))[0] == "TeleworkAtUrbanFringe"
    th = telecity.entry_thresholds(telecity.CityParams())
    assert th["cbd_fringe"] == pytest.approx(3.181818, abs=1e-6)
    assert th["urban_fringe"] == pytest.approx(2.058824, abs=1e-6)


def test_post_entry_solves_validate():
    b = telecity.solve_regime_b(telecity.CityParams(mc_t=6))
    assert 0 < b.theta < 1
    assert max(abs(r) for r in telecity.boundary_residuals(b)) < 1e-10
    assert telecity.validate(b)["ok"]
    f = telecity.solve_equilibrium(telecity.CityParams(beta_t=0.9, mc_t=7))
    assert f.regime == "TeleworkAtUrbanFringe"
    assert f.occupant_at(0.5 * (f.b2 + f.f)) == "mixed"


def test_statics_signs():
    b = telecity.solve_regime_b(telecity.CityParams(mc_t=6))
    assert telecity.analytic_cs_regime_b(b)["signs"] == "+--++++++"
    assert telecity.fd_derivatives(telecity.CityParams(beta_t=0.9, mc_t=7), "f")["signs"] == "+--++++++"


def test_solver_error_kind():
    with pytest.raises(telecity.ModelError) as err:
        telecity.solve_regime_b(telecity.CityParams(mc_t=4))
    assert err.value.kind == "NoRoot"


def test_externalities_and_trajectory():
    pre = telecity.solve_benchmark(telecity.CityParams())
    post = telecity.solve_regime_b(telecity.CityParams(mc_t=6))
    costs = telecity.urban_costs(pre, post)
    assert costs["before"]["closed_form"]["total_ftf"] == pytest.approx(46.875)
    assert costs["after"]["integral"]["total"] < costs["before"]["integral"]["total"]
    recs = telecity.mc_trajectory(telecity.CityParams(), [10, 9, 8, 7, 6])
    assert [r["entry"] for r in recs].count(True) == 1
    assert all(not r["error"] for r in recs)
    assert recs[-1]["theta"] < recs[-2]["theta"]
    assert math.isnan(recs[0]["b2"]) is False


def test_run_config_json():
    out = telecity.run_config("[params]\nmc_t = 6\n[run]\naction = classify\nformat = json\n")
    assert json.loads(out)
