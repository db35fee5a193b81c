#include "telecity/comparative_statics.hpp"
#include "telecity/error.hpp"
#include "telecity/externalities.hpp"
#include "telecity/regime.hpp"
#include "telecity/scenario.hpp"
#include "telecity/solver.hpp"
#include "telecity/typology.hpp"
#include "telecity/validate.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

namespace py = pybind11;
using namespace telecity;

namespace {

py::dict cs_dict(const CsReport& r) {
    py::dict d;
    const auto v = r.values();
    for (std::size_t i = 0; i < v.size(); ++i) d[py::str("d_" + std::string(SignTable::names[i]))] = v[i];
    d["method"] = std::string(to_string(r.method));
    d["step"] = r.step;
    std::string row;
    for (auto s : sign_table(r).cells) row += symbol(s);
    d["signs"] = row;
    return d;
}

py::dict cost_dict(const UrbanCostReport& r) {
    py::dict d;
    d["variant"] = std::string(to_string(r.variant));
    d["regime"] = std::string(to_string(r.regime));
    d["total_commuting"] = r.total_commuting;
    d["total_ftf"] = r.total_ftf;
    d["total"] = r.total;
    d["delta_b"] = r.delta_b;
    d["delta_f"] = r.delta_f;
    return d;
}

py::dict pair_dict(const UrbanCostPair& p) {
    py::dict d;
    d["closed_form"] = cost_dict(p.closed_form);
    d["integral"] = cost_dict(p.integral);
    d["ftf_ratio"] = p.ftf_ratio;
    d["note"] = p.note;
    return d;
}

RegimeSolver solver_for(const std::string& regime) {
    if (regime == "b") return [](const CityParams& p) { return solve_regime_b(p); };
    if (regime == "f") return [](const CityParams& p) { return solve_regime_f(p); };
    if (regime == "auto") return [](const CityParams& p) { return solve_equilibrium(p); };
    throw ModelError(ErrorKind::PreconditionFailed, "regime must be 'b', 'f' or 'auto'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Linear-city equilibrium with office and telework firms";

    static py::handle model_error = py::exception<ModelError>(m, "ModelError", PyExc_RuntimeError).release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ModelError& e) {
            py::object inst = py::reinterpret_borrow<py::object>(model_error)(e.what());
            inst.attr("kind") = std::string(to_string(e.kind()));
            PyErr_SetObject(model_error.ptr(), inst.ptr());
        }
    });

    py::class_<CityParams>(m, "CityParams")
        .def(py::init([](py::kwargs kw) {
                 CityParams p;
                 for (auto item : kw) p = p.with(py::cast<std::string>(item.first), py::cast<double>(item.second));
                 return p;
             }),
             "Benchmark city with keyword overrides (p, M, kappa, tau, a_so, a_st, h, beta_t, mc_t, r_a).")
        .def("with_", &CityParams::with, py::arg("name"), py::arg("value"))
        .def("get", &CityParams::get)
        .def("satisfies_land_condition", &CityParams::satisfies_land_condition)
        .def_property_readonly("kappa_over_tau", &CityParams::kappa_over_tau)
        .def("as_dict", [](const CityParams& p) {
            py::dict d;
            for (auto name : CityParams::parameter_names()) d[py::str(std::string(name))] = p.get(name);
            return d;
        })
        .def("__getattr__", [](const CityParams& p, const std::string& name) { return p.get(name); })
        .def("__repr__", [](const CityParams& p) {
            std::string s = "CityParams(";
            for (auto name : CityParams::parameter_names())
                s += std::string(name) + "=" + py::repr(py::float_(p.get(name))).cast<std::string>() + ", ";
            s.resize(s.size() - 2);
            return s + ")";
        });

    py::class_<Equilibrium>(m, "Equilibrium")
        .def_property_readonly("regime", [](const Equilibrium& e) { return std::string(to_string(e.regime())); })
        .def_property_readonly("params", &Equilibrium::params)
        .def_property_readonly("theta", &Equilibrium::theta)
        .def_property_readonly("w", &Equilibrium::w)
        .def_property_readonly("z", &Equilibrium::z)
        .def_property_readonly("w_t", &Equilibrium::w_t)
        .def_property_readonly("b1", [](const Equilibrium& e) { return e.boundaries().b1; })
        .def_property_readonly("b2", [](const Equilibrium& e) { return e.boundaries().b2; })
        .def_property_readonly("f", [](const Equilibrium& e) { return e.boundaries().f; })
        .def("psi", &Equilibrium::psi)
        .def("phi_office", &Equilibrium::phi_office)
        .def("phi_telework", &Equilibrium::phi_telework)
        .def("rent", &Equilibrium::rent)
        .def("wage", &Equilibrium::wage)
        .def("occupant_at", [](const Equilibrium& e, double x) { return std::string(to_string(e.occupant_at(x))); });

    m.def("entry_thresholds", [](const CityParams& p) {
        const auto t = entry_thresholds(p);
        py::dict d;
        d["b"] = t.b;
        d["cbd_fringe"] = t.cbd_fringe;
        d["urban_fringe"] = t.urban_fringe;
        d["benchmark_bound"] = t.benchmark_bound;
        return d;
    });
    m.def("classify_first_entry", [](const CityParams& p) {
        const auto r = classify_first_entry(p);
        return py::make_tuple(std::string(to_string(r.tag)), std::string(to_string(r.binding)));
    });
    m.def("entry_threshold", [](const CityParams& p) {
        const auto r = entry_threshold(p);
        py::dict d;
        d["regime"] = std::string(to_string(r.regime.tag));
        d["mc_entry"] = r.mc_entry;
        d["cbd_fringe_mc"] = r.cbd_fringe.mc;
        d["urban_fringe_mc"] = r.urban_fringe.mc;
        return d;
    });

    m.def("solve_benchmark", &solve_benchmark);
    m.def("solve_regime_b", [](const CityParams& p) { return solve_regime_b(p); });
    m.def("solve_regime_f", [](const CityParams& p) { return solve_regime_f(p); });
    m.def("solve_equilibrium", [](const CityParams& p) { return solve_equilibrium(p); });
    m.def("boundary_residuals", &boundary_residuals);

    m.def(
        "validate",
        [](const Equilibrium& e, std::size_t grid) {
            const auto r = validate_equilibrium(e, grid);
            py::dict d;
            d["ok"] = r.ok();
            d["envelope_violations"] = r.envelope_violations;
            d["land_accounting_error"] = r.land_accounting_error;
            d["population_error"] = r.population_error;
            d["labor_error"] = r.labor_error;
            d["rent_continuity_gap"] = r.rent_continuity_gap;
            d["commuting_violations"] = r.commuting_violations;
            d["profit_residual"] = r.profit_residual;
            d["utility_gap"] = r.utility_gap;
            return d;
        },
        py::arg("eq"), py::arg("grid") = 2001);

    m.def("analytic_cs_regime_b", [](const Equilibrium& e) { return cs_dict(analytic_cs_regime_b(e)); });
    m.def(
        "fd_derivatives",
        [](const CityParams& p, const std::string& regime, double step) {
            return cs_dict(fd_derivatives(p, solver_for(regime), step));
        },
        py::arg("params"), py::arg("regime") = "auto", py::arg("step") = 0.0);

    m.def("labor_shift_cost", [](const Equilibrium& e, const std::string& fringe) {
        if (fringe != "b" && fringe != "f")
            throw ModelError(ErrorKind::LocationUndefined, "fringe must be 'b' or 'f'");
        const auto q = labor_shift_cost(e, fringe == "b" ? Fringe::Cbd : Fringe::Urban);
        py::dict d;
        d["x"] = q.x;
        d["cost"] = q.cost;
        d["p_net"] = q.p_net;
        d["phi"] = q.phi;
        return d;
    });
    m.def("curve_intersection", [](const Equilibrium& e) {
        const auto x = curve_intersection(e);
        return py::make_tuple(x.beta_star, x.a_star);
    });

    m.def(
        "urban_costs",
        [](const Equilibrium& benchmark, const Equilibrium* post) {
            py::dict d;
            d["before"] = pair_dict(urban_costs_before(benchmark));
            if (post) d["after"] = pair_dict(urban_costs_after(*post, benchmark));
            return d;
        },
        py::arg("benchmark"), py::arg("post") = nullptr);

    m.def("mc_trajectory", [](const CityParams& p, const std::vector<double>& schedule) {
        ScenarioConfig cfg;
        cfg.params = p;
        cfg.mc_schedule = schedule;
        py::list out;
        for (const auto& r : mc_trajectory(cfg)) {
            py::dict d;
            d["mc_t"] = r.mc_t;
            d["regime"] = r.regime;
            d["theta"] = r.theta;
            d["w"] = r.w;
            d["z"] = r.z;
            d["b1"] = r.b1;
            d["b2"] = r.b2;
            d["f"] = r.f;
            d["entry"] = r.entry;
            d["error"] = r.error;
            out.append(d);
        }
        return out;
    });

    m.def("run_config", [](const std::string& text) { return run_scenario(parse_config(text)); },
          "Run a scenario given as config text and return its formatted output.");
}
