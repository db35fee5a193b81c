#include "telecity/scenario.hpp"

#include "telecity/comparative_statics.hpp"
#include "telecity/error.hpp"
#include "telecity/externalities.hpp"
#include "telecity/solver.hpp"
#include "telecity/typology.hpp"
#include "telecity/validate.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace telecity {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

[[noreturn]] void config_error(const std::string& msg) { throw ModelError(ErrorKind::ConfigInvalid, msg); }

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view text, std::string_view what) {
    text = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
        config_error("'" + std::string(text) + "' is not a number for " + std::string(what));
    return v;
}

std::size_t parse_count(std::string_view text, std::string_view what) {
    const double v = parse_number(text, what);
    if (v < 1.0 || v != std::floor(v) || v > 1e7) config_error(std::string(what) + " must be a positive integer");
    return static_cast<std::size_t>(v);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

bool is_parameter(std::string_view name) {
    const auto& names = CityParams::parameter_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

GridAxis parse_axis(std::string_view name, std::string_view range) {
    name = trim(name);
    if (name != "kappa_over_tau" && !is_parameter(name)) config_error("unknown sweep axis '" + std::string(name) + "'");
    const auto parts = split(range, ':');
    if (parts.size() != 3) config_error("sweep axis '" + std::string(name) + "' needs min:max:steps");
    GridAxis axis{std::string(name), parse_number(parts[0], name), parse_number(parts[1], name),
                  parse_count(parts[2], name)};
    if (axis.max < axis.min) config_error("sweep axis '" + axis.name + "' has max < min");
    return axis;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

CityParams make_params(const CityParams& base, std::string_view name, double value) {
    try {
        return with_axis(base, name, value);
    } catch (const ModelError& e) {
        if (e.kind() == ErrorKind::InvalidParams) config_error(e.what());
        throw;
    }
}

std::vector<double> evenly_spaced(double from, double to, std::size_t steps) {
    std::vector<double> out(steps);
    for (std::size_t i = 0; i < steps; ++i)
        out[i] = steps == 1 ? from : from + (to - from) * static_cast<double>(i) / static_cast<double>(steps - 1);
    return out;
}

} // namespace

std::vector<double> parse_schedule(std::string_view spec) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) config_error("schedule needs from:to:steps");
    return evenly_spaced(parse_number(parts[0], "schedule"), parse_number(parts[1], "schedule"),
                         parse_count(parts[2], "schedule"));
}

std::string_view to_string(Action action) noexcept {
    switch (action) {
    case Action::Solve: return "solve";
    case Action::Classify: return "classify";
    case Action::ComparativeStatics: return "cs";
    case Action::Typology: return "typology";
    case Action::Externalities: return "externality";
    case Action::Sweep: return "sweep";
    case Action::Trajectory: return "trajectory";
    }
    return "unknown";
}

std::optional<Action> parse_action(std::string_view name) noexcept {
    for (auto a : {Action::Solve, Action::Classify, Action::ComparativeStatics, Action::Typology,
                   Action::Externalities, Action::Sweep, Action::Trajectory})
        if (to_string(a) == name) return a;
    if (name == "comparative-statics") return Action::ComparativeStatics;
    if (name == "externalities") return Action::Externalities;
    return std::nullopt;
}

double GridAxis::value(std::size_t i) const noexcept {
    if (steps <= 1) return min;
    return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

CityParams with_axis(const CityParams& params, std::string_view axis, double value) {
    if (axis == "kappa_over_tau") return params.with("kappa", value * params.tau());
    return params.with(axis, value);
}

std::vector<GridAxis> parse_grid(std::string_view spec) {
    std::vector<GridAxis> axes;
    for (auto item : split(spec, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) config_error("grid entry '" + std::string(item) + "' needs name=min:max:steps");
        auto axis = parse_axis(item.substr(0, eq), item.substr(eq + 1));
        for (const auto& a : axes)
            if (a.name == axis.name) config_error("duplicate sweep axis '" + axis.name + "'");
        axes.push_back(std::move(axis));
    }
    if (axes.empty()) config_error("empty grid specification");
    return axes;
}

void apply_override(ScenarioConfig& config, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos) config_error("override '" + std::string(assignment) + "' needs key=value");
    const auto key = trim(assignment.substr(0, eq));
    if (!is_parameter(key) && key != "kappa_over_tau") config_error("unknown parameter '" + std::string(key) + "'");
    config.params = make_params(config.params, key, parse_number(assignment.substr(eq + 1), key));
}

ScenarioConfig parse_config(std::string_view text) {
    namespace pt = boost::property_tree;
    pt::ptree tree;
    try {
        std::istringstream in{std::string(text)};
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        config_error(std::string("malformed config: ") + e.message() + " at line " + std::to_string(e.line()));
    }

    ScenarioConfig cfg;
    bool schedule_list = false;
    std::optional<double> mc_from, mc_to;
    std::optional<std::size_t> mc_steps;
    std::optional<double> ratio;  // applied after tau is known
    for (const auto& [section, body] : tree) {
        if (!body.data().empty()) config_error("key '" + section + "' outside a section");
        for (const auto& [key, node] : body) {
            const std::string value = node.data();
            if (section == "params") {
                if (key == "kappa_over_tau") {
                    ratio = parse_number(value, key);
                    continue;
                }
                if (!is_parameter(key)) config_error("unknown parameter '" + key + "'");
                cfg.params = make_params(cfg.params, key, parse_number(value, key));
            } else if (section == "run") {
                if (key == "action") {
                    const auto a = parse_action(trim(value));
                    if (!a) config_error("unknown action '" + value + "'");
                    cfg.action = *a;
                } else if (key == "format") {
                    const auto v = trim(value);
                    if (v == "csv") cfg.format = OutputFormat::Csv;
                    else if (v == "json") cfg.format = OutputFormat::Json;
                    else config_error("format must be csv or json");
                } else if (key == "output") {
                    cfg.output_path = std::string(trim(value));
                } else if (key == "profile_points") {
                    cfg.profile_points = parse_count(value, key);
                } else {
                    config_error("unknown [run] key '" + key + "'");
                }
            } else if (section == "sweep") {
                cfg.grid.push_back(parse_axis(key, value));
            } else if (section == "trajectory") {
                if (key == "schedule") {
                    schedule_list = true;
                    for (auto item : split(value, ',')) cfg.mc_schedule.push_back(parse_number(item, "schedule"));
                } else if (key == "from") {
                    mc_from = parse_number(value, key);
                } else if (key == "to") {
                    mc_to = parse_number(value, key);
                } else if (key == "steps") {
                    mc_steps = parse_count(value, key);
                } else {
                    config_error("unknown [trajectory] key '" + key + "'");
                }
            } else {
                config_error("unknown section [" + section + "]");
            }
        }
    }
    if (ratio) cfg.params = make_params(cfg.params, "kappa_over_tau", *ratio);
    if (mc_from || mc_to || mc_steps) {
        if (schedule_list) config_error("give either a schedule list or from/to/steps");
        if (!(mc_from && mc_to && mc_steps)) config_error("trajectory range needs from, to and steps");
        cfg.mc_schedule = evenly_spaced(*mc_from, *mc_to, *mc_steps);
    }
    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) config_error("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::vector<RegimeCell> sweep_regime_map(const ScenarioConfig& config) {
    if (config.grid.empty()) config_error("sweep needs at least one grid axis");
    std::size_t cells = 1;
    for (const auto& a : config.grid) cells *= a.steps;

    std::vector<RegimeCell> out;
    out.reserve(cells);
    bool any = false;
    std::vector<std::size_t> idx(config.grid.size(), 0);
    for (std::size_t c = 0; c < cells; ++c) {
        std::size_t rem = c;
        for (std::size_t k = config.grid.size(); k-- > 0;) {
            idx[k] = rem % config.grid[k].steps;
            rem /= config.grid[k].steps;
        }
        RegimeCell cell{{}, "Inadmissible", kNaN, kNaN};
        try {
            CityParams p = config.params;
            for (std::size_t k = 0; k < config.grid.size(); ++k) {
                const double v = config.grid[k].value(idx[k]);
                cell.coords.push_back(v);
                p = with_axis(p, config.grid[k].name, v);
            }
            const auto th = entry_thresholds(p);
            cell.cbd_threshold = th.cbd_fringe;
            cell.urban_threshold = th.urban_fringe;
            if (p.satisfies_land_condition() && benchmark_condition(p)) {
                const auto r = classify_first_entry(p);
                cell.regime = std::string(to_string(r.tag));
                any = true;
            }
        } catch (const ModelError&) {
            cell.coords.resize(config.grid.size(), kNaN);
            for (std::size_t k = 0; k < config.grid.size(); ++k) cell.coords[k] = config.grid[k].value(idx[k]);
        }
        out.push_back(std::move(cell));
    }
    if (!any) throw ModelError(ErrorKind::EmptyAdmissibleRegion, "no grid cell lies in the admissible region");
    return out;
}

std::vector<TrajectoryRecord> mc_trajectory(const ScenarioConfig& config) {
    const auto& s = config.mc_schedule;
    if (s.empty()) config_error("trajectory needs an MC_t schedule");
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!(s[i] < s[i - 1])) config_error("MC_t schedule must be strictly decreasing");

    double entry_mc = kNaN;
    try {
        entry_mc = entry_threshold(config.params).mc_entry;
    } catch (const ModelError&) {
    }

    std::vector<TrajectoryRecord> out;
    out.reserve(s.size());
    bool entered = false;
    for (double mc : s) {
        TrajectoryRecord rec{mc, "", kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, false, entry_mc, ""};
        try {
            const auto p = make_params(config.params, "mc_t", mc);
            const auto eq = solve_equilibrium(p);
            const auto& bd = eq.boundaries();
            rec.regime = std::string(to_string(eq.regime()));
            rec.theta = eq.theta();
            rec.w = eq.w();
            rec.z = eq.z();
            rec.b1 = bd.b1;
            rec.b2 = bd.b2;
            rec.f = bd.f;
            rec.rent_center = eq.rent(0.0);
            rec.rent_b1 = eq.rent(bd.b1);
            rec.rent_b2 = eq.rent(bd.b2);
            if (eq.regime() != RegimeTag::Benchmark && !entered) {
                rec.entry = true;
                entered = true;
            }
        } catch (const ModelError& e) {
            rec.error = e.what();
        }
        out.push_back(std::move(rec));
    }
    return out;
}

namespace {

using nlohmann::json;

json validation_json(const ValidationReport& r) {
    return {{"grid_points", r.grid_points},
            {"envelope_violations", r.envelope_violations},
            {"envelope_worst_gap", r.envelope_worst_gap},
            {"land_accounting_error", r.land_accounting_error},
            {"population_error", r.population_error},
            {"labor_error", r.labor_error},
            {"rent_continuity_gap", r.rent_continuity_gap},
            {"commuting_violations", r.commuting_violations},
            {"profit_residual", r.profit_residual},
            {"utility_gap", r.utility_gap}};
}

std::string run_solve(const ScenarioConfig& cfg) {
    const auto eq = solve_equilibrium(cfg.params);
    const auto& bd = eq.boundaries();
    const std::size_t n = std::max<std::size_t>(cfg.profile_points, 2);
    const double span = 1.2 * bd.f;
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = -span + 2.0 * span * static_cast<double>(i) / static_cast<double>(n - 1);

    if (cfg.format == OutputFormat::Csv) {
        std::string out = "x,psi,phi_o,phi_t,rent,wage,occupant\n";
        for (double x : xs) {
            const auto pp = eq.profile_at(x);
            out += num(pp.x) + ',' + num(pp.psi) + ',' + num(pp.phi_office) + ',' + num(pp.phi_telework) + ',' +
                   num(pp.rent) + ',' + num(pp.wage) + ',' + std::string(to_string(pp.occupant)) + '\n';
        }
        return out;
    }
    json doc{{"regime", to_string(eq.regime())}, {"theta", eq.theta()}, {"w", eq.w()},   {"z", eq.z()},
             {"w_t", eq.w_t()},                 {"b1", bd.b1},           {"b2", bd.b2},  {"f", bd.f}};
    json segs = json::array();
    for (const auto& s : eq.segments()) segs.push_back({{"lo", s.lo}, {"hi", s.hi}, {"occupant", to_string(s.occupant)}});
    doc["segments"] = segs;
    doc["validation"] = validation_json(validate_equilibrium(eq));
    json prof = json::array();
    for (double x : xs) {
        const auto pp = eq.profile_at(x);
        prof.push_back({{"x", pp.x}, {"psi", pp.psi}, {"phi_o", pp.phi_office}, {"phi_t", pp.phi_telework},
                        {"rent", pp.rent}, {"wage", pp.wage}, {"occupant", to_string(pp.occupant)}});
    }
    doc["profile"] = prof;
    return doc.dump(2) + '\n';
}

std::string run_classify(const ScenarioConfig& cfg) {
    const auto regime = classify_first_entry(cfg.params);
    const auto th = entry_thresholds(cfg.params);
    double mc_b = kNaN, mc_f = kNaN;
    if (benchmark_condition(cfg.params)) {
        const auto e = entry_threshold(cfg.params);
        mc_b = e.cbd_fringe.mc;
        mc_f = e.urban_fringe.mc;
    }
    const double ratio = cfg.params.kappa_over_tau();
    const double beta = cfg.params.beta_t();
    if (cfg.format == OutputFormat::Csv) {
        return "kappa_over_tau,beta_t,regime,binding,cbd_threshold,urban_threshold,benchmark_bound,"
               "entry_mc_b,entry_mc_f\n" +
               num(ratio) + ',' + num(beta) + ',' + std::string(to_string(regime.tag)) + ',' +
               std::string(to_string(regime.binding)) + ',' + num(th.cbd_fringe) + ',' + num(th.urban_fringe) + ',' +
               num(th.benchmark_bound) + ',' + num(mc_b) + ',' + num(mc_f) + '\n';
    }
    json doc{{"kappa_over_tau", ratio},
             {"beta_t", beta},
             {"regime", to_string(regime.tag)},
             {"binding", to_string(regime.binding)},
             {"cbd_threshold", th.cbd_fringe},
             {"urban_threshold", th.urban_fringe},
             {"benchmark_bound", th.benchmark_bound},
             {"benchmark_condition", benchmark_condition(cfg.params)},
             {"benchmark_condition_strict", benchmark_condition_strict(cfg.params)},
             {"entry_mc_b", mc_b},
             {"entry_mc_f", mc_f}};
    return doc.dump(2) + '\n';
}

std::string run_cs(const ScenarioConfig& cfg) {
    const auto eq = solve_equilibrium(cfg.params);
    RegimeSolver solver;
    SignTable expected;
    if (eq.regime() == RegimeTag::TeleworkAtCbdFringe) {
        solver = [](const CityParams& p) { return solve_regime_b(p); };
        expected = expected_sign_table_cbd_fringe();
    } else if (eq.regime() == RegimeTag::TeleworkAtUrbanFringe) {
        solver = [](const CityParams& p) { return solve_regime_f(p); };
        expected = expected_sign_table_urban_fringe();
    } else {
        throw ModelError(ErrorKind::PreconditionFailed, "no telework firms at this MC_t; nothing to differentiate");
    }
    const auto fd = fd_derivatives(cfg.params, solver);
    std::optional<CsReport> an;
    if (eq.regime() == RegimeTag::TeleworkAtCbdFringe) an = analytic_cs_regime_b(eq);
    const auto signs = sign_table(fd);
    const auto match = compare_cells(signs, expected);
    const auto fv = fd.values();

    if (cfg.format == OutputFormat::Csv) {
        std::string out = "quantity,finite_difference,analytic,sign,expected,match\n";
        for (std::size_t i = 0; i < fv.size(); ++i) {
            out += std::string(SignTable::names[i]) + ',' + num(fv[i]) + ',' + num(an ? an->values()[i] : kNaN) +
                   ',' + symbol(signs.cells[i]) + ',' + symbol(expected.cells[i]) + ',' +
                   (match[i] ? "true" : "false") + '\n';
        }
        return out;
    }
    json rows = json::object();
    for (std::size_t i = 0; i < fv.size(); ++i) {
        rows[std::string(SignTable::names[i])] = {{"finite_difference", fv[i]},
                                                  {"analytic", an ? json(an->values()[i]) : json(nullptr)},
                                                  {"sign", std::string(1, symbol(signs.cells[i]))},
                                                  {"expected", std::string(1, symbol(expected.cells[i]))},
                                                  {"match", match[i]}};
    }
    json doc{{"regime", to_string(eq.regime())},
             {"step", fd.step},
             {"reference_points", {{"office", fd.at.office}, {"telework", fd.at.telework}, {"household", fd.at.household}}},
             {"derivatives", rows}};
    return doc.dump(2) + '\n';
}

std::string run_typology(const ScenarioConfig& cfg) {
    const auto host = solve_equilibrium(cfg.params);
    const auto qb = labor_shift_cost(host, Fringe::Cbd);
    const auto qf = labor_shift_cost(host, Fringe::Urban);
    const auto grid = default_beta_grid();
    std::vector<IndifferenceCurve> curves;
    json degenerate = json::array();
    for (const auto& q : {qb, qf}) {
        try {
            curves.push_back(indifference_curve(q, grid, cfg.params.office_land()));
        } catch (const ModelError& e) {
            if (e.kind() != ErrorKind::DegenerateRent) throw;
            degenerate.push_back(to_string(q.location));
        }
    }
    if (cfg.format == OutputFormat::Csv) {
        std::ostringstream out;
        write_curves_csv(out, curves);
        return out.str();
    }
    auto quote = [](const LaborShiftQuote& q) {
        return json{{"x", q.x}, {"cost", q.cost}, {"p_net", q.p_net}, {"phi", q.phi}};
    };
    json doc{{"regime", to_string(host.regime())}, {"b", quote(qb)}, {"f", quote(qf)}, {"degenerate_curves", degenerate}};
    try {
        const auto x = curve_intersection(qb, qf);
        doc["intersection"] = {{"beta_star", x.beta_star}, {"a_star", x.a_star}};
    } catch (const ModelError& e) {
        if (e.kind() != ErrorKind::ParallelCurves) throw;
        doc["intersection"] = nullptr;
    }
    json cj = json::array();
    for (const auto& c : curves) {
        json pts = json::array();
        for (const auto& p : c.points) pts.push_back({p.beta, p.a_st});
        cj.push_back({{"location", to_string(c.location)}, {"intercept", c.intercept}, {"slope", c.slope}, {"points", pts}});
    }
    doc["curves"] = cj;
    return doc.dump(2) + '\n';
}

std::string run_externality(const ScenarioConfig& cfg) {
    const auto post = solve_equilibrium(cfg.params);
    const auto pre = solve_benchmark(cfg.params);
    const auto before = urban_costs_before(pre);
    const auto after = urban_costs_after(post, pre);
    if (cfg.format == OutputFormat::Json) return externality_json(before, after) + '\n';

    std::string out = "variant,stage,total_commuting,total_ftf,total,delta_b,delta_f,sign\n";
    auto row = [&](const UrbanCostReport& r, const char* stage, std::string_view sign) {
        out += std::string(to_string(r.variant)) + ',' + stage + ',' + num(r.total_commuting) + ',' +
               num(r.total_ftf) + ',' + num(r.total) + ',' + num(r.delta_b) + ',' + num(r.delta_f) + ',' +
               std::string(sign) + '\n';
    };
    row(before.closed_form, "before", "");
    row(after.closed_form, "after", to_string(externality_sign(before.closed_form, after.closed_form)));
    row(before.integral, "before", "");
    row(after.integral, "after", to_string(externality_sign(before.integral, after.integral)));
    return out;
}

std::string run_sweep(const ScenarioConfig& cfg) {
    const auto cells = sweep_regime_map(cfg);
    if (cfg.format == OutputFormat::Csv) {
        std::string out;
        for (const auto& a : cfg.grid) out += a.name + ',';
        out += "regime,cbd_threshold,urban_threshold\n";
        for (const auto& c : cells) {
            for (double v : c.coords) out += num(v) + ',';
            out += c.regime + ',' + num(c.cbd_threshold) + ',' + num(c.urban_threshold) + '\n';
        }
        return out;
    }
    json axes = json::array();
    for (const auto& a : cfg.grid) axes.push_back({{"name", a.name}, {"min", a.min}, {"max", a.max}, {"steps", a.steps}});
    json rows = json::array();
    for (const auto& c : cells)
        rows.push_back({{"coords", c.coords}, {"regime", c.regime}, {"cbd_threshold", c.cbd_threshold},
                        {"urban_threshold", c.urban_threshold}});
    return json{{"axes", axes}, {"cells", rows}}.dump(2) + '\n';
}

std::string run_trajectory(const ScenarioConfig& cfg) {
    const auto recs = mc_trajectory(cfg);
    if (cfg.format == OutputFormat::Csv) {
        std::string out = "mc_t,regime,theta,w,z,b1,b2,f,rent_center,rent_b1,rent_b2,entry,entry_mc,error\n";
        for (const auto& r : recs) {
            std::string err = r.error;
            std::replace(err.begin(), err.end(), ',', ';');
            out += num(r.mc_t) + ',' + r.regime + ',' + num(r.theta) + ',' + num(r.w) + ',' + num(r.z) + ',' +
                   num(r.b1) + ',' + num(r.b2) + ',' + num(r.f) + ',' + num(r.rent_center) + ',' + num(r.rent_b1) +
                   ',' + num(r.rent_b2) + ',' + (r.entry ? "true" : "false") + ',' + num(r.entry_mc) + ',' + err +
                   '\n';
        }
        return out;
    }
    json rows = json::array();
    for (const auto& r : recs)
        rows.push_back({{"mc_t", r.mc_t}, {"regime", r.regime}, {"theta", r.theta}, {"w", r.w}, {"z", r.z},
                        {"b1", r.b1}, {"b2", r.b2}, {"f", r.f}, {"rent_center", r.rent_center},
                        {"rent_b1", r.rent_b1}, {"rent_b2", r.rent_b2}, {"entry", r.entry},
                        {"entry_mc", r.entry_mc}, {"error", r.error}});
    return json{{"records", rows}}.dump(2) + '\n';
}

} // namespace

std::string run_scenario(const ScenarioConfig& config) {
    switch (config.action) {
    case Action::Solve: return run_solve(config);
    case Action::Classify: return run_classify(config);
    case Action::ComparativeStatics: return run_cs(config);
    case Action::Typology: return run_typology(config);
    case Action::Externalities: return run_externality(config);
    case Action::Sweep: return run_sweep(config);
    case Action::Trajectory: return run_trajectory(config);
    }
    config_error("unknown action");
}

} // namespace telecity
