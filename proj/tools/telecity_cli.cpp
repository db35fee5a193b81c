// Batch front-end: telecity <verb> [--config f] [--out f] [--format csv|json]
//                              [--grid spec] [--set key=value ...] [--schedule from:to:steps]
#include "telecity/error.hpp"
#include "telecity/scenario.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;

int fail(int code, std::string_view kind, const std::string& message) {
    std::cerr << nlohmann::json{{"error", kind}, {"message", message}}.dump() << '\n';
    return code;
}

// Write through a sibling temporary so a failed write never leaves a partial file.
void write_output(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw telecity::ModelError(telecity::ErrorKind::ConfigInvalid, "cannot write '" + path + "'");
        out << text;
        if (!out.flush()) throw telecity::ModelError(telecity::ErrorKind::ConfigInvalid, "cannot write '" + path + "'");
    }
    fs::rename(tmp, target);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spatial equilibrium of a linear city with office and telework firms"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string format;
    std::string grid;
    std::vector<std::string> sets;
    std::string schedule;
    app.add_option("--config", config_path, "scenario config file");
    app.add_option("--out", out_path, "output file (stdout when omitted)");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--grid", grid, "sweep grid, e.g. kappa_over_tau=0.1:3:30,beta_t=0.05:0.95:19");
    app.add_option("--set", sets, "parameter override key=value (repeatable)");
    app.add_option("--schedule", schedule, "MC_t schedule from:to:steps for trajectory");

    const std::vector<std::pair<std::string, std::string>> verbs{
        {"solve", "solve the equilibrium and emit rent profiles"},
        {"classify", "first-entry regime and thresholds"},
        {"cs", "comparative statics in MC_t"},
        {"typology", "labor shift costs and zero-profit lines at b and f"},
        {"externality", "urban costs before and after entry"},
        {"sweep", "regime map over a parameter grid"},
        {"trajectory", "equilibria along a decreasing MC_t schedule"},
    };
    for (const auto& [name, help] : verbs) app.add_subcommand(name, help)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(kExitConfig, "ConfigInvalid", e.what());
    }

    try {
        telecity::ScenarioConfig cfg = config_path.empty() ? telecity::ScenarioConfig{} : telecity::load_config(config_path);
        const auto verb = app.get_subcommands().front()->get_name();
        cfg.action = *telecity::parse_action(verb);
        if (!format.empty()) cfg.format = format == "json" ? telecity::OutputFormat::Json : telecity::OutputFormat::Csv;
        if (!out_path.empty()) cfg.output_path = out_path;
        if (!grid.empty()) cfg.grid = telecity::parse_grid(grid);
        for (const auto& s : sets) telecity::apply_override(cfg, s);
        if (!schedule.empty()) cfg.mc_schedule = telecity::parse_schedule(schedule);

        const std::string text = telecity::run_scenario(cfg);
        if (cfg.output_path.empty())
            std::cout << text;
        else
            write_output(cfg.output_path, text);
        return 0;
    } catch (const telecity::ModelError& e) {
        const bool config = e.kind() == telecity::ErrorKind::ConfigInvalid || e.kind() == telecity::ErrorKind::InvalidParams;
        return fail(config ? kExitConfig : kExitSolver, telecity::to_string(e.kind()), e.what());
    } catch (const std::exception& e) {
        return fail(kExitSolver, "Internal", e.what());
    }
}
