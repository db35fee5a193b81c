#pragma once

#include "telecity/params.hpp"
#include "telecity/regime.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace telecity {

enum class Action { Solve, Classify, ComparativeStatics, Typology, Externalities, Sweep, Trajectory };
enum class OutputFormat { Csv, Json };

std::string_view to_string(Action action) noexcept;
std::optional<Action> parse_action(std::string_view name) noexcept;

struct GridAxis {
    std::string name;  ///< a parameter name or "kappa_over_tau"
    double min;
    double max;
    std::size_t steps;

    double value(std::size_t i) const noexcept;
};

struct ScenarioConfig {
    CityParams params;
    Action action = Action::Solve;
    std::vector<GridAxis> grid;
    std::vector<double> mc_schedule;
    std::string output_path;
    OutputFormat format = OutputFormat::Csv;
    std::size_t profile_points = 201;
};

/// Flat key = value text with [params], [run], [sweep] and [trajectory]
/// sections; '#' and ';' start comments. Throws ModelError(ConfigInvalid).
ScenarioConfig parse_config(std::string_view text);
ScenarioConfig load_config(const std::string& path);

/// "kappa_over_tau=0.1:3:30,beta_t=0.05:0.95:19"
std::vector<GridAxis> parse_grid(std::string_view spec);

/// "from:to:steps", evenly spaced and decreasing when from > to.
std::vector<double> parse_schedule(std::string_view spec);

/// Applies "name=value" to the parameters.
void apply_override(ScenarioConfig& config, std::string_view assignment);

/// Copy of `params` with a grid axis set (kappa_over_tau rescales kappa).
CityParams with_axis(const CityParams& params, std::string_view axis, double value);

struct RegimeCell {
    std::vector<double> coords;
    std::string regime;  ///< regime tag, or "Inadmissible"
    double cbd_threshold;
    double urban_threshold;
};

/// Classification of every grid cell in row-major order (first axis slowest).
/// Throws EmptyAdmissibleRegion when no cell is admissible.
std::vector<RegimeCell> sweep_regime_map(const ScenarioConfig& config);

struct TrajectoryRecord {
    double mc_t;
    std::string regime;
    double theta;
    double w;
    double z;
    double b1;
    double b2;
    double f;
    double rent_center;
    double rent_b1;
    double rent_b2;
    bool entry;       ///< first point past the entry threshold
    double entry_mc;  ///< entry-threshold MC_t (NaN when unavailable)
    std::string error;
};

/// One record per schedule value; solver errors are recorded, not thrown.
/// Throws ConfigInvalid unless the schedule is non-empty and strictly decreasing.
std::vector<TrajectoryRecord> mc_trajectory(const ScenarioConfig& config);

/// Runs the configured action and returns the formatted output.
std::string run_scenario(const ScenarioConfig& config);

} // namespace telecity
