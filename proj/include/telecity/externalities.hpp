#pragma once

#include "telecity/equilibrium.hpp"

#include <string>
#include <string_view>

namespace telecity {

/// ClosedForm evaluates the closed-form totals (FTF block total (3/8) b^3 and
/// the cross term 4 (f - d_f)(b - d_b) for urban-fringe entry) unchanged;
/// Integral integrates the model's own T over the actual firm layout.
enum class CostVariant { ClosedForm, Integral };

std::string_view to_string(CostVariant variant) noexcept;

struct UrbanCostReport {
    CostVariant variant = CostVariant::Integral;
    RegimeTag regime = RegimeTag::Benchmark;
    double total_commuting = 0.0;
    double total_ftf = 0.0;
    double total = 0.0;
    double delta_b = 0.0;  ///< shrinkage of the CBD fringe relative to the benchmark
    double delta_f = 0.0;  ///< shrinkage of the urban fringe relative to the benchmark
};

struct UrbanCostPair {
    UrbanCostReport closed_form;
    UrbanCostReport integral;
    /// integral / closed-form FTF totals; 64/9 for the benchmark block
    double ftf_ratio;
    std::string note;
};

/// Throws IncompatibleRegimes unless `benchmark` is a Benchmark equilibrium.
UrbanCostPair urban_costs_before(const Equilibrium& benchmark);

/// Costs after entry. `pre` must be the benchmark and `post` a post-entry
/// equilibrium (IncompatibleRegimes otherwise).
UrbanCostPair urban_costs_after(const Equilibrium& post, const Equilibrium& pre);

enum class Externality { Positive, Negative, Neutral };

std::string_view to_string(Externality sign) noexcept;

inline constexpr double kExternalityTolerance = 1e-10;

/// Positive when total urban costs fall by more than kExternalityTolerance.
/// Throws VariantMismatch when the reports use different variants.
Externality externality_sign(const UrbanCostReport& before, const UrbanCostReport& after);

/// JSON document with both variants before and after and the signs.
std::string externality_json(const UrbanCostPair& before, const UrbanCostPair& after);

} // namespace telecity
