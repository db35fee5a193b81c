#include "telecity/externalities.hpp"

#include "telecity/error.hpp"
#include "telecity/numerics.hpp"

#include <json.hpp>

#include <cmath>
#include <vector>

namespace telecity {

std::string_view to_string(CostVariant variant) noexcept {
    return variant == CostVariant::ClosedForm ? "closed-form" : "integral";
}

std::string_view to_string(Externality sign) noexcept {
    switch (sign) {
    case Externality::Positive: return "positive";
    case Externality::Negative: return "negative";
    case Externality::Neutral: return "neutral";
    }
    return "unknown";
}

namespace {

constexpr const char* kNote =
    "closed-form FTF totals use the coefficient 3/8 on b^3, while integrating T(y) = y^2 + b^2 over the firm "
    "block gives 8/3 b^3; both variants are reported and never reconciled";

// 2 * integral of kappa y over the right-half commuting household band
double commuting_integral(const Equilibrium& eq) {
    const double kappa = eq.params().kappa();
    double total = 0.0;
    for (const auto& s : eq.segments())
        if (s.occupant == Occupant::Household)
            total += 2.0 * numerics::integrate([&](double y) { return kappa * y; }, s.lo, s.hi);
    return total;
}

// integral of T over all firm-occupied land, unit density
double ftf_integral(const Equilibrium& eq) {
    double total = 0.0;
    for (const auto& iv : eq.layout().intervals()) {
        const std::vector<double> breaks{iv.lo, iv.hi};
        total += numerics::integrate_piecewise([&](double y) { return eq.ftf(y); }, breaks);
    }
    return total;
}

UrbanCostReport finish(UrbanCostReport r) {
    r.total = r.total_commuting + r.total_ftf;
    return r;
}

void require_benchmark(const Equilibrium& eq) {
    if (eq.regime() != RegimeTag::Benchmark)
        throw ModelError(ErrorKind::IncompatibleRegimes, "the reference city must be the benchmark");
}

} // namespace

UrbanCostPair urban_costs_before(const Equilibrium& benchmark) {
    require_benchmark(benchmark);
    const auto& bd = benchmark.boundaries();
    const double kappa = benchmark.params().kappa();
    const double b = bd.b1;
    const double f = bd.f;

    UrbanCostReport closed{CostVariant::ClosedForm, RegimeTag::Benchmark, kappa * (f * f - b * b),
                           3.0 / 8.0 * b * b * b, 0.0, 0.0, 0.0};
    UrbanCostReport integral{CostVariant::Integral, RegimeTag::Benchmark, commuting_integral(benchmark),
                             ftf_integral(benchmark), 0.0, 0.0, 0.0};
    closed = finish(closed);
    integral = finish(integral);
    return UrbanCostPair{closed, integral, integral.total_ftf / closed.total_ftf, kNote};
}

UrbanCostPair urban_costs_after(const Equilibrium& post, const Equilibrium& pre) {
    require_benchmark(pre);
    const bool at_b = post.regime() == RegimeTag::TeleworkAtCbdFringe;
    const bool at_f = post.regime() == RegimeTag::TeleworkAtUrbanFringe;
    if (!at_b && !at_f)
        throw ModelError(ErrorKind::IncompatibleRegimes, "the post-entry city must have telework firms");

    const auto& before = pre.boundaries();
    const auto& after = post.boundaries();
    const double kappa = post.params().kappa();
    const double db = before.b1 - (at_b ? after.b2 : after.b1);
    const double df = before.f - after.f;
    const double bb = before.b1 - db;
    const double ff = before.f - df;

    double closed_ftf = 3.0 / 8.0 * bb * bb * bb;
    if (at_f) closed_ftf += 4.0 * ff * bb;
    UrbanCostReport closed{CostVariant::ClosedForm, post.regime(), kappa * (ff * ff - bb * bb), closed_ftf, 0.0, db,
                           df};
    UrbanCostReport integral{CostVariant::Integral, post.regime(), commuting_integral(post), ftf_integral(post), 0.0,
                             db, df};
    closed = finish(closed);
    integral = finish(integral);
    const double ratio = closed.total_ftf != 0.0 ? integral.total_ftf / closed.total_ftf : NAN;
    return UrbanCostPair{closed, integral, ratio, kNote};
}

Externality externality_sign(const UrbanCostReport& before, const UrbanCostReport& after) {
    if (before.variant != after.variant)
        throw ModelError(ErrorKind::VariantMismatch, "cannot compare closed-form and integral cost reports");
    if (after.total < before.total - kExternalityTolerance) return Externality::Positive;
    if (after.total > before.total + kExternalityTolerance) return Externality::Negative;
    return Externality::Neutral;
}

namespace {

nlohmann::json to_json(const UrbanCostReport& r) {
    return {{"variant", to_string(r.variant)}, {"regime", to_string(r.regime)},
            {"total_commuting", r.total_commuting}, {"total_ftf", r.total_ftf},
            {"total", r.total}, {"delta_b", r.delta_b}, {"delta_f", r.delta_f}};
}

} // namespace

std::string externality_json(const UrbanCostPair& before, const UrbanCostPair& after) {
    nlohmann::json doc;
    doc["before"] = {{"closed_form", to_json(before.closed_form)}, {"integral", to_json(before.integral)},
                     {"ftf_ratio", before.ftf_ratio}};
    doc["after"] = {{"closed_form", to_json(after.closed_form)}, {"integral", to_json(after.integral)},
                    {"ftf_ratio", after.ftf_ratio}};
    doc["sign"] = {{"closed_form", to_string(externality_sign(before.closed_form, after.closed_form))},
                   {"integral", to_string(externality_sign(before.integral, after.integral))}};
    doc["note"] = before.note;
    return doc.dump(2);
}

} // namespace telecity
