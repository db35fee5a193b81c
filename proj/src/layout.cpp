#include "telecity/layout.hpp"

#include "telecity/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace telecity {

namespace {

constexpr double kSymmetryTol = 1e-12;

// Antiderivative of |t| in t.
double half_signed_square(double t) noexcept { return 0.5 * t * std::abs(t); }

double piece_integral(const Interval& iv, double y) noexcept {
    return half_signed_square(iv.hi - y) - half_signed_square(iv.lo - y);
}

double piece_slope(const Interval& iv, double y) noexcept {
    // d/dy of the integral of |y - x| over [lo, hi]
    const double lo = std::min(std::max(y, iv.lo), iv.hi);
    return (lo - iv.lo) - (iv.hi - lo);
}

} // namespace

FirmLayout::FirmLayout(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
    for (const auto& iv : intervals_) {
        if (!(std::isfinite(iv.lo) && std::isfinite(iv.hi) && iv.hi > iv.lo))
            throw ModelError(ErrorKind::InvalidParams, "layout intervals must have positive finite length");
        if (!(iv.density >= 0.0))
            throw ModelError(ErrorKind::InvalidParams, "layout densities must be non-negative");
    }
    for (std::size_t i = 1; i < intervals_.size(); ++i)
        if (intervals_[i].lo < intervals_[i - 1].hi)
            throw ModelError(ErrorKind::InvalidParams, "layout intervals must be sorted and disjoint");

    const double scale = std::max(1.0, extent());
    const std::size_t n = intervals_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = intervals_[i];
        const auto& m = intervals_[n - 1 - i];
        if (std::abs(a.lo + m.hi) > kSymmetryTol * scale || std::abs(a.hi + m.lo) > kSymmetryTol * scale)
            throw ModelError(ErrorKind::InvalidParams, "layout must be symmetric about 0");
    }
}

FirmLayout FirmLayout::mirrored(std::span<const Interval> right_half) {
    std::vector<Interval> right;
    for (const auto& iv : right_half) {
        if (iv.lo < 0.0) throw ModelError(ErrorKind::InvalidParams, "right-half pieces must start at x >= 0");
        if (iv.hi > iv.lo) right.push_back(iv);
    }
    std::sort(right.begin(), right.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

    std::vector<Interval> all;
    all.reserve(2 * right.size());
    for (auto it = right.rbegin(); it != right.rend(); ++it) {
        if (it->lo == 0.0) continue;
        all.push_back({-it->hi, -it->lo, it->density});
    }
    for (const auto& iv : right) {
        if (iv.lo == 0.0)
            all.push_back({-iv.hi, iv.hi, iv.density});
        else
            all.push_back(iv);
    }
    return FirmLayout(std::move(all));
}

double FirmLayout::extent() const noexcept {
    double e = 0.0;
    for (const auto& iv : intervals_) e = std::max({e, std::abs(iv.lo), std::abs(iv.hi)});
    return e;
}

double ftf_cost(const FirmLayout& layout, double y, FtfWeighting weighting) {
    double total = 0.0;
    for (const auto& iv : layout.intervals()) {
        const double w = weighting == FtfWeighting::Density ? iv.density : 1.0;
        total += w * piece_integral(iv, y);
    }
    return total;
}

double ftf_slope(const FirmLayout& layout, double y, FtfWeighting weighting) {
    double total = 0.0;
    for (const auto& iv : layout.intervals()) {
        const double w = weighting == FtfWeighting::Density ? iv.density : 1.0;
        total += w * piece_slope(iv, y);
    }
    return total;
}

namespace {

void require_domain(bool ok, const char* what) {
    if (!ok) throw ModelError(ErrorKind::PreconditionFailed, what);
}

} // namespace

double ftf_closed_benchmark(double b, double y) {
    require_domain(std::abs(y) <= b, "benchmark closed form needs |y| <= b");
    return y * y + b * b;
}

double ftf_closed_regime_b(double b2, double y) {
    require_domain(std::abs(y) <= b2, "regime-b closed form needs |y| <= b2");
    return y * y + b2 * b2;
}

double ftf_closed_regime_f(double b1, double b2, double f, double y) {
    const double a = std::abs(y);
    if (a <= b1) return y * y + f * f + b1 * b1 - b2 * b2;
    require_domain(a >= b2 && a <= f, "regime-f closed form needs |y| <= b1 or b2 <= |y| <= f");
    return y * y + f * f + 2.0 * a * (b1 - b2);
}

} // namespace telecity
