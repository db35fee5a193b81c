#pragma once

#include <span>
#include <vector>

namespace telecity {

struct Interval {
    double lo;
    double hi;
    /// Firm density on the interval; only read under FtfWeighting::Density.
    double density = 1.0;

    double length() const noexcept { return hi - lo; }
};

/// Union of firm-occupied intervals on the line, symmetric about 0.
///
/// Intervals must have positive length, be sorted and have disjoint
/// interiors (touching endpoints are allowed).
class FirmLayout {
public:
    explicit FirmLayout(std::vector<Interval> intervals);

    /// Builds the layout from right-half pieces [lo, hi] with 0 <= lo < hi.
    /// A piece starting at 0 is mirrored into a single centred interval.
    /// Zero-length pieces are dropped.
    static FirmLayout mirrored(std::span<const Interval> right_half);

    const std::vector<Interval>& intervals() const noexcept { return intervals_; }
    double extent() const noexcept;  ///< largest |x| covered

private:
    std::vector<Interval> intervals_;
};

enum class FtfWeighting {
    Unit,    ///< raw integral over occupied land (the model convention)
    Density  ///< integrand weighted by each interval's firm density
};

/// T(y) = sum over intervals of the integral of |y - x| dx.
///
/// The result is the raw distance integral; tau and (1 - beta) are applied by
/// the bid-rent and profit functions.
double ftf_cost(const FirmLayout& layout, double y, FtfWeighting weighting = FtfWeighting::Unit);

/// dT/dy, used by the commuting-consistency checks.
double ftf_slope(const FirmLayout& layout, double y, FtfWeighting weighting = FtfWeighting::Unit);

// Closed forms for the three layouts of the model. Each is only valid on the
// stated domain and throws ModelError(PreconditionFailed) outside it.

/// Single CBD block [-b, b], |y| <= b: T = y^2 + b^2.
double ftf_closed_benchmark(double b, double y);

/// Firms on [-b2, b2] (offices inside, telework firms at the fringe), |y| <= b2.
double ftf_closed_regime_b(double b2, double y);

/// Offices on [-b1, b1] and firms in the mixed zones b2 <= |x| <= f.
/// Valid for |y| <= b1 and b2 <= |y| <= f.
double ftf_closed_regime_f(double b1, double b2, double f, double y);

} // namespace telecity
