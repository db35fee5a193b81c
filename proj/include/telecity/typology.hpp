#pragma once

#include "telecity/equilibrium.hpp"

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

namespace telecity {

enum class Fringe { Cbd, Urban };

std::string_view to_string(Fringe fringe) noexcept;

/// Which edge of the firm cluster stands for the CBD fringe when offices and
/// telework firms occupy separate blocks.
enum class CbdEdge {
    OfficeEdge,   ///< b1, where the office district ends
    ClusterEdge   ///< b2, where the whole firm cluster ends
};

struct TypologyOptions {
    CbdEdge cbd_edge = CbdEdge::OfficeEdge;
};

/// Location of the given fringe in the host equilibrium.
/// Throws LocationUndefined when the fringe collapses onto the centre.
double fringe_location(const Equilibrium& host, Fringe fringe, const TypologyOptions& options = {});

/// Labor shift cost and its companions for the host telework technology:
///   C = w_t + MC_t - W(x) - tau T(x),  p_net = p - W(x) - tau T(x),  phi = phi_t(x)
/// so that p_net - a_st phi = beta_t C.
struct LaborShiftQuote {
    Fringe location;
    double x;
    double cost;
    double p_net;
    double phi;
};

LaborShiftQuote labor_shift_cost(const Equilibrium& host, Fringe fringe, const TypologyOptions& options = {});

struct CurvePoint {
    double beta;
    double a_st;
};

/// Zero-profit line a_st(beta) = (p_net - beta C) / phi at one fringe.
struct IndifferenceCurve {
    Fringe location;
    double intercept;  ///< p_net / phi
    double slope;      ///< -C / phi, the MRS
    std::vector<CurvePoint> points;

    double at(double beta) const noexcept { return intercept + slope * beta; }
};

/// n uniform points strictly inside (0, 1).
std::vector<double> default_beta_grid(std::size_t n = 256);

/// Points are kept when a_st > 0 and 1 - beta < a_st / a_so.
/// Throws DegenerateRent when phi <= 0.
IndifferenceCurve indifference_curve(const LaborShiftQuote& quote, std::span<const double> beta_grid,
                                     double office_land);
IndifferenceCurve indifference_curve(const Equilibrium& host, Fringe fringe,
                                     std::span<const double> beta_grid, const TypologyOptions& options = {});

struct TypologyPoint {
    double beta_star;
    double a_star;
};

/// Intersection of the two zero-profit lines. Throws ParallelCurves when
/// C(b) phi(f) - C(f) phi(b) vanishes.
TypologyPoint curve_intersection(const LaborShiftQuote& at_b, const LaborShiftQuote& at_f);
TypologyPoint curve_intersection(const Equilibrium& host, const TypologyOptions& options = {});

/// p_net - a phi - beta C for a candidate (beta, a) on the quote's line.
double curve_residual(const LaborShiftQuote& quote, double beta, double a_st) noexcept;

enum class LocationChoice { AtCbdFringe, AtUrbanFringe, Indifferent };

std::string_view to_string(LocationChoice choice) noexcept;

inline constexpr double kIndifferenceTolerance = 1e-10;

/// A type is placed at the fringe whose zero-profit line lies higher at its
/// beta, i.e. where it can absorb the larger land input. Points within
/// kIndifferenceTolerance of X*, or with equal heights, are indifferent.
/// Throws OutsideAdmissibleRegion unless 0 < beta < 1, a_st > 0 and
/// a_st / (1 - beta) > a_so; throws DegenerateRent when either phi <= 0.
LocationChoice classify_firm_type(double beta, double a_st, const TypologyPoint& point, const LaborShiftQuote& at_b,
                                  const LaborShiftQuote& at_f, double office_land);

/// CSV with header beta,a_st,location.
void write_curves_csv(std::ostream& out, std::span<const IndifferenceCurve> curves);

} // namespace telecity
