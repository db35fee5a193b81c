#pragma once

#include "telecity/error.hpp"

#include <cmath>
#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace telecity::numerics {

struct Bracket {
    double lo;
    double hi;
};

/// All sub-intervals of a uniform `cells`-cell grid on [lo, hi] over which f
/// changes sign. A grid value that is exactly zero opens a bracket with the
/// following cell.
template <std::invocable<double> F>
std::vector<Bracket> scan_sign_changes(F&& f, double lo, double hi, std::size_t cells) {
    std::vector<Bracket> out;
    double x_prev = lo;
    double f_prev = f(lo);
    for (std::size_t i = 1; i <= cells; ++i) {
        const double x = i == cells ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(cells);
        const double fx = f(x);
        if (f_prev == 0.0 || (f_prev < 0.0) != (fx < 0.0)) {
            if (!(fx == 0.0 && i < cells)) out.push_back({x_prev, x});
        }
        x_prev = x;
        f_prev = fx;
    }
    return out;
}

struct RootResult {
    double x;
    double residual;
    int iterations;
};

/// Plain bisection on a sign-change bracket. Stops once |f| <= ftol or the
/// bracket can no longer be halved in double precision.
template <std::invocable<double> F>
RootResult bisect(F&& f, Bracket bracket, double ftol, int max_iter = 200) {
    double lo = bracket.lo;
    double hi = bracket.hi;
    double f_lo = f(lo);
    double f_hi = f(hi);
    if (std::abs(f_lo) <= ftol) return {lo, f_lo, 0};
    if (std::abs(f_hi) <= ftol) return {hi, f_hi, 0};

    RootResult best = std::abs(f_lo) < std::abs(f_hi) ? RootResult{lo, f_lo, 0} : RootResult{hi, f_hi, 0};
    for (int it = 1; it <= max_iter; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double f_mid = f(mid);
        if (std::abs(f_mid) < std::abs(best.residual)) best = {mid, f_mid, it};
        if (std::abs(f_mid) <= ftol) return {mid, f_mid, it};
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
        best.iterations = it;
    }
    return best;
}

/// The single root of f on [lo, hi]: scans `cells` cells for sign changes and
/// bisects the only bracket. Throws NoRoot when there is none (or bisection
/// stalls above ftol) and NonUniqueRootError, carrying every bracket, when
/// there are several.
template <std::invocable<double> F>
double unique_root(F&& f, double lo, double hi, std::size_t cells, double ftol, const std::string& what) {
    const auto brackets = scan_sign_changes(f, lo, hi, cells);
    if (brackets.empty()) throw ModelError(ErrorKind::NoRoot, what + ": no sign change of the residual");
    if (brackets.size() > 1) {
        std::vector<std::pair<double, double>> out;
        for (const auto& br : brackets) out.emplace_back(br.lo, br.hi);
        throw NonUniqueRootError(what + ": " + std::to_string(brackets.size()) + " sign changes of the residual",
                                 std::move(out));
    }
    const auto root = bisect(f, brackets.front(), ftol);
    if (!(std::abs(root.residual) <= ftol))
        throw ModelError(ErrorKind::NoRoot, what + ": bisection stalled above the residual tolerance");
    return root.x;
}

namespace detail {

template <typename F>
double simpson_step(F& f, double a, double b, double fa, double fm, double fb, double whole, double tol,
                    int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace detail

/// Adaptive Simpson quadrature with Richardson correction.
template <std::invocable<double> F>
double integrate(F&& f, double a, double b, double tol = 1e-12, int max_depth = 40) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

/// Integral over [breaks.front(), breaks.back()] split at every breakpoint,
/// so integrands with kinks at the breaks are integrated piece by piece.
template <std::invocable<double> F>
double integrate_piecewise(F&& f, std::span<const double> breaks, double tol = 1e-12) {
    double total = 0.0;
    for (std::size_t i = 1; i < breaks.size(); ++i)
        if (breaks[i] > breaks[i - 1]) total += integrate(f, breaks[i - 1], breaks[i], tol);
    return total;
}

} // namespace telecity::numerics
