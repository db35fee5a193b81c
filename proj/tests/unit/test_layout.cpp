#include "fixtures.hpp"

#include "telecity/layout.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <array>
#include <cmath>
#include <vector>

using namespace telecity;

namespace {

// independent quadrature of the distance integral, split at each kink
double oracle(const std::vector<Interval>& ivs, double y) {
    using boost::math::quadrature::gauss_kronrod;
    double total = 0.0;
    for (const auto& iv : ivs) {
        auto g = [y](double x) { return std::abs(y - x); };
        if (y > iv.lo && y < iv.hi)
            total += gauss_kronrod<double, 61>::integrate(g, iv.lo, y, 0, 1e-14) +
                     gauss_kronrod<double, 61>::integrate(g, y, iv.hi, 0, 1e-14);
        else
            total += gauss_kronrod<double, 61>::integrate(g, iv.lo, iv.hi, 0, 1e-14);
    }
    return total;
}

} // namespace

TEST_CASE("mirrored layouts") {
    const std::array<Interval, 2> right{Interval{0.0, 2.0}, Interval{3.0, 4.0}};
    const auto layout = FirmLayout::mirrored(right);
    REQUIRE(layout.intervals().size() == 3);
    CHECK(layout.intervals()[0].lo == -4.0);
    CHECK(layout.intervals()[1].lo == -2.0);
    CHECK(layout.intervals()[1].hi == 2.0);
    CHECK(layout.extent() == 4.0);

    const std::array<Interval, 2> with_empty{Interval{0.0, 1.0}, Interval{1.0, 1.0}};
    CHECK(FirmLayout::mirrored(with_empty).intervals().size() == 1);
}

TEST_CASE("malformed layouts throw") {
    CHECK_MODEL_ERROR(FirmLayout({Interval{1.0, 0.0}}), InvalidParams);
    CHECK_MODEL_ERROR(FirmLayout({Interval{-1.0, 1.0}, Interval{0.5, 2.0}}), InvalidParams);
    CHECK_MODEL_ERROR(FirmLayout({Interval{-1.0, 2.0}}), InvalidParams);
    const std::array<Interval, 1> negative{Interval{-1.0, 1.0}};
    CHECK_MODEL_ERROR(FirmLayout::mirrored(negative), InvalidParams);
}

TEST_CASE("benchmark block closed form") {
    CHECK(ftf_closed_benchmark(5.0, 0.0) == doctest::Approx(25.0));
    CHECK(ftf_closed_benchmark(5.0, 5.0) == doctest::Approx(50.0));
    CHECK_MODEL_ERROR(ftf_closed_benchmark(5.0, 5.5), PreconditionFailed);
}

TEST_CASE("closed forms agree with quadrature on random layouts") {
    auto g = fixtures::rng();
    for (int trial = 0; trial < 150; ++trial) {
        const double b1 = fixtures::uniform(g, 0.2, 6.0);
        const double b2 = b1 + fixtures::uniform(g, 0.1, 4.0);
        const double f = b2 + fixtures::uniform(g, 0.1, 4.0);

        const std::vector<Interval> block{{-b1, b1}};
        const std::array<Interval, 1> block_right{Interval{0.0, b1}};
        const double y0 = fixtures::uniform(g, -b1, b1);
        CHECK(ftf_closed_benchmark(b1, y0) == doctest::Approx(oracle(block, y0)).epsilon(1e-12));
        CHECK(ftf_cost(FirmLayout::mirrored(block_right), y0) == doctest::Approx(oracle(block, y0)).epsilon(1e-12));

        const std::vector<Interval> cluster{{-b2, b2}};
        const double y1 = fixtures::uniform(g, -b2, b2);
        CHECK(ftf_closed_regime_b(b2, y1) == doctest::Approx(oracle(cluster, y1)).epsilon(1e-12));

        const std::vector<Interval> split{{-f, -b2}, {-b1, b1}, {b2, f}};
        const double y2 = fixtures::uniform(g, -b1, b1);
        const double y3 = fixtures::uniform(g, b2, f);
        CHECK(ftf_closed_regime_f(b1, b2, f, y2) == doctest::Approx(oracle(split, y2)).epsilon(1e-12));
        CHECK(ftf_closed_regime_f(b1, b2, f, -y3) == doctest::Approx(oracle(split, -y3)).epsilon(1e-12));
        CHECK(ftf_cost(FirmLayout(split), y3) == doctest::Approx(oracle(split, y3)).epsilon(1e-12));

        // outside the occupied land the closed forms are undefined
        CHECK_MODEL_ERROR(ftf_closed_regime_f(b1, b2, f, 0.5 * (b1 + b2)), PreconditionFailed);
    }
}

TEST_CASE("slope is the derivative of the distance integral") {
    const FirmLayout layout({Interval{-3.0, -2.0}, Interval{-1.0, 1.0}, Interval{2.0, 3.0}});
    for (double y : {-2.7, -1.5, 0.3, 1.7, 2.4, 3.5}) {
        const double h = 1e-6;
        const double fd = (ftf_cost(layout, y + h) - ftf_cost(layout, y - h)) / (2 * h);
        CHECK(ftf_slope(layout, y) == doctest::Approx(fd).epsilon(1e-7));
    }
}

TEST_CASE("density weighting only acts when requested") {
    const FirmLayout layout({Interval{-1.0, 1.0, 5.0}});
    CHECK(ftf_cost(layout, 0.0) == doctest::Approx(1.0));
    CHECK(ftf_cost(layout, 0.0, FtfWeighting::Density) == doctest::Approx(5.0));
}
