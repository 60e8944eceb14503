#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "innerlab/extremal.hpp"

using namespace innerlab;

namespace {

StripGraphDomain graph_domain(double a, double b, const std::function<double(double)>& h1,
                              std::size_t n = 1 << 14) {
    return StripGraphDomain(SampledFunction::tabulate(a, b, n, h1),
                            SampledFunction::tabulate(a, b, n, [](double) { return 0.0; }));
}

StripGraphDomain notch_domain(double depth) {
    // One square notch of the given depth taken out of the bottom of [0, 4].
    return graph_domain(0.0, 4.0, [depth](double x) {
        return (x >= 2.0 - depth / 2.0 && x <= 2.0 + depth / 2.0) ? depth : 0.0;
    });
}

}  // namespace

TEST_CASE("rectangle moduli") {
    CHECK(modulus(rectangle_grid(2.0, 1.0, 0.01)) == doctest::Approx(2.0).epsilon(0.01));
    CHECK(modulus(rectangle_grid(1.0, 1.0, 0.01)) == doctest::Approx(1.0).epsilon(0.01));
    CHECK(modulus(rectangle_grid(0.5, 1.0, 0.02)) == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("grid validation errors") {
    GridDomain g = rectangle_grid(1.0, 1.0, 0.1);
    g.mask[g.at(5, 5)] = 0;
    g.mask[g.at(5, 4)] = 0;
    CHECK_NOTHROW(g.validate());

    GridDomain split = rectangle_grid(1.0, 1.0, 0.05);
    for (std::size_t j = 0; j < split.rows; ++j) split.mask[split.at(10, j)] = 0;
    for (std::size_t j = 0; j < split.rows; ++j)
        split.side[split.at(10, j)] = GridDomain::Side::None;
    CHECK_THROWS_AS(modulus(split), std::invalid_argument);

    GridDomain no_side = rectangle_grid(1.0, 1.0, 0.05);
    for (std::size_t i = 0; i < no_side.cols; ++i)
        no_side.side[no_side.at(i, 0)] = GridDomain::Side::None;
    CHECK_THROWS_AS(modulus(no_side), std::invalid_argument);
}

TEST_CASE("notch excess obeys a two-sided deficit bound") {
    StripGraphDomain dom = notch_domain(0.15);
    double mod = modulus(rasterize_strip_window(dom, 0.0, 4.0, 1.0 / 128.0));
    double excess = mod - 4.0;
    CHECK(excess >= 0.0);
    CHECK(excess <= 0.36);

    double deficit = strip_area_deficit(dom, 0.0, 4.0, 2.0);
    // Fixture-calibrated comparability constants for the square-notch family.
    const double k_lo = 0.05, k_hi = 4.0;
    CHECK(excess >= k_lo * deficit);
    CHECK(excess <= k_hi * deficit);
}

TEST_CASE("grid refinement is first-order consistent") {
    StripGraphDomain dom = notch_domain(0.15);
    double coarse = modulus(rasterize_strip_window(dom, 0.0, 4.0, 1.0 / 32.0));
    double mid = modulus(rasterize_strip_window(dom, 0.0, 4.0, 1.0 / 64.0));
    double fine = modulus(rasterize_strip_window(dom, 0.0, 4.0, 1.0 / 128.0));
    CHECK(std::fabs(fine - mid) < 4.0 * std::fabs(mid - coarse) + 1e-6);
}

TEST_CASE("filling a hole with fixed electrodes cannot lower the modulus") {
    GridDomain holed = rectangle_grid(2.0, 1.0, 0.02);
    for (std::size_t j = 20; j <= 30; ++j)
        for (std::size_t i = 40; i <= 60; ++i) holed.mask[holed.at(i, j)] = 0;
    double with_hole = modulus(holed);
    double filled = modulus(rectangle_grid(2.0, 1.0, 0.02));
    CHECK(filled >= with_hole - 1e-8);
}

TEST_CASE("rw excesses and verdicts on the analytic families") {
    std::vector<std::pair<double, double>> windows{{4.0, 8.0}, {8.0, 16.0}, {16.0, 32.0}};
    const double tol = 0.02, delta = 1.0 / 32.0;

    StripGraphDomain flat = graph_domain(0.0, 32.0, [](double) { return 0.0; });
    auto flat_excess = rw_excesses(flat, windows, delta);
    for (double e : flat_excess) CHECK(std::fabs(e) < 1e-7);
    CHECK(rw_criterion(flat, windows, tol, delta) == ThickVerdict::Thick);

    // The area criterion needs windows farther out before its square-union
    // deficits drop below tolerance, so it gets a longer dyadic family.
    std::vector<std::pair<double, double>> far{{8.0, 16.0}, {16.0, 32.0}, {32.0, 64.0},
                                               {64.0, 128.0}};

    StripGraphDomain thick_dom = graph_domain(
        0.0, 128.0, [](double x) { return x < 2.5 ? 0.16 : std::min(0.16, 1.0 / (x * x)); },
        1 << 15);
    CHECK(rw_criterion(thick_dom, windows, tol, delta) == ThickVerdict::Thick);
    CHECK(is_thick_strip(thick_dom, far, 0.05) == ThickVerdict::Thick);

    StripGraphDomain thin_dom = graph_domain(
        0.0, 128.0, [](double x) { return x < 6.5 ? 0.16 : std::min(0.16, 1.0 / x); }, 1 << 15);
    CHECK(rw_criterion(thin_dom, windows, tol, delta) == ThickVerdict::NotThick);
    CHECK(is_thick_strip(thin_dom, far, 0.05) == ThickVerdict::NotThick);
}
