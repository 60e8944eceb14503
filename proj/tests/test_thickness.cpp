#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "innerlab/inner_function.hpp"
#include "innerlab/thickness.hpp"

using namespace innerlab;

namespace {

SampledFunction zero_fn(double a, double b, std::size_t n = 2048) {
    return SampledFunction::tabulate(a, b, n, [](double) { return 0.0; });
}

StripGraphDomain graph_domain(double a, double b, const std::function<double(double)>& h1,
                              std::size_t n = 1 << 15) {
    return StripGraphDomain(SampledFunction::tabulate(a, b, n, h1), zero_fn(a, b, n));
}

std::vector<std::pair<double, double>> dyadic_windows(int k_first, int k_last) {
    std::vector<std::pair<double, double>> w;
    for (int k = k_first; k < k_last; ++k) w.push_back({std::pow(2.0, k), std::pow(2.0, k + 1)});
    return w;
}

MapOracle square_oracle() {
    MapOracle o;
    o.map = [](Complex z) { return z * z; };
    o.boundary_value = [](Complex zeta) { return zeta * zeta; };
    return o;
}

}  // namespace

TEST_CASE("strip area deficit basics") {
    StripGraphDomain flat(zero_fn(0.0, 10.0), zero_fn(0.0, 10.0));
    CHECK(strip_area_deficit(flat, 1.0, 6.0, 2.0) == 0.0);

    // One isolated bump of height 0.1 produces a single 0.2-side square.
    std::size_t n = 10001;
    std::vector<double> h(n, 0.0);
    h[n / 2] = 0.1;  // x0 = 5 on [0, 10]
    StripGraphDomain bump(SampledFunction(0.0, 10.0, h), zero_fn(0.0, 10.0, n));
    CHECK(strip_area_deficit(bump, 4.0, 6.0, 2.0) == doctest::Approx(0.04).epsilon(0.02));

    // Constant band: squares overlap into a strip of height k*h across the
    // window; clipping makes the area (x2-x1)*k*h.
    StripGraphDomain band = graph_domain(0.0, 10.0, [](double) { return 0.1; }, 10001);
    CHECK(strip_area_deficit(band, 2.0, 3.0, 2.0) == doctest::Approx(0.2).epsilon(0.02));

    CHECK_THROWS_AS(strip_area_deficit(flat, -5.0, 6.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(strip_area_deficit(flat, 1.0, 6.0, 3.0), std::invalid_argument);
}

TEST_CASE("square unions grow with k") {
    StripGraphDomain dom = graph_domain(0.0, 64.0, [](double x) {
        return std::min(0.16, 1.0 / (1.0 + x));
    });
    for (auto [a, b] : dyadic_windows(1, 5)) {
        double small = strip_area_deficit(dom, a, b, 0.5);
        double big = strip_area_deficit(dom, a, b, 2.0);
        CHECK(small <= big + 1e-3);
    }
}

TEST_CASE("larger domains lose less area") {
    auto h = [](double x) { return std::min(0.16, 1.0 / (1.0 + 0.5 * x)); };
    auto h_small = [&](double x) { return 0.5 * h(x); };
    StripGraphDomain dom = graph_domain(0.0, 64.0, h);
    StripGraphDomain dom_big = graph_domain(0.0, 64.0, h_small);  // h' <= h: larger domain
    for (auto [a, b] : dyadic_windows(1, 5))
        CHECK(strip_area_deficit(dom_big, a, b, 2.0) <=
              strip_area_deficit(dom, a, b, 2.0) + 1e-3);
}

TEST_CASE("thickness verdicts on the analytic families") {
    StripGraphDomain flat(zero_fn(0.0, 300.0), zero_fn(0.0, 300.0));
    CHECK(is_thick_strip(flat, dyadic_windows(3, 8), 0.05) == ThickVerdict::Thick);

    StripGraphDomain thick_dom =
        graph_domain(0.0, 300.0, [](double x) { return x < 2.5 ? 0.16 : std::min(0.16, 1.0 / (x * x)); });
    CHECK(is_thick_strip(thick_dom, dyadic_windows(3, 8), 0.05) == ThickVerdict::Thick);

    StripGraphDomain thin_dom =
        graph_domain(0.0, 300.0, [](double x) { return x < 6.5 ? 0.16 : std::min(0.16, 1.0 / x); });
    CHECK(is_thick_strip(thin_dom, dyadic_windows(3, 8), 0.05) == ThickVerdict::NotThick);

    // Verdicts agree with finiteness of the graph integral on these families:
    // the x^-2 tail integral is bounded, the 1/x windows contribute ~log 2 each.
    double tail_thick = 0.0, tail_thin = 0.0;
    for (auto [a, b] : dyadic_windows(6, 8)) {
        StripGraphDomain wt = graph_domain(a, b, [](double x) { return std::min(0.16, 1.0 / (x * x)); });
        StripGraphDomain wn = graph_domain(a, b, [](double x) { return std::min(0.16, 1.0 / x); });
        tail_thick += strip_integral(wt).value;
        tail_thin += strip_integral(wn).value;
    }
    CHECK(tail_thick < 0.05);
    CHECK(tail_thin > 2.0 * 0.5 * std::log(2.0));
}

TEST_CASE("strip integral closed forms") {
    StripGraphDomain flat(zero_fn(0.0, 10.0), zero_fn(0.0, 10.0));
    CHECK(strip_integral(flat).value == 0.0);

    // x^-2 exceeds the 1/6 graph bound below x = sqrt(6); integrate past it.
    StripGraphDomain inv_sq = graph_domain(2.5, 100.0, [](double x) { return 1.0 / (x * x); }, 10000);
    CHECK(strip_integral(inv_sq).value == doctest::Approx(1.0 / 2.5 - 1.0 / 100.0).epsilon(1e-3));

    StripGraphDomain inv = graph_domain(1.0, 100.0, [](double x) { return std::min(0.16, 1.0 / x); }, 200000);
    // h = 1/x caps at 1/6 below x = 6.25; integral = cap part + log tail
    double expect = 0.16 * (6.25 - 1.0) + std::log(100.0 / 6.25);
    CHECK(strip_integral(inv).value == doctest::Approx(expect).epsilon(1e-3));
    CHECK(strip_integral(inv).finite_range);
}

TEST_CASE("doubling condition scan") {
    SampledFunction constant = SampledFunction::tabulate(0.0, 1.0, 512, [](double) { return 0.05; });
    CHECK(doubling_check(constant, 1.0));
    CHECK(doubling_check(constant, 0.3));

    SampledFunction square = SampledFunction::tabulate(0.0, 1.0, 2048, [](double x) { return x * x; });
    CHECK(doubling_check(square, 0.1));

    std::vector<double> spike(512, 0.0);
    spike[256] = 0.15;
    SampledFunction sp(0.0, 1.0, spike);
    CHECK_FALSE(doubling_check(sp, 0.5));

    // The analytic criterion families are themselves doubling, so the
    // integral test is two-sided on them.
    SampledFunction inv_sq = SampledFunction::tabulate(
        2.5, 100.0, 4096, [](double x) { return 1.0 / (x * x); });
    SampledFunction inv = SampledFunction::tabulate(
        6.5, 100.0, 4096, [](double x) { return std::min(0.16, 1.0 / x); });
    CHECK(doubling_check(inv_sq, 0.25));
    CHECK(doubling_check(inv, 0.25));
}

TEST_CASE("disk thickness integral") {
    std::vector<double> zero(4096, 0.0);
    CHECK(disk_thickness_integral(zero, 0.0) == 0.0);

    // h = |zeta - p|^{3/2}: integral of |zeta - p|^{-1/2} |dzeta| has the
    // closed form 2 pi Gamma(1/4) / (sqrt(2 pi) Gamma(3/4)).
    const std::size_t n = 8192;
    std::vector<double> h32(n), h1(n);
    for (std::size_t j = 0; j < n; ++j) {
        double theta = kTwoPi * (double(j) + 0.5) / double(n);
        double d = chord_distance(theta, 0.0);
        h32[j] = std::pow(d, 1.5);
        h1[j] = d;
    }
    double closed = kTwoPi * std::tgamma(0.25) / (std::sqrt(kTwoPi) * std::tgamma(0.75));
    CHECK(disk_thickness_integral(h32, 0.0) == doctest::Approx(closed).epsilon(1e-2));

    CHECK(std::isinf(disk_thickness_integral(h1, 0.0)));
}

TEST_CASE("measure-driven approach regions") {
    SampledFunction grid = SampledFunction::tabulate(0.0, 1.0, 4001, [](double x) { return x; });

    // Point mass at the contact point: parabolic region f = c x^2.
    ApproachRegion parabola = measure_approach_region(CircleMeasure::point_mass(0.0), 0.5, grid);
    CHECK_FALSE(parabola.has_degenerate_samples());
    CHECK(parabola.f(0.5) == doctest::Approx(0.5 * 0.25).epsilon(1e-6));
    CHECK(std::isfinite(approach_region_integral(parabola)));

    // Mass far from the contact point: denominator vanishes on small x.
    ApproachRegion degenerate = measure_approach_region(CircleMeasure::point_mass(0.5), 0.5, grid);
    CHECK(degenerate.has_degenerate_samples());

    // Lacunary measure with mass(0, r) >> r: finite inverse-mass integral and
    // a region passing the disk criterion.
    std::vector<CircleMeasure::Atom> heavy;
    for (int k = 1; k <= 12; ++k) {
        heavy.push_back({std::pow(0.25, k), std::pow(0.5, k)});
        heavy.push_back({kTwoPi - std::pow(0.25, k), std::pow(0.5, k)});
    }
    CircleMeasure lac(heavy);
    CHECK(std::isfinite(inverse_mass_integral(lac, 0.0, 300)));
    ApproachRegion thick_region = measure_approach_region(lac, 0.25, grid);
    CHECK(std::isfinite(approach_region_integral(thick_region)));

    // Borderline decay mass(0, r) ~ r gives a cone; the criterion diverges.
    std::vector<CircleMeasure::Atom> linear;
    for (int k = 1; k <= 18; ++k) {
        linear.push_back({std::pow(0.5, k), std::pow(0.5, k)});
        linear.push_back({kTwoPi - std::pow(0.5, k), std::pow(0.5, k)});
    }
    CircleMeasure lin(linear);
    ApproachRegion cone = measure_approach_region(lin, 0.25, grid);
    CHECK(std::isinf(approach_region_integral(cone)));
}

TEST_CASE("julia horoball check") {
    MapOracle identity;
    identity.map = [](Complex z) { return z; };
    identity.boundary_value = [](Complex zeta) { return zeta; };
    CHECK(julia_check(identity, 0.7, 1.0));

    MapOracle sq = square_oracle();
    CHECK(julia_check(sq, 0.0, 2.0));
    CHECK_FALSE(julia_check(sq, 0.0, 1.5));

    // Weakening the target horoball preserves the check.
    for (double m : {2.0, 2.5, 4.0, 10.0}) CHECK(julia_check(sq, 0.0, m));

    MapOracle no_boundary;
    no_boundary.map = [](Complex z) { return z; };
    CHECK_THROWS_AS(julia_check(no_boundary, 0.0, 1.0), std::domain_error);
}

TEST_CASE("radial angular derivatives") {
    MapOracle identity;
    identity.map = [](Complex z) { return z; };
    for (double q : {0.0, 1.0, 2.5}) {
        CHECK(angular_derivative_radial(identity, q) == doctest::Approx(1.0).epsilon(1e-9));
    }

    MapOracle sq = square_oracle();
    CHECK(angular_derivative_radial(sq, 0.0) == doctest::Approx(2.0).epsilon(1e-6));

    MapOracle moeb;
    moeb.map = [](Complex z) { return (z - 0.5) / (1.0 - 0.5 * z); };
    CHECK(angular_derivative_radial(moeb, 0.0) == doctest::Approx(3.0).epsilon(1e-4));

    MapOracle atom;
    atom.map = [](Complex z) {
        SingularAtomicInner s = SingularAtomicInner::point_mass(kPi);
        return s(z);
    };
    CHECK(std::isinf(angular_derivative_radial(atom, kPi)));
}
