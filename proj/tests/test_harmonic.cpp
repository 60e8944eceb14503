#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "innerlab/clark.hpp"
#include "innerlab/green.hpp"
#include "innerlab/map_fixtures.hpp"
#include "innerlab/rng.hpp"
#include "innerlab/wos.hpp"

using namespace innerlab;

TEST_CASE("polyline domain validation") {
    CHECK_THROWS_AS(PolylineJordanDomain({Complex(0, 0), Complex(1, 0)}), std::invalid_argument);

    // Clockwise square: negative orientation rejected.
    CHECK_THROWS_AS(
        PolylineJordanDomain({Complex(0, 0), Complex(0, 1), Complex(1, 1), Complex(1, 0)}),
        std::invalid_argument);

    // Bowtie: self-intersection rejected.
    CHECK_THROWS_AS(
        PolylineJordanDomain({Complex(0, 0), Complex(1, 1), Complex(1, 0), Complex(0, 1)}),
        std::invalid_argument);

    PolylineJordanDomain disk = PolylineJordanDomain::disk_polygon(64);
    CHECK(disk.contains(Complex(0.5, 0.2)));
    CHECK_FALSE(disk.contains(Complex(1.2, 0.0)));
    CHECK(disk.segment_on_circle(10));

    PolylineJordanDomain half = PolylineJordanDomain::half_disk_upper(64);
    CHECK(half.contains(Complex(0.0, 0.5)));
    CHECK_FALSE(half.contains(Complex(0.0, -0.5)));
}

TEST_CASE("segment grid nearest queries agree with brute force") {
    PolylineJordanDomain dom = PolylineJordanDomain::half_disk_right(128);
    SegmentGrid grid(dom);
    SplitMix64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Complex z(rng.uniform(-1.2, 1.2), rng.uniform(-1.2, 1.2));
        auto hit = grid.nearest(z);
        double brute = 1e300;
        for (std::size_t s = 0; s < dom.segment_count(); ++s) {
            brute = std::min(brute,
                             segment_distance(z, dom.segment_start(s), dom.segment_end(s), nullptr));
        }
        CHECK(hit.distance == doctest::Approx(brute).epsilon(1e-12));
    }
}

TEST_CASE("harmonic measure of a quarter arc from the center") {
    PolylineJordanDomain disk = PolylineJordanDomain::disk_polygon(1000);
    BoundaryPartition parts;
    parts.parts.push_back({"quarter", {{0, 250}}});
    parts.parts.push_back({"rest", {{250, 1000}}});
    std::size_t n = 100000;
    auto probs = wos_harmonic_measure(disk, Complex(0.0, 0.0), parts, n, 2024);
    double sigma = std::sqrt(0.25 * 0.75 / double(n));
    CHECK(std::fabs(probs[0] - 0.25) < 3.0 * sigma);
    CHECK(probs[0] + probs[1] == doctest::Approx(1.0));
}

TEST_CASE("harmonic measure of the half-disk diameter matches the conformal map") {
    PolylineJordanDomain half = PolylineJordanDomain::half_disk_upper(512);
    BoundaryPartition parts;
    parts.parts.push_back({"diameter", {{0, 2}}});
    parts.parts.push_back({"arc", {{2, half.segment_count()}}});
    Complex w(0.0, 0.5);
    auto probs = wos_harmonic_measure(half, w, parts, 200000, 7);
    double expect = upper_half_disk_diameter_measure(w);
    CHECK(expect == doctest::Approx(0.409670).epsilon(1e-4));
    CHECK(probs[0] == doctest::Approx(expect).epsilon(0.02));
}

TEST_CASE("harmonic measure of square sides by symmetry") {
    PolylineJordanDomain sq = PolylineJordanDomain::square(0.5);
    BoundaryPartition parts;
    for (std::size_t s = 0; s < 4; ++s)
        parts.parts.push_back({"side" + std::to_string(s), {{s, s + 1}}});
    std::size_t n = 100000;
    auto probs = wos_harmonic_measure(sq, Complex(0.0, 0.0), parts, n, 99);
    double sigma = std::sqrt(0.25 * 0.75 / double(n));
    for (double p : probs) CHECK(std::fabs(p - 0.25) < 3.5 * sigma);
}

TEST_CASE("walks are reproducible for a fixed seed") {
    PolylineJordanDomain disk = PolylineJordanDomain::disk_polygon(200);
    BoundaryPartition parts;
    parts.parts.push_back({"upper", {{0, 100}}});
    parts.parts.push_back({"lower", {{100, 200}}});
    auto a = wos_harmonic_measure(disk, Complex(0.1, 0.2), parts, 20000, 5);
    auto b = wos_harmonic_measure(disk, Complex(0.1, 0.2), parts, 20000, 5);
    CHECK(a[0] == b[0]);

    CHECK_THROWS_AS(wos_harmonic_measure(disk, Complex(2.0, 0.0), parts, 20000, 5),
                    std::domain_error);
}

TEST_CASE("disk green function closed forms") {
    CHECK(green_disk(Complex(0, 0), Complex(0.5, 0)) == doctest::Approx(std::log(2.0)));
    CHECK(green_disk(Complex(0.3, 0), Complex(0.7, 0)) ==
          doctest::Approx(std::log((1.0 - 0.21) / 0.4)));

    SplitMix64 rng(31);
    for (int t = 0; t < 50; ++t) {
        Complex p(rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7));
        Complex z(rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7));
        if (std::abs(p - z) < 0.05) continue;
        CHECK(green_disk(p, z) == doctest::Approx(green_disk(z, p)).epsilon(1e-12));
        CHECK(green_disk(p, z) > 0.0);
    }

    CHECK_THROWS_AS(green_disk(Complex(0.5, 0), Complex(0.5, 0)), std::domain_error);
}

TEST_CASE("grid green function matches the disk closed form") {
    PolylineJordanDomain disk = PolylineJordanDomain::disk_polygon(1000);
    double got = green_grid(disk, Complex(0.0, 0.0), Complex(0.5, 0.0), 1.0 / 200.0);
    CHECK(got == doctest::Approx(std::log(2.0)).epsilon(0.02));
}

TEST_CASE("grid green function is conformally consistent on the half-disk") {
    PolylineJordanDomain half = PolylineJordanDomain::half_disk_upper(512);
    Complex p(0.0, 0.5), z(0.0, 0.25);
    double got = green_grid(half, p, z, 1.0 / 200.0);
    double expect = green_disk(upper_half_disk_to_disk(p), upper_half_disk_to_disk(z));
    CHECK(got == doctest::Approx(expect).epsilon(0.02));
}

TEST_CASE("green functions grow with the domain") {
    PolylineJordanDomain small = PolylineJordanDomain::square(0.45);
    PolylineJordanDomain big = PolylineJordanDomain::square(0.6);
    Complex p(-0.2, 0.0), z(0.2, 0.1);
    double g_small = green_grid(small, p, z, 1.0 / 200.0);
    double g_big = green_grid(big, p, z, 1.0 / 200.0);
    CHECK(g_small <= g_big * 1.02);
}

TEST_CASE("green quotient of two basepoints converges to the Poisson ratio") {
    SplitMix64 rng(17);
    for (int t = 0; t < 20; ++t) {
        Complex p(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6));
        Complex q(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6));
        double zeta = rng.uniform(0.0, kTwoPi);
        Complex c = (1.0 - 1e-4) * unit(zeta);
        double got = green_disk(p, c) / green_disk(q, c);
        double expect = poisson_kernel(p, unit(zeta)) / poisson_kernel(q, unit(zeta));
        CHECK(got == doctest::Approx(expect).epsilon(0.01));
    }
}

TEST_CASE("green quotient profile fixtures") {
    // Whole disk: quotient identically 1.
    PolylineJordanDomain disk = PolylineJordanDomain::disk_polygon(2000);
    auto ones = green_quotient_profile(disk, Complex(0.3, 0.0), 0.0, {0.6, 0.75, 0.9}, 1.0 / 150.0);
    for (double v : ones) CHECK(v == doctest::Approx(1.0).epsilon(0.05));

    // Right half-disk at the contact point 1: limit via the explicit map,
    // cross-checked in closed form through conformal invariance.
    Complex p(0.5, 0.0);
    Complex psi_p = right_half_disk_to_disk(p);
    Complex psi_zeta = right_half_disk_to_disk(Complex(1.0, 0.0));
    double limit = std::abs(right_half_disk_to_disk_derivative(Complex(1.0, 0.0))) *
                   poisson_kernel(psi_p, psi_zeta) / poisson_kernel(p, Complex(1.0, 0.0));
    CHECK(limit == doctest::Approx(8.0 / 9.0).epsilon(1e-12));
    double r = 1.0 - 1e-4;
    double closed_quotient = green_disk(psi_p, right_half_disk_to_disk(Complex(r, 0.0))) /
                             green_disk(p, Complex(r, 0.0));
    CHECK(closed_quotient == doctest::Approx(limit).epsilon(0.01));

    PolylineJordanDomain half = PolylineJordanDomain::half_disk_right(512);
    auto prof = green_quotient_profile(half, p, 0.0, {0.8, 0.9, 0.95}, 1.0 / 200.0);
    CHECK(prof.back() == doctest::Approx(limit).epsilon(0.08));
}

TEST_CASE("clark pushforward: identity and moebius closed forms") {
    PolylineJordanDomain disk = PolylineJordanDomain::disk_polygon(800);

    CircleMeasure mu({{0.3, 0.5}, {2.0, 1.0}});
    auto id = clark_pushforward(disk, oracle_identity(), Complex(0.0, 0.0), mu, 10000, 1);
    CHECK_FALSE(id.used_walks);
    REQUIRE(id.boundary.atoms.size() == 2);
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(id.boundary.atoms[i].mass == doctest::Approx(mu.atoms[i].mass).epsilon(1e-9));

    Moebius m(Complex(0.4, -0.2), 0.9);
    Complex phi0 = m.inverse()(Complex(0.0, 0.0));
    auto push = clark_pushforward(disk, oracle_moebius(m), phi0, mu, 10000, 1);
    CHECK_FALSE(push.used_walks);
    double total = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
        double expect = std::abs(m.derivative(unit(mu.atoms[i].theta))) * mu.atoms[i].mass;
        CHECK(push.boundary.atoms[i].mass == doctest::Approx(expect).epsilon(1e-6));
        total += push.boundary.atoms[i].mass;
    }
    CHECK(total == doctest::Approx(poisson_extension(mu, phi0)).epsilon(1e-6));
}

TEST_CASE("clark pushforward reports boundary weights unavailable without an oracle") {
    PolylineJordanDomain half = PolylineJordanDomain::half_disk_right(256);
    CircleMeasure mu = CircleMeasure::point_mass(0.0);
    MapOracle none;  // no callable map
    auto push = clark_pushforward(half, none, right_half_disk_center(), mu, 20000, 9);
    CHECK_FALSE(push.boundary_available);
    CHECK(push.boundary.total_mass() == 0.0);
    CHECK(push.used_walks);  // interior part still estimated
    CHECK(push.interior_total > 0.0);
}

TEST_CASE("clark pushforward on the right half-disk") {
    PolylineJordanDomain half = PolylineJordanDomain::half_disk_right(512);
    CircleMeasure mu = CircleMeasure::point_mass(0.0);  // delta at 1, thick contact
    Complex phi0 = right_half_disk_center();
    auto push = clark_pushforward(half, oracle_right_half_disk_inverse(), phi0, mu, 200000, 42);
    CHECK(push.used_walks);

    REQUIRE(push.boundary.atoms.size() == 1);
    CHECK(push.boundary.atoms[0].mass == doctest::Approx(2.0).epsilon(1e-4));

    double want_total = poisson_extension(mu, phi0);
    CHECK(want_total == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-9));
    double interior_expect = want_total - 2.0;  // sqrt(2) - 1
    CHECK(std::fabs(push.interior_total - interior_expect) < 3.0 * push.interior_sigma + 1e-3);
}
