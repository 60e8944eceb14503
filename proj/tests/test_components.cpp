#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "innerlab/components.hpp"
#include "innerlab/jordan.hpp"

using namespace innerlab;

namespace {

// Traced boundaries should be simple closed polylines; the Jordan-domain
// constructor validates exactly that (after orienting positively).
void check_jordan(const std::vector<Complex>& boundary) {
    double area2 = 0.0;
    const std::size_t n = boundary.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Complex& p = boundary[i];
        const Complex& q = boundary[(i + 1) % n];
        area2 += p.real() * q.imag() - q.real() * p.imag();
    }
    std::vector<Complex> oriented = boundary;
    if (area2 < 0.0) std::reverse(oriented.begin(), oriented.end());
    CHECK_NOTHROW(PolylineJordanDomain(oriented));
}

}  // namespace

TEST_CASE("round disk validation") {
    CHECK_THROWS_AS(RoundDisk(Complex(0.8, 0.0), 0.3), std::invalid_argument);
    CHECK_NOTHROW(RoundDisk(Complex(0.5, 0.0), 0.1));
}

TEST_CASE("preimage of a centered disk under z^2") {
    BlaschkeProduct sq = BlaschkeProduct::monomial(2);
    auto comps = preimage_components(sq, RoundDisk(Complex(0, 0), 0.25), 512);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].degree == 2);
    REQUIRE(comps[0].critical_points_inside.size() == 1);
    CHECK(comps[0].critical_points_inside[0].multiplicity == 1);
    CHECK_FALSE(comps[0].touches_circle);
    // |z^2| < 1/4 is |z| < 1/2: the trace hugs that circle.
    for (const Complex& z : comps[0].boundary)
        CHECK(std::abs(z) == doctest::Approx(0.5).epsilon(0.01));
    check_jordan(comps[0].boundary);
}

TEST_CASE("preimage of an off-center disk under z^2 splits into two islands") {
    BlaschkeProduct sq = BlaschkeProduct::monomial(2);
    auto comps = preimage_components(sq, RoundDisk(Complex(0.5, 0.0), 0.1), 512);
    REQUIRE(comps.size() == 2);
    int total_degree = 0;
    for (const auto& comp : comps) {
        CHECK(comp.degree == 1);
        CHECK(comp.critical_points_inside.empty());
        total_degree += comp.degree;
        check_jordan(comp.boundary);
    }
    CHECK(total_degree == 2);  // conservation: V avoids the critical value
    // The components sit at the two square roots of 0.5.
    double root = std::sqrt(0.5);
    double d0 = std::abs(comps[0].interior_point + root);
    double d1 = std::abs(comps[1].interior_point - root);
    CHECK(std::min(d0, std::abs(comps[0].interior_point - root)) < 0.1);
    CHECK(std::min(d1, std::abs(comps[1].interior_point + root)) < 0.1);
}

TEST_CASE("preimage component of the boundary-atom family carries full degree") {
    BlaschkeProduct f4 = boundary_atom_family(4);
    auto comps = preimage_components(f4, RoundDisk(Complex(0, 0), 0.1), 512);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].degree == 5);
    REQUIRE(comps[0].critical_points_inside.size() == 1);
    CHECK(comps[0].critical_points_inside[0].multiplicity == 4);
    check_jordan(comps[0].boundary);
}

TEST_CASE("riemann-hurwitz on every traced component") {
    for (auto& [b, v] : std::vector<std::pair<BlaschkeProduct, RoundDisk>>{
             {BlaschkeProduct::monomial(2), RoundDisk(Complex(0, 0), 0.25)},
             {BlaschkeProduct::monomial(2), RoundDisk(Complex(0.5, 0.0), 0.1)},
             {boundary_atom_family(4), RoundDisk(Complex(0, 0), 0.1)},
             {BlaschkeProduct({{Complex(0.0, 0.0), 1}, {Complex(0.5, 0.0), 1}}, 0.0),
              RoundDisk(Complex(0.0, 0.0), 0.2)}}) {
        auto comps = preimage_components(b, v, 512);
        REQUIRE(!comps.empty());
        for (const auto& comp : comps) {
            int interior_mult = 0;
            for (const auto& cp : comp.critical_points_inside) interior_mult += cp.multiplicity;
            CHECK(comp.degree == 1 + interior_mult);
        }
    }
}

TEST_CASE("margin guard rejects disks grazing a critical value") {
    BlaschkeProduct sq = BlaschkeProduct::monomial(2);
    // Critical value 0 sits exactly on the boundary circle of V.
    CHECK_THROWS_AS(preimage_components(sq, RoundDisk(Complex(0.1, 0.0), 0.1), 512),
                    std::domain_error);
}

TEST_CASE("island dichotomy") {
    BlaschkeProduct sq = BlaschkeProduct::monomial(2);

    IslandReport far = island_classify(sq, RoundDisk(Complex(0.5, 0.0), 0.1));
    CHECK(far.distance_to_critical_values == doctest::Approx(0.4));
    CHECK(far.simple_islands);

    IslandReport near = island_classify(sq, RoundDisk(Complex(0, 0), 0.25));
    CHECK(near.distance_to_critical_values == 0.0);
    CHECK_FALSE(near.simple_islands);

    // The F_6 islands nearest the circle are a couple of grid cells wide at
    // this resolution; 1024 resolves all seven.
    BlaschkeProduct f6 = boundary_atom_family(6);
    IslandReport shifted = island_classify(f6, RoundDisk(Complex(0.5, 0.0), 0.05), 1024);
    CHECK(shifted.distance_to_critical_values > 0.0);
    CHECK(shifted.simple_islands);
    CHECK(shifted.components.size() == 7);
    for (const auto& comp : shifted.components) CHECK(comp.degree == 1);
}

TEST_CASE("escaping green sums approach the critical-value mass") {
    BlaschkeFamily family = [](int n) { return boundary_atom_family(n); };
    RoundDisk v(Complex(0, 0), 0.5);

    double s100 = escaping_green_sum(family, 100, v, Complex(0, 0), 0.8);
    CHECK(s100 == doctest::Approx(100.0 * std::log(1.0 / 0.99)).epsilon(1e-12));

    // Disk away from the only critical value contributes nothing.
    CHECK(escaping_green_sum(family, 100, RoundDisk(Complex(0.5, 0.0), 0.2), Complex(0, 0), 0.8) ==
          0.0);

    double prev_gap = 1e300;
    for (int n : {10, 100, 1000}) {
        double s = escaping_green_sum(family, n, v, Complex(0, 0), 0.8);
        double gap = std::fabs(s - 1.0);
        CHECK(gap <= 2.0 / double(n));
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
}
