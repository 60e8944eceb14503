#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "innerlab/experiments.hpp"
#include "innerlab/map_fixtures.hpp"
#include "innerlab/serialize.hpp"

using namespace innerlab;

TEST_CASE("canonical json round trips bitwise") {
    BlaschkeProduct b({{Complex(0.31234567891234567, -0.125), 2}, {Complex(-0.5, 0.25), 1}},
                      0.87654321);
    Json j = to_json(b);
    std::string one = canonical_json(j);
    Json parsed = Json::parse(one);
    CHECK(canonical_json(parsed) == one);

    BlaschkeProduct back = blaschke_from_json(parsed);
    CHECK(back.degree() == b.degree());
    CHECK(back.rotation == b.rotation);
    for (std::size_t i = 0; i < b.zeros.size(); ++i) {
        CHECK(back.zeros[i].point == b.zeros[i].point);
        CHECK(back.zeros[i].multiplicity == b.zeros[i].multiplicity);
    }
}

TEST_CASE("inner representation round trip") {
    InnerFunctionRep f(BlaschkeProduct({{Complex(0.2, 0.1), 1}}, 0.5),
                       SingularAtomicInner::point_mass(kPi, 0.75), Moebius(Complex(0.3, 0.0), 0.1));
    Json j = to_json(f);
    InnerFunctionRep back = inner_rep_from_json(Json::parse(canonical_json(j)));
    for (Complex z : {Complex(0.1, 0.2), Complex(-0.4, 0.3), Complex(0.0, 0.0)})
        CHECK(std::abs(back(z) - f(z)) < 1e-15);
    CHECK(canonical_json(to_json(back)) == canonical_json(j));
}

TEST_CASE("measure and domain round trips") {
    CircleMeasure mu({{0.5, 0.25}, {3.0, 1.5}}, {0.0, 1.0, 2.0, 0.5});
    Json jm = to_json(mu);
    CircleMeasure mu2 = circle_measure_from_json(Json::parse(canonical_json(jm)));
    CHECK(canonical_json(to_json(mu2)) == canonical_json(jm));
    CHECK(mu2.total_mass() == mu.total_mass());

    DiskMeasure dm({{Complex(0.1, -0.2), 0.7}});
    CHECK(canonical_json(to_json(disk_measure_from_json(to_json(dm)))) ==
          canonical_json(to_json(dm)));

    BeurlingCarlesonSet e = finite_circle_set({0.0, 1.0, 4.0});
    CHECK(canonical_json(to_json(bc_set_from_json(to_json(e)))) == canonical_json(to_json(e)));

    PolylineJordanDomain half = PolylineJordanDomain::half_disk_right(64);
    PolylineJordanDomain half2 = domain_from_json(Json::parse(canonical_json(to_json(half))));
    CHECK(half2.segment_count() == half.segment_count());
    CHECK(half2.circle_arcs == half.circle_arcs);
}

TEST_CASE("strip csv and pgm round trips") {
    StripGraphDomain u(SampledFunction::tabulate(0.0, 8.0, 65,
                                                 [](double x) { return 0.05 + 0.01 * std::sin(x); }),
                       SampledFunction::tabulate(0.0, 8.0, 65, [](double) { return 0.0; }));
    StripGraphDomain u2 = strip_domain_from_csv(strip_domain_to_csv(u));
    CHECK(u2.h1.size() == u.h1.size());
    for (std::size_t i = 0; i < u.h1.size(); ++i)
        CHECK(u2.h1.values[i] == u.h1.values[i]);

    GridDomain g = rectangle_grid(1.0, 1.0, 0.125);
    GridDomain g2 = grid_from_pgm_and_marking(mask_to_pgm(g), marking_to_json(g));
    CHECK(g2.cols == g.cols);
    CHECK(g2.rows == g.rows);
    CHECK(g2.mask == g.mask);
    CHECK(g2.side == g.side);
    CHECK(g2.delta == g.delta);
}

TEST_CASE("experiment reports are reproducible and serializable") {
    ExperimentReport a = run_experiment("motivating", {}, 7);
    ExperimentReport b = run_experiment("motivating", {}, 7);
    CHECK(canonical_json(a.to_json()) == canonical_json(b.to_json()));
    CHECK(a.all_pass());

    ExperimentReport parsed = ExperimentReport::from_json(Json::parse(canonical_json(a.to_json())));
    CHECK(canonical_json(parsed.to_json()) == canonical_json(a.to_json()));

    CHECK_THROWS_AS(run_experiment("nonsense", {}, 1), std::invalid_argument);
}

TEST_CASE("island and continuity experiments pass at desk scale") {
    ExperimentReport island = run_experiment("island", {}, 3);
    CHECK(island.all_pass());

    ExperimentReport continuity =
        run_experiment("continuity", {{"n0", 10}, {"n1", 100}}, 3);
    CHECK(continuity.all_pass());
    CHECK(continuity.find_series("green-sum").ys.size() == 2);
}

TEST_CASE("entropy-growth experiment tracks the closed form") {
    ExperimentReport report = run_experiment("entropy-growth", {}, 5);
    CHECK(report.all_pass());
    const auto& entropies = report.find_series("entropy");
    // Decreasing toward log 2 from n = 2 on.
    for (std::size_t i = 1; i < entropies.ys.size(); ++i)
        CHECK(entropies.ys[i] < entropies.ys[i - 1]);
    CHECK(entropies.ys.back() > std::log(2.0));
}

TEST_CASE("svg plots are byte-deterministic and well-formed") {
    ExperimentReport report = run_experiment("motivating", {}, 11);
    std::string svg1 = emit_plot(report, "mu-distance");
    std::string svg2 = emit_plot(report, "mu-distance");
    CHECK(svg1 == svg2);
    CHECK(svg1.rfind("<svg", 0) == 0);
    CHECK(svg1.find("polyline") != std::string::npos);
    CHECK(svg1.find("</svg>") != std::string::npos);

    CHECK_THROWS_AS(emit_plot(report, "missing-series"), std::invalid_argument);
}
