#pragma once

#include <functional>
#include <string>
#include <vector>

#include "innerlab/geometry.hpp"
#include "innerlab/measures.hpp"

namespace innerlab {

// Real function sampled on a uniform grid over [x_min, x_max].
struct SampledFunction {
    double x_min = 0.0;
    double x_max = 0.0;
    std::vector<double> values;

    SampledFunction() = default;
    SampledFunction(double x_min_, double x_max_, std::vector<double> values_);

    static SampledFunction tabulate(double x_min, double x_max, std::size_t n,
                                    const std::function<double(double)>& f);

    std::size_t size() const { return values.size(); }
    double step() const { return (x_max - x_min) / double(values.size() - 1); }
    double x_at(std::size_t i) const { return x_min + double(i) * step(); }
    double operator()(double x) const;  // linear interpolation, clamped
};

// Strip {-1/2 < Im z < 1/2} minus the graph regions h1 (bottom) and h2 (top);
// both graphs must stay below 1/6, so the domain contains the middle third.
struct StripGraphDomain {
    SampledFunction h1, h2;

    StripGraphDomain() = default;
    StripGraphDomain(SampledFunction h1_, SampledFunction h2_);
};

// Approach region {x + iy in the upper half-plane : y > f(x)} with f(0) = 0,
// f <= |x|/4; samples on (0, x_max], symmetric when flagged.
struct ApproachRegion {
    SampledFunction f;
    bool symmetric = true;
    std::vector<bool> degenerate;  // per-sample: denominator mass vanished

    bool has_degenerate_samples() const;
};

// Conformal map supplied as a callable with declared source geometry; used by
// the boundary-derivative and horoball checks.
struct MapOracle {
    enum class Domain { Disk, Strip, HalfDiskRight, HalfDiskUpper };

    std::function<Complex(Complex)> map;
    Domain domain = Domain::Disk;
    std::function<Complex(Complex)> exact_derivative;      // optional
    std::function<Complex(Complex)> boundary_value;        // optional; circle points

    Complex boundary(const Complex& zeta) const;
};

enum class ThickVerdict { Thick, NotThick, Inconclusive };

std::string to_string(ThickVerdict v);

// Area removed from the window [x1, x2] x (-1/2, 1/2) by the union of the
// boundary squares of side k*h resting on the strip edges, computed from the
// exact upper envelope of the squares on a 1e-3 raster.
double strip_area_deficit(const StripGraphDomain& u, double x1, double x2, double k);

// Shared verdict logic: values below tol on the trailing third mean thick;
// staying above 10*tol without decreasing means not thick; anything else is
// inconclusive (finite data cannot certify a limit).
ThickVerdict trend_verdict(const std::vector<double>& values, double tol);

// Trend verdict of the window deficits at k = 2.
ThickVerdict is_thick_strip(const StripGraphDomain& u,
                            const std::vector<std::pair<double, double>>& windows, double tol);

struct StripIntegral {
    double value = 0.0;
    bool finite_range = true;  // tail beyond x_max is not integrated
};

// Trapezoid integral of h1 + h2 over the sampled range.
StripIntegral strip_integral(const StripGraphDomain& u);

// Sampled doubling condition h(x) >= c h(x0) whenever |x - x0| < c h(x0).
bool doubling_check(const SampledFunction& h, double c);

// Quadrature of h(zeta)/|zeta - p|^2 over the circle against |dzeta|, with the
// cell containing p excluded and a dyadic-shell tail estimate toward p.
// Returns +infinity when the shell sums refuse to decay (divergent integral).
// h is sampled at theta_j = 2 pi j / N, p is an angle.
double disk_thickness_integral(const std::vector<double>& h, double p);

// f(+-x) = c x^2 / mu(0, x/2) clamped at |x|/4, sampled on x_grid; the circle
// measure is read near theta = 0 with arclength as the local coordinate.
ApproachRegion measure_approach_region(const CircleMeasure& mu, double c,
                                       const SampledFunction& x_grid);

// Thickness of an approach region at 0 through the disk integral criterion:
// finite integral of f(x)/x^2 (both sides) iff thick for doubling f.
double approach_region_integral(const ApproachRegion& region);

// Sampled horoball mapping check: for every c in c_grid and every sampled z
// with Re((zeta+z)/(zeta-z)) > c, the image satisfies the same inequality at
// level c/M (up to 1e-9 slack).
bool julia_check(const MapOracle& phi, double zeta, double m,
                 const std::vector<double>& c_grid = {}, int samples = 48);

// Richardson-extrapolated limit of (1 - |phi(r zeta)|)/(1 - r) along the
// radius; +infinity sentinel once the quotient exceeds 1e6.
double angular_derivative_radial(const MapOracle& phi, double q,
                                 const std::vector<double>& r_grid = {});

// Geometric r-grid 1 - 10^{-k}, k = 1..6, used by default.
std::vector<double> default_radial_grid();

}  // namespace innerlab
