#include "innerlab/thickness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace innerlab {

namespace {

const double kInf = std::numeric_limits<double>::infinity();
constexpr double kRaster = 1e-3;

}  // namespace

SampledFunction::SampledFunction(double x_min_, double x_max_, std::vector<double> values_)
    : x_min(x_min_), x_max(x_max_), values(std::move(values_)) {
    if (!(x_max > x_min) || values.size() < 2)
        throw std::invalid_argument("SampledFunction: need an increasing range and >= 2 samples");
}

SampledFunction SampledFunction::tabulate(double x_min, double x_max, std::size_t n,
                                          const std::function<double(double)>& f) {
    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i)
        vals[i] = f(x_min + (x_max - x_min) * double(i) / double(n - 1));
    return SampledFunction(x_min, x_max, std::move(vals));
}

double SampledFunction::operator()(double x) const {
    if (x <= x_min) return values.front();
    if (x >= x_max) return values.back();
    double t = (x - x_min) / step();
    std::size_t i = std::min<std::size_t>(std::size_t(t), values.size() - 2);
    double frac = t - double(i);
    return values[i] * (1.0 - frac) + values[i + 1] * frac;
}

StripGraphDomain::StripGraphDomain(SampledFunction h1_, SampledFunction h2_)
    : h1(std::move(h1_)), h2(std::move(h2_)) {
    for (const SampledFunction* h : {&h1, &h2})
        for (double v : h->values)
            if (v < 0.0 || v >= 1.0 / 6.0)
                throw std::invalid_argument("StripGraphDomain: graphs must satisfy 0 <= h < 1/6");
    if (h1.x_min != h2.x_min || h1.x_max != h2.x_max)
        throw std::invalid_argument("StripGraphDomain: graphs must share the sample range");
}

bool ApproachRegion::has_degenerate_samples() const {
    for (bool b : degenerate)
        if (b) return true;
    return false;
}

Complex MapOracle::boundary(const Complex& zeta) const {
    if (boundary_value) return boundary_value(zeta);
    throw std::domain_error("MapOracle: boundary value undeclared");
}

std::string to_string(ThickVerdict v) {
    switch (v) {
        case ThickVerdict::Thick: return "thick";
        case ThickVerdict::NotThick: return "not_thick";
        default: return "inconclusive";
    }
}

namespace {

// Upper envelope over the window of the squares hung from one graph: at
// column x, the tallest square side k*h(x0) among samples with
// |x - x0| <= k*h(x0)/2.  Squares never reach past 1/3, so the two graph
// envelopes cannot overlap and areas just add.
double envelope_area(const SampledFunction& h, double x1, double x2, double k) {
    std::size_t cols = std::size_t(std::ceil((x2 - x1) / kRaster));
    std::vector<double> env(cols, 0.0);
    for (std::size_t i = 0; i < h.size(); ++i) {
        double side = k * h.values[i];
        if (side <= 0.0) continue;
        double x0 = h.x_at(i);
        double lo = std::max(x1, x0 - side / 2.0);
        double hi = std::min(x2, x0 + side / 2.0);
        if (hi <= lo) continue;
        std::size_t a = std::size_t(std::max(0.0, std::floor((lo - x1) / kRaster)));
        std::size_t b = std::min(cols, std::size_t(std::ceil((hi - x1) / kRaster)));
        for (std::size_t c = a; c < b; ++c) {
            double xc = x1 + (double(c) + 0.5) * kRaster;
            if (xc < lo || xc > hi) continue;
            env[c] = std::max(env[c], side);
        }
    }
    double area = 0.0;
    for (double e : env) area += e * kRaster;
    return area;
}

}  // namespace

double strip_area_deficit(const StripGraphDomain& u, double x1, double x2, double k) {
    if (!(x1 < x2)) throw std::domain_error("strip_area_deficit: need x1 < x2");
    if (x1 < u.h1.x_min - 1e-12 || x2 > u.h1.x_max + 1e-12)
        throw std::domain_error("strip_area_deficit: window outside the sample range");
    if (k < 0.5 || k > 2.0) throw std::invalid_argument("strip_area_deficit: k must be in [1/2, 2]");
    return envelope_area(u.h1, x1, x2, k) + envelope_area(u.h2, x1, x2, k);
}

ThickVerdict trend_verdict(const std::vector<double>& values, double tol) {
    if (values.size() < 2) throw std::invalid_argument("trend_verdict: need >= 2 values");
    std::size_t tail = std::max<std::size_t>(2, values.size() / 3);
    bool below = true, above = true, nondecreasing = true;
    for (std::size_t i = values.size() - tail; i < values.size(); ++i) {
        below = below && values[i] < tol;
        above = above && values[i] > 10.0 * tol;
        // 0.8 slack absorbs raster quantization of a flat-or-growing series;
        // genuinely decaying families halve per window and fail it.
        if (i > values.size() - tail)
            nondecreasing = nondecreasing && values[i] >= values[i - 1] * 0.8;
    }
    if (below) return ThickVerdict::Thick;
    if (above && nondecreasing) return ThickVerdict::NotThick;
    return ThickVerdict::Inconclusive;
}

ThickVerdict is_thick_strip(const StripGraphDomain& u,
                            const std::vector<std::pair<double, double>>& windows, double tol) {
    if (windows.size() < 2) throw std::invalid_argument("is_thick_strip: need >= 2 windows");
    for (std::size_t i = 0; i + 1 < windows.size(); ++i)
        if (windows[i + 1].first < windows[i].first)
            throw std::invalid_argument("is_thick_strip: windows must increase toward x_max");

    std::vector<double> deficits;
    for (const auto& [a, b] : windows) deficits.push_back(strip_area_deficit(u, a, b, 2.0));
    return trend_verdict(deficits, tol);
}

StripIntegral strip_integral(const StripGraphDomain& u) {
    StripIntegral out;
    double step = u.h1.step();
    for (std::size_t i = 0; i + 1 < u.h1.size(); ++i) {
        double a = u.h1.values[i] + u.h2.values[i];
        double b = u.h1.values[i + 1] + u.h2.values[i + 1];
        out.value += 0.5 * (a + b) * step;
    }
    return out;
}

bool doubling_check(const SampledFunction& h, double c) {
    if (!(c > 0.0 && c <= 1.0)) throw std::invalid_argument("doubling_check: c must be in (0,1]");
    const double step = h.step();
    for (std::size_t j = 0; j < h.size(); ++j) {
        double reach = c * h.values[j];
        if (reach <= 0.0) continue;
        std::size_t span = std::size_t(std::ceil(reach / step));
        std::size_t lo = j >= span ? j - span : 0;
        std::size_t hi = std::min(h.size() - 1, j + span);
        for (std::size_t i = lo; i <= hi; ++i) {
            if (std::fabs(h.x_at(i) - h.x_at(j)) >= reach) continue;
            if (h.values[i] < c * h.values[j]) return false;
        }
    }
    return true;
}

double disk_thickness_integral(const std::vector<double>& h, double p) {
    const std::size_t n = h.size();
    if (n < 64) throw std::invalid_argument("disk_thickness_integral: need >= 64 samples");
    const double cell = kTwoPi / double(n);

    // Dyadic shells pi 2^{-m-1} <= |theta - p| < pi 2^{-m}, resolved down to a
    // few grid cells.  The head below the innermost shell is not resolvable;
    // it is replaced by a geometric extrapolation of the shell sums, and a
    // non-decaying trailing ratio flags a divergent integral.
    int depth = 0;
    while (kPi * std::pow(0.5, depth + 1) >= 8.0 * cell) ++depth;
    const double head = kPi * std::pow(0.5, depth + 1);

    std::vector<double> shell(std::size_t(depth) + 1, 0.0);
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double theta = cell * (double(j) + 0.5);
        double d = angle_distance(theta, p);
        if (d < head) continue;  // unresolved head, estimated below
        double value = h[j] / std::pow(chord_distance(theta, p), 2) * cell;
        total += value;  // |dzeta| = dtheta on the unit circle
        int m = std::min(depth, std::max(0, int(std::floor(-std::log2(d / kPi)))));
        shell[std::size_t(m)] += value;
    }

    if (depth >= 2) {
        double last = shell[std::size_t(depth)], prev = shell[std::size_t(depth) - 1];
        if (last > 1e-14) {
            double ratio = last / std::max(prev, 1e-300);
            if (ratio >= 0.9) return kInf;
            total += last * ratio / (1.0 - ratio);
        }
    }
    return total;
}

ApproachRegion measure_approach_region(const CircleMeasure& mu, double c,
                                       const SampledFunction& x_grid) {
    if (!(c > 0.0)) throw std::invalid_argument("measure_approach_region: c must be > 0");
    ApproachRegion region;
    region.symmetric = true;
    std::vector<double> f(x_grid.size(), 0.0);
    region.degenerate.assign(x_grid.size(), false);
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        double x = x_grid.x_at(i);
        if (x <= 0.0) {
            f[i] = 0.0;
            continue;
        }
        double mass = mu.arc_mass(0.0, x / 2.0);
        if (mass <= 0.0) {
            region.degenerate[i] = true;
            f[i] = x / 4.0;  // clamp value; flagged as degenerate
            continue;
        }
        f[i] = std::min(c * x * x / mass, x / 4.0);
    }
    region.f = SampledFunction(x_grid.x_min, x_grid.x_max, std::move(f));
    return region;
}

double approach_region_integral(const ApproachRegion& region) {
    // Map f to a circle graph at p = 0 via arclength and reuse the disk
    // criterion; samples beyond the grid keep the last value.
    const std::size_t n = 8192;
    std::vector<double> h(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double theta = kTwoPi * (double(j) + 0.5) / double(n);
        double dist = theta <= kPi ? theta : kTwoPi - theta;
        h[j] = region.f(std::min(dist, region.f.x_max));
    }
    return disk_thickness_integral(h, 0.0);
}

bool julia_check(const MapOracle& phi, double zeta, double m,
                 const std::vector<double>& c_grid_in, int samples) {
    if (!(m > 0.0)) throw std::invalid_argument("julia_check: M must be > 0");
    Complex zc = unit(zeta);
    Complex image = phi.boundary(zc);  // throws when undeclared

    std::vector<double> c_grid = c_grid_in;
    if (c_grid.empty()) c_grid = {0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0};

    for (double c : c_grid) {
        for (int i = 0; i < samples; ++i) {
            // Half-plane coordinates w = (zeta+z)/(zeta-z); the horoball at
            // level c is {Re w > c}.  Log-spaced offsets above level c plus a
            // fan of imaginary parts cover the horoball interior.
            double u = c * std::pow(10.0, -3.0 + 6.0 * double(i) / double(samples - 1));
            for (double vfrac : {0.0, 0.5, -0.5, 2.0, -2.0, 8.0, -8.0}) {
                Complex w(c + u, vfrac * (c + u));
                Complex z = zc * (w - 1.0) / (w + 1.0);
                if (std::abs(z) >= 1.0) continue;
                Complex fz = phi.map(z);
                double level = ((image + fz) / (image - fz)).real();
                if (level <= c / m - 1e-9) return false;
            }
        }
    }
    return true;
}

std::vector<double> default_radial_grid() {
    std::vector<double> grid;
    for (int k = 1; k <= 6; ++k) grid.push_back(1.0 - std::pow(10.0, -k));
    return grid;
}

double angular_derivative_radial(const MapOracle& phi, double q,
                                 const std::vector<double>& r_grid_in) {
    std::vector<double> r_grid = r_grid_in.empty() ? default_radial_grid() : r_grid_in;
    if (r_grid.size() < 3)
        throw std::invalid_argument("angular_derivative_radial: need >= 3 radii");
    Complex zq = unit(q);
    std::vector<double> eps, quot;
    for (double r : r_grid) {
        double value = (1.0 - std::abs(phi.map(r * zq))) / (1.0 - r);
        // Sentinel threshold 1e6 with a round-off guard: (1-|phi|)/(1-r) for a
        // divergent quotient lands within an ulp or two of 1/(1-r) itself.
        if (value >= 1e6 * (1.0 - 1e-9)) return kInf;
        eps.push_back(1.0 - r);
        quot.push_back(value);
    }
    // Second-order Richardson: quadratic through the last three nodes,
    // evaluated at eps = 0 (Neville form).
    std::size_t n = eps.size();
    double e0 = eps[n - 3], e1 = eps[n - 2], e2 = eps[n - 1];
    double q0 = quot[n - 3], q1 = quot[n - 2], q2 = quot[n - 1];
    double q01 = (q1 * e0 - q0 * e1) / (e0 - e1);
    double q12 = (q2 * e1 - q1 * e2) / (e1 - e2);
    return (q12 * e0 - q01 * e2) / (e0 - e2);
}

}  // namespace innerlab
