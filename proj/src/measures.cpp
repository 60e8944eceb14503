#include "innerlab/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace innerlab {

namespace {

const double kInf = std::numeric_limits<double>::infinity();

}  // namespace

CircleMeasure::CircleMeasure(std::vector<Atom> atoms_, std::vector<double> density_)
    : atoms(std::move(atoms_)), density(std::move(density_)) {
    for (Atom& a : atoms) {
        if (!(a.mass > 0.0) || !std::isfinite(a.mass))
            throw std::invalid_argument("CircleMeasure: atom masses must be positive");
        a.theta = wrap_angle(a.theta);
    }
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& l, const Atom& r) { return l.theta < r.theta; });
    for (double v : density) {
        if (v < 0.0 || !std::isfinite(v))
            throw std::invalid_argument("CircleMeasure: density values must be >= 0");
    }
}

CircleMeasure CircleMeasure::point_mass(double theta, double mass) {
    return CircleMeasure({{theta, mass}});
}

CircleMeasure CircleMeasure::lebesgue(std::size_t cells, double total) {
    return CircleMeasure({}, std::vector<double>(cells, total));
}

double CircleMeasure::total_mass() const {
    double m = 0.0;
    for (const Atom& a : atoms) m += a.mass;
    if (!density.empty()) {
        double d = 0.0;
        for (double v : density) d += v;
        m += d / double(density.size());
    }
    return m;
}

double CircleMeasure::arc_mass(double x, double eps) const {
    if (eps <= 0.0) return 0.0;
    if (eps >= kPi) eps = kPi;
    double m = 0.0;
    for (const Atom& a : atoms)
        if (angle_distance(a.theta, x) < eps) m += a.mass;
    if (!density.empty()) {
        // Integrate the piecewise-constant density over (x-eps, x+eps).
        const std::size_t n = density.size();
        const double cell = kTwoPi / double(n);
        double lo = x - eps, hi = x + eps;
        // Work on the lifted line and fold cell indices mod n.
        long first = (long)std::floor(lo / cell);
        long last = (long)std::floor(hi / cell);
        for (long c = first; c <= last; ++c) {
            double a = std::max(lo, double(c) * cell);
            double b = std::min(hi, double(c + 1) * cell);
            if (b <= a) continue;
            long idx = ((c % (long)n) + (long)n) % (long)n;
            m += density[idx] * (b - a) / kTwoPi;
        }
    }
    return m;
}

CircleMeasure CircleMeasure::scaled(double factor) const {
    CircleMeasure out = *this;
    for (Atom& a : out.atoms) a.mass *= factor;
    for (double& v : out.density) v *= factor;
    return out;
}

DiskMeasure::DiskMeasure(std::vector<Atom> atoms_) : atoms(std::move(atoms_)) {
    for (const Atom& a : atoms) {
        if (!(a.mass > 0.0) || !std::isfinite(a.mass))
            throw std::invalid_argument("DiskMeasure: atom masses must be positive");
        if (std::abs(a.point) > 1.0 + 1e-9)
            throw std::invalid_argument("DiskMeasure: atoms must lie in the closed disk");
    }
}

DiskMeasure DiskMeasure::point_mass(const Complex& z, double mass) {
    return DiskMeasure({{z, mass}});
}

double DiskMeasure::total_mass() const {
    double m = 0.0;
    for (const Atom& a : atoms) m += a.mass;
    return m;
}

BeurlingCarlesonSet::BeurlingCarlesonSet(std::vector<Arc> arcs) : complement_arcs(std::move(arcs)) {
    double total = 0.0;
    for (Arc& a : complement_arcs) {
        if (!(a.end > a.start) || a.end - a.start > kTwoPi + 1e-12)
            throw std::invalid_argument("BeurlingCarlesonSet: bad arc bounds");
        total += a.end - a.start;
    }
    if (std::fabs(total - kTwoPi) > 1e-9)
        throw std::invalid_argument("BeurlingCarlesonSet: complement must have full measure");
    std::sort(complement_arcs.begin(), complement_arcs.end(),
              [](const Arc& l, const Arc& r) { return wrap_angle(l.start) < wrap_angle(r.start); });
    for (std::size_t i = 0; i + 1 < complement_arcs.size(); ++i) {
        double gap = wrap_angle(complement_arcs[i + 1].start) -
                     wrap_angle(complement_arcs[i].start) -
                     (complement_arcs[i].end - complement_arcs[i].start);
        if (gap < -1e-9)
            throw std::invalid_argument("BeurlingCarlesonSet: overlapping arcs");
    }
}

std::vector<double> BeurlingCarlesonSet::endpoint_angles() const {
    std::vector<double> pts;
    for (const Arc& a : complement_arcs) {
        pts.push_back(wrap_angle(a.start));
        pts.push_back(wrap_angle(a.end));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](double l, double r) { return std::fabs(l - r) < 1e-14; }),
              pts.end());
    return pts;
}

double BeurlingCarlesonSet::distance(double theta) const {
    double best = kInf;
    for (const Arc& a : complement_arcs) {
        best = std::min(best, chord_distance(theta, a.start));
        best = std::min(best, chord_distance(theta, a.end));
    }
    return best;
}

BeurlingCarlesonSet finite_circle_set(std::vector<double> angles) {
    if (angles.empty()) throw std::invalid_argument("finite_circle_set: empty set");
    for (double& a : angles) a = wrap_angle(a);
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
    std::vector<BeurlingCarlesonSet::Arc> arcs;
    for (std::size_t i = 0; i < angles.size(); ++i) {
        double start = angles[i];
        double end = (i + 1 < angles.size()) ? angles[i + 1] : angles[0] + kTwoPi;
        arcs.push_back({start, end});
    }
    return BeurlingCarlesonSet(arcs);
}

double poisson_extension(const CircleMeasure& mu, const Complex& z) {
    if (std::abs(z) >= 1.0) throw std::domain_error("poisson_extension: |z| must be < 1");
    double value = 0.0;
    for (const auto& a : mu.atoms) value += a.mass * poisson_kernel(z, unit(a.theta));
    const std::size_t n = mu.cells();
    for (std::size_t j = 0; j < n; ++j) {
        if (mu.density[j] == 0.0) continue;
        double mid = kTwoPi * (double(j) + 0.5) / double(n);
        value += mu.density[j] * poisson_kernel(z, unit(mid)) / double(n);
    }
    return value;
}

double carleson_entropy(const BeurlingCarlesonSet& e) {
    double sum = 0.0;
    for (const auto& arc : e.complement_arcs) {
        double len = (arc.end - arc.start) / kTwoPi;
        if (len > 0.0) sum += len * std::log(1.0 / len);
    }
    return sum;
}

CircleMeasure log_distance_measure(const BeurlingCarlesonSet& e, std::size_t grid_n) {
    if (grid_n < 256) throw std::invalid_argument("log_distance_measure: grid_n must be >= 256");
    std::vector<double> density(grid_n, 0.0);
    for (std::size_t j = 0; j < grid_n; ++j) {
        double mid = kTwoPi * (double(j) + 0.5) / double(grid_n);
        double d = e.distance(mid);
        density[j] = d < 1.0 ? std::log(1.0 / d) : 0.0;
    }
    return CircleMeasure({}, density);
}

double maximal_ratio(const CircleMeasure& mu, const CircleMeasure& nu, double x, double eps_min) {
    if (!(eps_min > 0.0)) throw std::invalid_argument("maximal_ratio: eps_min must be > 0");
    // Candidate arcs (x - s, x + t), endpoints on a uniform grid refined to
    // eps_min, extended by the atom offsets of both measures.
    // Candidate endpoints: one-sided offsets from x, strictly positive so the
    // (open) arc always contains x; offsets may exceed pi, the length cap
    // below keeps the arc a proper subset of the circle.
    const double min_len = eps_min * kTwoPi;  // normalized |I| -> radians
    const double lo = std::max(min_len / 8.0, 1e-9);
    std::set<double> offsets;
    const int coarse = 64;
    for (int i = 1; i <= coarse; ++i) offsets.insert((kTwoPi - lo) * double(i) / double(coarse));
    const int fine = 128;
    for (int i = 0; i <= fine; ++i)
        offsets.insert(lo * std::pow((kTwoPi - lo) / lo, double(i) / double(fine)));
    auto note_atoms = [&](const CircleMeasure& m) {
        for (const auto& a : m.atoms) {
            double d = angle_distance(a.theta, x);
            for (double v : {d - 1e-9, d + 1e-9, kTwoPi - d - 1e-9, kTwoPi - d + 1e-9})
                if (v > 0.0 && v < kTwoPi) offsets.insert(v);
        }
    };
    note_atoms(mu);
    note_atoms(nu);

    std::vector<double> side(offsets.begin(), offsets.end());
    double best = kInf;
    bool any = false;
    for (double s : side) {
        for (double t : side) {
            double len = (s + t) / kTwoPi;  // normalized length
            if (len < eps_min || len > 1.0) continue;
            // Arc (x - s, x + t) assembled around its midpoint.
            double num = mu.arc_mass(x - s / 2.0 + t / 2.0, (s + t) / 2.0);
            double den = nu.arc_mass(x - s / 2.0 + t / 2.0, (s + t) / 2.0);
            if (den <= 0.0) continue;
            any = true;
            best = std::min(best, num / den);
        }
    }
    if (!any) throw std::domain_error("maximal_ratio: denominator vanished on every candidate arc");
    return best;
}

double inverse_mass_integral(const CircleMeasure& mu, double x, std::size_t eps_grid) {
    if (eps_grid < 100) throw std::invalid_argument("inverse_mass_integral: need >= 100 nodes");
    const double eps_lo = 1e-6, eps_hi = 1.0;
    std::set<double> nodes;
    for (std::size_t i = 0; i < eps_grid; ++i) {
        double t = double(i) / double(eps_grid - 1);
        nodes.insert(eps_lo * std::pow(eps_hi / eps_lo, t));
    }
    // Atom distances are jump points of eps -> mu(x, eps); sampling both sides
    // makes the trapezoid rule exact on purely atomic measures.
    for (const auto& a : mu.atoms) {
        double d = angle_distance(a.theta, x);
        for (double v : {d - 1e-12, d + 1e-12})
            if (v > eps_lo && v < eps_hi) nodes.insert(v);
    }
    std::vector<double> eps(nodes.begin(), nodes.end());
    std::vector<double> integrand(eps.size());
    for (std::size_t i = 0; i < eps.size(); ++i) {
        double m = mu.arc_mass(x, eps[i]);
        if (m <= 0.0) return kInf;
        integrand[i] = 1.0 / m;
    }
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < eps.size(); ++i)
        total += 0.5 * (integrand[i] + integrand[i + 1]) * (eps[i + 1] - eps[i]);
    // The [0, eps_lo) head is covered by the smallest sampled arc mass.
    total += eps_lo * integrand[0];
    return total;
}

bool arc_mass_dominates(const CircleMeasure& mu, const CircleMeasure& nu, double x,
                        std::size_t eps_grid) {
    if (eps_grid < 100) throw std::invalid_argument("arc_mass_dominates: need >= 100 nodes");
    std::set<double> samples;
    for (std::size_t i = 0; i < eps_grid; ++i) {
        double t = double(i) / double(eps_grid - 1);
        samples.insert(1e-6 * std::pow(kPi / 1e-6, t));
    }
    auto note = [&](const CircleMeasure& m) {
        for (const auto& a : m.atoms) {
            double d = angle_distance(a.theta, x);
            for (double shift : {-1e-9, 1e-9}) {
                double v = d + shift;
                if (v > 0.0 && v <= kPi) samples.insert(v);
            }
        }
        if (!m.density.empty()) {
            double cell = kTwoPi / double(m.density.size());
            for (std::size_t j = 0; j <= m.density.size(); ++j) {
                double d = angle_distance(cell * double(j), x);
                if (d > 0.0 && d <= kPi) samples.insert(d);
            }
        }
    };
    note(mu);
    note(nu);
    for (double eps : samples)
        if (mu.arc_mass(x, eps) < nu.arc_mass(x, eps) - 1e-15) return false;
    return true;
}

DiskMeasure pushforward_radial(const InnerFunctionRep& f, const DiskMeasure& mu, double radial_r) {
    if (!(radial_r > 0.0 && radial_r < 1.0))
        throw std::invalid_argument("pushforward_radial: radial_r must lie in (0,1)");
    std::vector<DiskMeasure::Atom> out;
    out.reserve(mu.atoms.size());
    for (const auto& a : mu.atoms) {
        Complex z = a.point;
        if (std::abs(z) >= 1.0) z *= radial_r / std::abs(z);
        out.push_back({f(z), a.mass});
    }
    return DiskMeasure(out);
}

}  // namespace innerlab
