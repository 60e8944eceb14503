#include "innerlab/clark.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace innerlab {

ClarkPushforward clark_pushforward(const PolylineJordanDomain& omega, const MapOracle& map_inverse,
                                   const Complex& phi0, const CircleMeasure& mu,
                                   std::size_t n_walks, std::uint64_t seed) {
    if (!omega.contains(phi0))
        throw std::domain_error("clark_pushforward: phi(0) must be interior");

    ClarkPushforward out;

    // Circle contact set of the domain record, as angle intervals.
    struct ArcInterval {
        double lo, hi;  // lo <= hi on the lifted line
    };
    std::vector<ArcInterval> contact;
    for (const auto& [first, last] : omega.circle_arcs) {
        for (std::size_t s = first; s < last; ++s) {
            double a = wrap_angle(std::arg(omega.segment_start(s)));
            double b = wrap_angle(std::arg(omega.segment_end(s)));
            if (b < a) b += kTwoPi;
            contact.push_back({a, b});
        }
    }
    auto on_contact = [&](double theta) {
        double t = wrap_angle(theta);
        for (const ArcInterval& arc : contact) {
            if (t >= arc.lo - 1e-12 && t <= arc.hi + 1e-12) return true;
            if (t + kTwoPi >= arc.lo - 1e-12 && t + kTwoPi <= arc.hi + 1e-12) return true;
        }
        return false;
    };

    // Boundary part: atoms and density cells of mu supported on the contact
    // set, reweighted by the radial derivative of psi (0 at thin points).
    // Without a map oracle the boundary derivatives cannot be estimated and
    // the part is reported unavailable rather than guessed from walk data.
    const bool oracle_usable = bool(map_inverse.map);
    auto radial_weight = [&](double theta) {
        double w = angular_derivative_radial(map_inverse, theta);
        if (!std::isfinite(w))
            throw std::domain_error(
                "clark_pushforward: radial quotient diverged; the oracle must map omega into the disk");
        return w;
    };
    std::vector<CircleMeasure::Atom> boundary_atoms;
    for (const auto& atom : mu.atoms) {
        if (!on_contact(atom.theta)) continue;
        if (!oracle_usable) {
            out.boundary_available = false;
            continue;
        }
        double w = radial_weight(atom.theta);
        if (w > 0.0) boundary_atoms.push_back({atom.theta, atom.mass * w});
    }
    std::vector<double> boundary_density;
    if (!mu.density.empty()) {
        boundary_density.assign(mu.density.size(), 0.0);
        for (std::size_t j = 0; j < mu.density.size(); ++j) {
            if (mu.density[j] == 0.0) continue;
            double mid = kTwoPi * (double(j) + 0.5) / double(mu.density.size());
            if (!on_contact(mid)) continue;
            if (!oracle_usable) {
                out.boundary_available = false;
                continue;
            }
            boundary_density[j] = mu.density[j] * radial_weight(mid);
        }
    }
    out.boundary = CircleMeasure(std::move(boundary_atoms), std::move(boundary_density));

    // Interior part: walk-on-spheres from phi(0), each absorption on a
    // non-circle segment weighted by the Poisson extension of mu there.
    // Each maximal run of interior segments becomes its own part, so the
    // per-part weighted means are the masses the runs receive.
    std::vector<std::pair<std::size_t, std::size_t>> interior_ranges;
    {
        std::size_t nseg = omega.segment_count();
        std::size_t run_start = nseg;
        for (std::size_t s = 0; s <= nseg; ++s) {
            bool interior_seg = s < nseg && !omega.segment_on_circle(s);
            if (interior_seg && run_start == nseg) run_start = s;
            if (!interior_seg && run_start != nseg) {
                interior_ranges.push_back({run_start, s});
                run_start = nseg;
            }
        }
    }
    if (interior_ranges.empty()) {
        out.used_walks = false;
        return out;
    }

    BoundaryPartition parts;
    for (std::size_t r = 0; r < interior_ranges.size(); ++r)
        parts.parts.push_back({"interior" + std::to_string(r), {interior_ranges[r]}});
    if (!omega.circle_arcs.empty()) parts.parts.push_back({"circle", omega.circle_arcs});

    auto weight = [&](const Complex& b, std::size_t segment) {
        if (omega.segment_on_circle(segment)) return 0.0;
        Complex z = b;
        if (std::abs(z) >= 1.0) z *= (1.0 - 1e-12) / std::abs(z);
        return poisson_extension(mu, z);
    };
    WosStats stats = wos_run(omega, phi0, parts, n_walks, seed, weight);
    out.used_walks = true;
    out.interior_total = stats.weighted_mean;
    out.interior_sigma = stats.weighted_sigma;

    std::vector<DiskMeasure::Atom> interior_atoms;
    for (std::size_t r = 0; r < interior_ranges.size(); ++r) {
        auto [first, last] = interior_ranges[r];
        std::size_t mid_segment = first + (last - first) / 2;
        Complex mid = 0.5 * (omega.segment_start(mid_segment) + omega.segment_end(mid_segment));
        if (stats.part_weight_mean[r] > 0.0)
            interior_atoms.push_back({mid, stats.part_weight_mean[r]});
    }
    if (!interior_atoms.empty()) out.interior = DiskMeasure(std::move(interior_atoms));
    return out;
}

}  // namespace innerlab
