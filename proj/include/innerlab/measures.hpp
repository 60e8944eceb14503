#pragma once

#include <vector>

#include "innerlab/geometry.hpp"
#include "innerlab/inner_function.hpp"

namespace innerlab {

// Positive measure on the unit circle: atoms plus a piecewise-constant density
// with respect to normalized Lebesgue measure dm = dtheta/2pi on a uniform
// angular grid (cell j covers [2pi j/N, 2pi (j+1)/N)).
struct CircleMeasure {
    struct Atom {
        double theta = 0.0;
        double mass = 0.0;
    };

    std::vector<Atom> atoms;            // sorted by theta
    std::vector<double> density;        // one value per cell, >= 0; empty = none

    CircleMeasure() = default;
    CircleMeasure(std::vector<Atom> atoms_, std::vector<double> density_ = {});

    static CircleMeasure point_mass(double theta, double mass = 1.0);
    static CircleMeasure lebesgue(std::size_t cells = 1, double total = 1.0);

    std::size_t cells() const { return density.size(); }
    double total_mass() const;

    // Mass of the open arc of angular radius eps around x (arc length 2 eps).
    double arc_mass(double x, double eps) const;

    CircleMeasure scaled(double factor) const;
};

// Finite positive measure on the closed unit disk, atoms only.
struct DiskMeasure {
    struct Atom {
        Complex point;
        double mass = 0.0;
    };

    std::vector<Atom> atoms;

    DiskMeasure() = default;
    explicit DiskMeasure(std::vector<Atom> atoms_);

    static DiskMeasure point_mass(const Complex& z, double mass = 1.0);

    double total_mass() const;
    bool empty() const { return atoms.empty(); }
};

// Closed measure-zero circle set described by its complementary open arcs,
// with normalized lengths |I_k| = arclength/2pi summing to 1.
struct BeurlingCarlesonSet {
    struct Arc {
        double start = 0.0;  // radians
        double end = 0.0;    // radians; end > start, end - start <= 2pi
    };

    std::vector<Arc> complement_arcs;

    BeurlingCarlesonSet() = default;
    explicit BeurlingCarlesonSet(std::vector<Arc> arcs);

    // The set itself, represented by the complementary arc endpoints.
    std::vector<double> endpoint_angles() const;

    // Chordal distance from a circle point to the set.
    double distance(double theta) const;
};

// Finite set of circle points -> Beurling-Carleson description.
BeurlingCarlesonSet finite_circle_set(std::vector<double> angles);

// P_mu(z) = sum_atoms mass (1-|z|^2)/|zeta-z|^2 + midpoint-rule density part.
double poisson_extension(const CircleMeasure& mu, const Complex& z);

// sum over complementary arcs of |I| log(1/|I|), normalized lengths.
double carleson_entropy(const BeurlingCarlesonSet& e);

// Density log^+(1/dist(zeta, E)) sampled at cell midpoints on a grid_n grid.
CircleMeasure log_distance_measure(const BeurlingCarlesonSet& e, std::size_t grid_n);

// Minimum of mu(I)/nu(I) over arcs I containing x with normalized length in
// [eps_min, 1], scanned over a discrete endpoint family.  Arcs with nu(I) = 0
// are skipped; if every candidate is skipped a domain error is thrown.
double maximal_ratio(const CircleMeasure& mu, const CircleMeasure& nu, double x, double eps_min);

// Log-spaced quadrature of eps -> 1/mu(I(x, eps)) over eps in [1e-6, 1]
// (radians).  Returns +infinity when mu vanishes at a sampled eps.
double inverse_mass_integral(const CircleMeasure& mu, double x, std::size_t eps_grid);

// True iff mu(I(x, eps)) >= nu(I(x, eps)) at every sampled eps in (0, pi];
// sampling is log-spaced plus points adjacent to every atom/cell breakpoint.
bool arc_mass_dominates(const CircleMeasure& mu, const CircleMeasure& nu, double x,
                        std::size_t eps_grid);

// Pushforward of a disk measure under the radial extension of F: interior
// atoms map through F directly, circle atoms through F(radial_r * zeta).
DiskMeasure pushforward_radial(const InnerFunctionRep& f, const DiskMeasure& mu, double radial_r);

// W1 transport distance between the mass-normalized measures plus the total
// mass gap; exact successive-shortest-path solver on the bipartite graph.
double weak_distance(const DiskMeasure& mu, const DiskMeasure& nu);

}  // namespace innerlab
