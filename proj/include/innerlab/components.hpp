#pragma once

#include <functional>
#include <vector>

#include "innerlab/critical.hpp"
#include "innerlab/inner_function.hpp"

namespace innerlab {

// Round disk compactly contained in the unit disk.
struct RoundDisk {
    Complex center;
    double radius = 0.0;

    RoundDisk(Complex center_, double radius_);
    bool contains(const Complex& z) const { return std::abs(z - center) < radius; }
    // Signed distance of a point to the boundary circle (negative inside).
    double boundary_gap(const Complex& z) const { return std::abs(z - center) - radius; }
};

// One connected component of B^{-1}(V), traced as a closed polyline.
struct PreimageComponent {
    std::vector<Complex> boundary;            // closed, in trace order
    Complex interior_point;                   // a grid seed inside
    int degree = 0;                           // winding of (B - center)/radius
    std::vector<CriticalPoint> critical_points_inside;
    bool touches_circle = false;
};

// Marching-squares components of the level set |B - center| = radius over a
// grid_res x grid_res raster of [-1, 1]^2.  The boundary circle of V must
// avoid the critical values of B by 2/grid_res.
std::vector<PreimageComponent> preimage_components(const BlaschkeProduct& b, const RoundDisk& v,
                                                   std::size_t grid_res);

// Winding number of (B - center) along the traced boundary; throws when the
// accumulated angle is farther than 1e-3 from an integer multiple of 2 pi.
int winding_degree(const BlaschkeProduct& b, const RoundDisk& v,
                   const std::vector<Complex>& boundary);

struct IslandReport {
    bool simple_islands = false;           // every component conformal onto V
    double distance_to_critical_values = 0.0;  // dist(V, supp nu_B)
    std::vector<PreimageComponent> components;
};

// Lemma-style dichotomy check: positive distance to the critical-value
// support should force every component to be a degree-1 island.
IslandReport island_classify(const BlaschkeProduct& b, const RoundDisk& v,
                             std::size_t grid_res = 512);

// Family member indexed by n -> finite Blaschke product.
using BlaschkeFamily = std::function<BlaschkeProduct(int)>;

// Sum of G_disk(p, c) * multiplicity over critical points c of the n-th
// family member with |c| > split_radius and B(c) inside V.
double escaping_green_sum(const BlaschkeFamily& family, int n, const RoundDisk& v,
                          const Complex& p, double split_radius);

}  // namespace innerlab
