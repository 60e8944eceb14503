#pragma once

#include <memory>
#include <vector>

#include "innerlab/critical.hpp"  // green_disk lives with the disk formulas
#include "innerlab/jordan.hpp"

namespace innerlab {

// Grid solution of -Lu = 2 pi delta_p with u = 0 on the domain boundary;
// boundary-cut (Shortley-Weller) arms keep the Dirichlet condition on the
// true polyline rather than the raster staircase.  Evaluating away from p
// approximates the Green's function G_omega(p, .).
class GreenField {
  public:
    GreenField(const PolylineJordanDomain& omega, const Complex& p, double delta);

    // Bilinear interpolation; throws if z falls outside the solved mask.
    double value(const Complex& z) const;
    bool covers(const Complex& z) const;
    double delta() const { return delta_; }

  private:
    double delta_ = 0.0;
    double x0_ = 0.0, y0_ = 0.0;
    std::size_t nx_ = 0, ny_ = 0;
    std::vector<double> values_;
    std::vector<std::uint8_t> inside_;

    std::size_t at(std::size_t i, std::size_t j) const { return j * nx_ + i; }
};

// Green's function of a Jordan domain via one grid solve per (omega, p).
// Requires p at least 4*delta inside; z must lie in the solved mask and at
// least 4*delta away from p.
double green_grid(const PolylineJordanDomain& omega, const Complex& p, const Complex& z,
                  double delta);

// G_omega(p, r zeta) / G_disk(p, r zeta) for each radius, via one grid solve.
// zeta is an angle; unit(zeta) must touch the domain boundary record.
std::vector<double> green_quotient_profile(const PolylineJordanDomain& omega, const Complex& p,
                                           double zeta, const std::vector<double>& radii,
                                           double delta = 1.0 / 200.0);

}  // namespace innerlab
