#pragma once

#include "innerlab/mobius.hpp"
#include "innerlab/thickness.hpp"

namespace innerlab {

// Closed-form conformal maps for the fixture domains.
//
// The upper half-disk maps to the disk through
//   s1 = (1+z)/(1-z)   (half-disk -> first quadrant)
//   s2 = s1^2          (quadrant -> upper half-plane)
//   s3 = (w-i)/(w+i)   (half-plane -> disk)
// and the right half-disk composes a quarter rotation in front.

Complex upper_half_disk_to_disk(const Complex& z);
Complex upper_half_disk_to_disk_derivative(const Complex& z);

Complex right_half_disk_to_disk(const Complex& z);
Complex right_half_disk_to_disk_derivative(const Complex& z);

// Interior point mapped to 0 by the right half-disk map: tan(pi/8).
Complex right_half_disk_center();

// Oracles wrapping the fixture maps for the thickness/composition machinery.
MapOracle oracle_identity();
MapOracle oracle_blaschke(const BlaschkeProduct& b);
MapOracle oracle_moebius(const Moebius& m);
MapOracle oracle_singular_atom(double theta, double mass = 1.0);
MapOracle oracle_right_half_disk_inverse();  // psi: right half-disk -> disk
MapOracle oracle_upper_half_disk_inverse();  // psi: upper half-disk -> disk

// Harmonic measure of the diameter of the upper half-disk seen from w.
double upper_half_disk_diameter_measure(const Complex& w);

}  // namespace innerlab
