#pragma once

#include <vector>

#include "innerlab/inner_function.hpp"
#include "innerlab/measures.hpp"

namespace innerlab {

struct CriticalPoint {
    Complex point;
    int multiplicity = 1;
};

// Interior critical points of a finite Blaschke product of degree d >= 2,
// counted with multiplicity (total d-1).  Repeated zeros contribute their
// exact multiplicity-minus-one critical point; the remaining simple-zero
// interactions come from the reduced numerator of B'/B, solved by
// simultaneous iteration and clustered at 1e-6.  The roots outside the disk
// are checked to be the reflections 1/conj(c) of the interior ones.
std::vector<CriticalPoint> critical_points(const BlaschkeProduct& b);

// Atom weights for the critical measure: the default 1-|c|, or the Green
// weight log(1/|c|) used when tracking escaping critical structure.
enum class CriticalWeight { OneMinusModulus, Green };

// Measure sum_c w(c) mult(c) delta_c over interior critical points.
DiskMeasure critical_measure(const BlaschkeProduct& b,
                             CriticalWeight weight = CriticalWeight::OneMinusModulus);

// Pushforward of the critical measure under B: atoms at the critical values.
DiskMeasure critical_value_measure(const BlaschkeProduct& b,
                                   CriticalWeight weight = CriticalWeight::OneMinusModulus);

// The Blaschke product whose zeros are the critical points of b (degree d-1).
BlaschkeProduct derivative_inner_part(const BlaschkeProduct& b);

struct EntropyResult {
    double value = 0.0;
    bool accuracy_warning = false;  // a zero within 1e-6 of the circle
};

// Trapezoidal quadrature of log|B'| over the circle against dm, n nodes.
EntropyResult entropy(const BlaschkeProduct& b, std::size_t quadrature_n);

// Green's function of the disk, log|1 - conj(p) z| - log|z - p|.
double green_disk(const Complex& p, const Complex& z);

// |log|B'(z)| - (harmonic extension of log|B'| at z - sum_c mult(c) G(z,c))|.
// z must stay away from the critical points (the left side has a log pole).
double jensen_residual(const BlaschkeProduct& b, const Complex& z, std::size_t quadrature_n);

}  // namespace innerlab
