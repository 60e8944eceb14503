#pragma once

#include <vector>

#include "innerlab/geometry.hpp"

namespace innerlab {

// Coefficients in increasing degree order: p(z) = c[0] + c[1] z + ...
using Polynomial = std::vector<Complex>;

Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_sub(const Polynomial& p, const Polynomial& q);
Polynomial poly_scale(const Polynomial& p, const Complex& s);
Polynomial poly_derivative(const Polynomial& p);
Complex poly_eval(const Polynomial& p, const Complex& z);

// Trims (near-)zero leading coefficients relative to the largest coefficient.
Polynomial poly_trim(const Polynomial& p, double rel_tol = 1e-14);

// All complex roots by Aberth-Ehrlich simultaneous iteration with Newton
// polishing.  Deterministic: fixed initial configuration and sweep order.
// Throws std::runtime_error with residual diagnostics on non-convergence.
std::vector<Complex> find_roots(const Polynomial& p, int max_sweeps = 400);

// Groups points within tol into clusters; returns (centroid, count) pairs.
std::vector<std::pair<Complex, int>> cluster_points(const std::vector<Complex>& pts, double tol);

}  // namespace innerlab
