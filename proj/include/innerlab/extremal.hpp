#pragma once

#include <cstdint>
#include <vector>

#include "innerlab/thickness.hpp"

namespace innerlab {

// Node-centered raster of a conformal rectangle.  Nodes carry a mask bit and
// a side label; sides A and B are the two "horizontal" boundary parts the
// connecting curve family joins, everything else is reflecting.
struct GridDomain {
    enum class Side : std::uint8_t { None = 0, A = 1, B = 2 };

    double delta = 0.0;          // node spacing
    std::size_t cols = 0, rows = 0;
    std::vector<std::uint8_t> mask;   // cols*rows, 1 = inside
    std::vector<Side> side;           // cols*rows

    std::size_t at(std::size_t i, std::size_t j) const { return j * cols + i; }
    bool inside(std::size_t i, std::size_t j) const { return mask[at(i, j)] != 0; }

    void validate() const;  // connectivity and non-empty side marking
};

// Window of a strip graph domain rasterized with side A on the lower graph,
// side B on the upper graph, and the level columns at x1, x2 reflecting.
GridDomain rasterize_strip_window(const StripGraphDomain& u, double x1, double x2, double delta);

// Axis-aligned rectangle fixture (width x height), sides A/B on the long
// horizontal edges.
GridDomain rectangle_grid(double width, double height, double delta);

// Modulus of the curve family connecting sides A and B: the Dirichlet energy
// of the potential with u = 0 on A, u = 1 on B and reflecting sides, computed
// with dual-cell edge weights (exact on rectangles) and a Jacobi-
// preconditioned conjugate gradient capped at 1e5 iterations.
double modulus(const GridDomain& g);

// Rodin-Warschawski criterion: excess Mod U(x1,x2) - (x2-x1) per window,
// with the same trend verdict logic as the area criterion.
ThickVerdict rw_criterion(const StripGraphDomain& u,
                          const std::vector<std::pair<double, double>>& windows, double tol,
                          double delta = 1.0 / 64.0);

// Per-window excesses, for reporting.
std::vector<double> rw_excesses(const StripGraphDomain& u,
                                const std::vector<std::pair<double, double>>& windows,
                                double delta = 1.0 / 64.0);

}  // namespace innerlab
