#pragma once

#include <string>
#include <vector>

#include "innerlab/geometry.hpp"

namespace innerlab {

// Simple closed polyline with positive orientation.  Segment i joins
// vertices[i] to vertices[(i+1) % n].  Segments that represent arcs of the
// unit circle are declared explicitly (their endpoints must lie on the
// circle within 1e-9); everything in between is ordinary interior boundary.
struct PolylineJordanDomain {
    std::vector<Complex> vertices;
    bool contained_in_disk = false;
    std::vector<std::pair<std::size_t, std::size_t>> circle_arcs;  // segment ranges [first, last)

    PolylineJordanDomain() = default;
    PolylineJordanDomain(std::vector<Complex> vertices_, bool contained_in_disk_ = false,
                         std::vector<std::pair<std::size_t, std::size_t>> circle_arcs_ = {});

    std::size_t segment_count() const { return vertices.size(); }
    Complex segment_start(std::size_t i) const { return vertices[i]; }
    Complex segment_end(std::size_t i) const { return vertices[(i + 1) % vertices.size()]; }
    bool segment_on_circle(std::size_t i) const;

    bool contains(const Complex& z) const;  // ray casting, boundary excluded
    double diameter() const;

    // Regular n-gon inscribed in the unit circle, every segment a circle arc.
    static PolylineJordanDomain disk_polygon(std::size_t n = 1000);

    // Upper or right half-disk: arc plus diameter, arc segments declared.
    static PolylineJordanDomain half_disk_upper(std::size_t arc_segments = 512);
    static PolylineJordanDomain half_disk_right(std::size_t arc_segments = 512);

    // {r zeta : r < 1 - h(zeta)} for a sampled circle graph h >= 0; segments
    // where h vanishes are declared circle arcs.
    static PolylineJordanDomain circle_graph_domain(const std::vector<double>& h);

    // Axis-aligned square fixture.
    static PolylineJordanDomain square(double half_side = 0.5, Complex center = {0.0, 0.0});
};

// Labeled partition of the boundary segments.
struct BoundaryPartition {
    struct Part {
        std::string name;
        std::vector<std::pair<std::size_t, std::size_t>> segment_ranges;  // [first, last)
    };
    std::vector<Part> parts;

    // Index of the part owning a segment; throws if the partition has gaps.
    std::size_t part_of(std::size_t segment, std::size_t segment_count) const;
    void validate(std::size_t segment_count) const;

    static BoundaryPartition whole(std::size_t segment_count, std::string name = "boundary");
};

// Uniform-grid nearest-segment accelerator for repeated distance queries.
class SegmentGrid {
  public:
    explicit SegmentGrid(const PolylineJordanDomain& domain, std::size_t resolution = 96);

    struct Hit {
        double distance;
        std::size_t segment;
        Complex closest;
    };
    Hit nearest(const Complex& z) const;

    // Safe lower bound on the boundary distance (never exceeds the true
    // distance); O(1) from a precomputed field, 0 near the boundary.
    double distance_lower_bound(const Complex& z) const;

  private:
    double cell_ = 0.0;
    double x0_ = 0.0, y0_ = 0.0;
    std::size_t nx_ = 0, ny_ = 0;
    std::vector<std::vector<std::uint32_t>> bins_;
    std::vector<float> lower_bound_;  // per cell
    std::vector<Complex> starts_, ends_;

    Hit scan_cell(long cx, long cy, const Complex& z, Hit best) const;
};

// Distance from a point to a segment, with the closest point.
double segment_distance(const Complex& z, const Complex& a, const Complex& b, Complex* closest);

}  // namespace innerlab
