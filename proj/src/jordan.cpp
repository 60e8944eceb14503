#include "innerlab/jordan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace innerlab {

namespace {

bool segments_cross(const Complex& a, const Complex& b, const Complex& c, const Complex& d) {
    auto orient = [](const Complex& p, const Complex& q, const Complex& r) {
        double v = (q.real() - p.real()) * (r.imag() - p.imag()) -
                   (q.imag() - p.imag()) * (r.real() - p.real());
        return v > 0 ? 1 : (v < 0 ? -1 : 0);
    };
    int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
    return o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0;
}

}  // namespace

double segment_distance(const Complex& z, const Complex& a, const Complex& b, Complex* closest) {
    Complex ab = b - a;
    double len2 = std::norm(ab);
    double t = len2 > 0.0 ? std::clamp(((z - a) * std::conj(ab)).real() / len2, 0.0, 1.0) : 0.0;
    Complex proj = a + t * ab;
    if (closest) *closest = proj;
    return std::abs(z - proj);
}

PolylineJordanDomain::PolylineJordanDomain(
    std::vector<Complex> vertices_, bool contained_in_disk_,
    std::vector<std::pair<std::size_t, std::size_t>> circle_arcs_)
    : vertices(std::move(vertices_)),
      contained_in_disk(contained_in_disk_),
      circle_arcs(std::move(circle_arcs_)) {
    const std::size_t n = vertices.size();
    if (n < 3) throw std::invalid_argument("PolylineJordanDomain: need >= 3 vertices");

    double area2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Complex& p = vertices[i];
        const Complex& q = vertices[(i + 1) % n];
        area2 += p.real() * q.imag() - q.real() * p.imag();
    }
    if (area2 <= 0.0)
        throw std::invalid_argument("PolylineJordanDomain: boundary must be positively oriented");

    if (contained_in_disk) {
        for (const Complex& v : vertices)
            if (std::abs(v) > 1.0 + 1e-9)
                throw std::invalid_argument("PolylineJordanDomain: vertex escapes the closed disk");
    }
    for (const auto& [first, last] : circle_arcs) {
        if (first >= last || last > n)
            throw std::invalid_argument("PolylineJordanDomain: bad circle-arc range");
        for (std::size_t i = first; i <= last && i < n; ++i)
            if (std::fabs(std::abs(vertices[i % n]) - 1.0) > 1e-9)
                throw std::invalid_argument(
                    "PolylineJordanDomain: circle-arc vertex off the unit circle");
    }

    // Self-intersection sweep over non-adjacent segment pairs (one-time cost).
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (segments_cross(vertices[i], vertices[(i + 1) % n], vertices[j],
                               vertices[(j + 1) % n]))
                throw std::invalid_argument("PolylineJordanDomain: boundary self-intersects");
        }
    }
}

bool PolylineJordanDomain::segment_on_circle(std::size_t i) const {
    for (const auto& [first, last] : circle_arcs)
        if (i >= first && i < last) return true;
    return false;
}

bool PolylineJordanDomain::contains(const Complex& z) const {
    // Ray cast along +x.
    bool inside = false;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Complex& p = vertices[i];
        const Complex& q = vertices[(i + 1) % n];
        if ((p.imag() > z.imag()) != (q.imag() > z.imag())) {
            double x_cross =
                p.real() + (z.imag() - p.imag()) * (q.real() - p.real()) / (q.imag() - p.imag());
            if (x_cross > z.real()) inside = !inside;
        }
    }
    return inside;
}

double PolylineJordanDomain::diameter() const {
    double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
    for (const Complex& v : vertices) {
        lo_x = std::min(lo_x, v.real());
        hi_x = std::max(hi_x, v.real());
        lo_y = std::min(lo_y, v.imag());
        hi_y = std::max(hi_y, v.imag());
    }
    return std::hypot(hi_x - lo_x, hi_y - lo_y);
}

PolylineJordanDomain PolylineJordanDomain::disk_polygon(std::size_t n) {
    std::vector<Complex> verts(n);
    for (std::size_t i = 0; i < n; ++i) verts[i] = unit(kTwoPi * double(i) / double(n));
    return PolylineJordanDomain(std::move(verts), true, {{0, n}});
}

PolylineJordanDomain PolylineJordanDomain::half_disk_upper(std::size_t arc_segments) {
    std::vector<Complex> verts;
    // Diameter from -1 to 1 (two segments through 0), then the upper arc.
    verts.push_back(Complex(-1.0, 0.0));
    verts.push_back(Complex(0.0, 0.0));
    verts.push_back(Complex(1.0, 0.0));
    for (std::size_t i = 1; i < arc_segments; ++i)
        verts.push_back(unit(kPi * double(i) / double(arc_segments)));
    std::size_t n = verts.size();
    // Segments 2..n-1 run along the arc, including the closing one back to -1.
    return PolylineJordanDomain(std::move(verts), true, {{2, n}});
}

PolylineJordanDomain PolylineJordanDomain::half_disk_right(std::size_t arc_segments) {
    std::vector<Complex> verts;
    verts.push_back(Complex(0.0, -1.0));
    for (std::size_t i = 1; i < arc_segments; ++i)
        verts.push_back(unit(-kPi / 2.0 + kPi * double(i) / double(arc_segments)));
    verts.push_back(Complex(0.0, 1.0));
    verts.push_back(Complex(0.0, 0.0));
    std::size_t n = verts.size();
    // Arc spans segments [0, arc_segments); the two diameter segments close it.
    return PolylineJordanDomain(std::move(verts), true, {{0, arc_segments}});
}

PolylineJordanDomain PolylineJordanDomain::circle_graph_domain(const std::vector<double>& h) {
    const std::size_t n = h.size();
    if (n < 16) throw std::invalid_argument("circle_graph_domain: need >= 16 samples");
    std::vector<Complex> verts(n);
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    for (std::size_t i = 0; i < n; ++i) {
        if (h[i] < 0.0 || h[i] > 0.5)
            throw std::invalid_argument("circle_graph_domain: need 0 <= h <= 1/2");
        verts[i] = (1.0 - h[i]) * unit(kTwoPi * double(i) / double(n));
    }
    // Segments whose both endpoints sit on the circle count as arcs.
    std::size_t run_start = n;
    for (std::size_t i = 0; i < n; ++i) {
        bool on = h[i] <= 1e-12 && h[(i + 1) % n] <= 1e-12;
        if (on && run_start == n) run_start = i;
        if (!on && run_start != n) {
            arcs.push_back({run_start, i});
            run_start = n;
        }
    }
    if (run_start != n) arcs.push_back({run_start, n});
    return PolylineJordanDomain(std::move(verts), true, std::move(arcs));
}

PolylineJordanDomain PolylineJordanDomain::square(double half_side, Complex center) {
    std::vector<Complex> verts{center + Complex(-half_side, -half_side),
                               center + Complex(half_side, -half_side),
                               center + Complex(half_side, half_side),
                               center + Complex(-half_side, half_side)};
    return PolylineJordanDomain(std::move(verts), false, {});
}

std::size_t BoundaryPartition::part_of(std::size_t segment, std::size_t segment_count) const {
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (const auto& [first, last] : parts[p].segment_ranges)
            if (segment >= first && segment < last) return p;
    (void)segment_count;
    throw std::invalid_argument("BoundaryPartition: segment not covered");
}

void BoundaryPartition::validate(std::size_t segment_count) const {
    std::vector<int> owner(segment_count, -1);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        for (const auto& [first, last] : parts[p].segment_ranges) {
            if (first >= last || last > segment_count)
                throw std::invalid_argument("BoundaryPartition: bad segment range");
            for (std::size_t s = first; s < last; ++s) {
                if (owner[s] >= 0)
                    throw std::invalid_argument("BoundaryPartition: overlapping parts");
                owner[s] = int(p);
            }
        }
    }
    for (std::size_t s = 0; s < segment_count; ++s)
        if (owner[s] < 0) throw std::invalid_argument("BoundaryPartition: uncovered segment");
}

BoundaryPartition BoundaryPartition::whole(std::size_t segment_count, std::string name) {
    BoundaryPartition bp;
    bp.parts.push_back({std::move(name), {{0, segment_count}}});
    return bp;
}

SegmentGrid::SegmentGrid(const PolylineJordanDomain& domain, std::size_t resolution) {
    const std::size_t n = domain.segment_count();
    starts_.resize(n);
    ends_.resize(n);
    double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
    for (std::size_t i = 0; i < n; ++i) {
        starts_[i] = domain.segment_start(i);
        ends_[i] = domain.segment_end(i);
        for (const Complex& v : {starts_[i], ends_[i]}) {
            lo_x = std::min(lo_x, v.real());
            hi_x = std::max(hi_x, v.real());
            lo_y = std::min(lo_y, v.imag());
            hi_y = std::max(hi_y, v.imag());
        }
    }
    double margin = 0.05 * std::max(hi_x - lo_x, hi_y - lo_y) + 1e-9;
    x0_ = lo_x - margin;
    y0_ = lo_y - margin;
    double w = (hi_x - lo_x) + 2.0 * margin, h = (hi_y - lo_y) + 2.0 * margin;
    cell_ = std::max(w, h) / double(resolution);
    nx_ = std::size_t(std::ceil(w / cell_)) + 1;
    ny_ = std::size_t(std::ceil(h / cell_)) + 1;
    bins_.assign(nx_ * ny_, {});
    for (std::size_t i = 0; i < n; ++i) {
        double sx0 = std::min(starts_[i].real(), ends_[i].real());
        double sx1 = std::max(starts_[i].real(), ends_[i].real());
        double sy0 = std::min(starts_[i].imag(), ends_[i].imag());
        double sy1 = std::max(starts_[i].imag(), ends_[i].imag());
        long cx0 = long((sx0 - x0_) / cell_), cx1 = long((sx1 - x0_) / cell_);
        long cy0 = long((sy0 - y0_) / cell_), cy1 = long((sy1 - y0_) / cell_);
        for (long cy = std::max(0L, cy0); cy <= std::min(long(ny_) - 1, cy1); ++cy)
            for (long cx = std::max(0L, cx0); cx <= std::min(long(nx_) - 1, cx1); ++cx)
                bins_[std::size_t(cy) * nx_ + std::size_t(cx)].push_back(std::uint32_t(i));
    }

    // Per-cell lower bound: every boundary point lies in some occupied bin,
    // so the distance from a cell center to the nearest occupied-bin center,
    // minus one cell diagonal per side, can only undershoot the truth.
    std::vector<std::pair<double, double>> occupied;
    for (std::size_t cy = 0; cy < ny_; ++cy)
        for (std::size_t cx = 0; cx < nx_; ++cx)
            if (!bins_[cy * nx_ + cx].empty())
                occupied.push_back({(double(cx) + 0.5) * cell_, (double(cy) + 0.5) * cell_});
    lower_bound_.assign(nx_ * ny_, 0.0f);
    const double slack = 1.5 * cell_;
    for (std::size_t cy = 0; cy < ny_; ++cy) {
        for (std::size_t cx = 0; cx < nx_; ++cx) {
            double px = (double(cx) + 0.5) * cell_, py = (double(cy) + 0.5) * cell_;
            double best = 1e300;
            for (const auto& [ox, oy] : occupied)
                best = std::min(best, std::hypot(px - ox, py - oy));
            lower_bound_[cy * nx_ + cx] = float(std::max(0.0, best - slack));
        }
    }
}

double SegmentGrid::distance_lower_bound(const Complex& z) const {
    long cx = long((z.real() - x0_) / cell_), cy = long((z.imag() - y0_) / cell_);
    if (cx < 0 || cy < 0 || cx >= long(nx_) || cy >= long(ny_)) return 0.0;
    return double(lower_bound_[std::size_t(cy) * nx_ + std::size_t(cx)]);
}

SegmentGrid::Hit SegmentGrid::scan_cell(long cx, long cy, const Complex& z, Hit best) const {
    if (cx < 0 || cy < 0 || cx >= long(nx_) || cy >= long(ny_)) return best;
    for (std::uint32_t s : bins_[std::size_t(cy) * nx_ + std::size_t(cx)]) {
        Complex closest;
        double d = segment_distance(z, starts_[s], ends_[s], &closest);
        if (d < best.distance) best = {d, s, closest};
    }
    return best;
}

SegmentGrid::Hit SegmentGrid::nearest(const Complex& z) const {
    Hit best{std::numeric_limits<double>::infinity(), 0, Complex(0.0, 0.0)};
    long cx = long((z.real() - x0_) / cell_), cy = long((z.imag() - y0_) / cell_);
    cx = std::clamp(cx, 0L, long(nx_) - 1);
    cy = std::clamp(cy, 0L, long(ny_) - 1);
    long max_ring = long(std::max(nx_, ny_));
    for (long ring = 0; ring <= max_ring; ++ring) {
        // Once a hit exists, rings beyond best/cell_ + 1 cannot improve it.
        if (std::isfinite(best.distance) && double(ring - 1) * cell_ > best.distance) break;
        if (ring == 0) {
            best = scan_cell(cx, cy, z, best);
            continue;
        }
        for (long dx = -ring; dx <= ring; ++dx) {
            best = scan_cell(cx + dx, cy - ring, z, best);
            best = scan_cell(cx + dx, cy + ring, z, best);
        }
        for (long dy = -ring + 1; dy < ring; ++dy) {
            best = scan_cell(cx - ring, cy + dy, z, best);
            best = scan_cell(cx + ring, cy + dy, z, best);
        }
    }
    return best;
}

}  // namespace innerlab
