#include "innerlab/components.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <stdexcept>

#include "innerlab/parallel.hpp"

namespace innerlab {

RoundDisk::RoundDisk(Complex center_, double radius_) : center(center_), radius(radius_) {
    if (!(radius > 0.0) || std::abs(center) + radius >= 1.0)
        throw std::invalid_argument("RoundDisk: must be compactly contained in the unit disk");
}

namespace {

struct LevelGrid {
    std::size_t res;
    std::vector<double> g;  // res*res, level function per node

    double coord(std::size_t i) const { return -1.0 + 2.0 * double(i) / double(res - 1); }
    Complex node(std::size_t i, std::size_t j) const { return {coord(i), coord(j)}; }
    double at(std::size_t i, std::size_t j) const { return g[j * res + i]; }
};

LevelGrid evaluate_level(const BlaschkeProduct& b, const RoundDisk& v, std::size_t res) {
    LevelGrid grid{res, std::vector<double>(res * res, 1.0)};
    parallel_chunks(res, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) {
            for (std::size_t i = 0; i < res; ++i) {
                Complex z = grid.node(i, j);
                // Outside the closed disk the level is positive anyway.
                grid.g[j * res + i] =
                    std::abs(z) >= 1.0 ? 1.0 : std::abs(b(z) - v.center) - v.radius;
            }
        }
    });
    return grid;
}

// Crossing point on a grid edge by linear interpolation; edges are keyed
// 2*(j*res+i) for horizontal (i,j)-(i+1,j) and +1 for vertical (i,j)-(i,j+1).
struct Crossings {
    const LevelGrid& grid;

    Complex horizontal(std::size_t i, std::size_t j) const {
        double a = grid.at(i, j), b = grid.at(i + 1, j);
        double t = a / (a - b);
        return {grid.coord(i) + t * (grid.coord(i + 1) - grid.coord(i)), grid.coord(j)};
    }
    Complex vertical(std::size_t i, std::size_t j) const {
        double a = grid.at(i, j), b = grid.at(i, j + 1);
        double t = a / (a - b);
        return {grid.coord(i), grid.coord(j) + t * (grid.coord(j + 1) - grid.coord(j))};
    }
};

struct TraceSegment {
    std::size_t edge_a, edge_b;
};

// Marching squares over all cells; saddle cells decide by the center value.
std::vector<TraceSegment> march(const LevelGrid& grid) {
    std::vector<TraceSegment> segments;
    const std::size_t res = grid.res;
    auto h_edge = [&](std::size_t i, std::size_t j) { return 2 * (j * res + i); };
    auto v_edge = [&](std::size_t i, std::size_t j) { return 2 * (j * res + i) + 1; };

    for (std::size_t j = 0; j + 1 < res; ++j) {
        for (std::size_t i = 0; i + 1 < res; ++i) {
            bool bl = grid.at(i, j) < 0.0, br = grid.at(i + 1, j) < 0.0;
            bool tl = grid.at(i, j + 1) < 0.0, tr = grid.at(i + 1, j + 1) < 0.0;
            int config = int(bl) | (int(br) << 1) | (int(tl) << 2) | (int(tr) << 3);
            if (config == 0 || config == 15) continue;
            std::size_t bottom = h_edge(i, j), top = h_edge(i, j + 1);
            std::size_t left = v_edge(i, j), right = v_edge(i + 1, j);
            switch (config) {
                case 1: case 14: segments.push_back({bottom, left}); break;
                case 2: case 13: segments.push_back({bottom, right}); break;
                case 3: case 12: segments.push_back({left, right}); break;
                case 4: case 11: segments.push_back({left, top}); break;
                case 8: case 7: segments.push_back({right, top}); break;
                case 5: case 10: segments.push_back({bottom, top}); break;
                case 6: case 9: {
                    // Saddle: the center sample decides which diagonal pair of
                    // corners the negative region connects.
                    double center = 0.25 * (grid.at(i, j) + grid.at(i + 1, j) +
                                            grid.at(i, j + 1) + grid.at(i + 1, j + 1));
                    bool neg_connected = center < 0.0;
                    bool neg_on_br_tl = (config == 6);
                    if (neg_on_br_tl == neg_connected) {
                        // Curves hug the bl and tr corners.
                        segments.push_back({bottom, left});
                        segments.push_back({right, top});
                    } else {
                        segments.push_back({bottom, right});
                        segments.push_back({left, top});
                    }
                    break;
                }
                default: break;
            }
        }
    }
    return segments;
}

// Chains segments sharing crossing edges into closed loops of edge ids.
std::vector<std::vector<std::size_t>> stitch_loops(const std::vector<TraceSegment>& segments) {
    std::map<std::size_t, std::vector<std::size_t>> by_edge;  // edge id -> segment ids
    for (std::size_t s = 0; s < segments.size(); ++s) {
        by_edge[segments[s].edge_a].push_back(s);
        by_edge[segments[s].edge_b].push_back(s);
    }
    for (const auto& [edge, segs] : by_edge)
        if (segs.size() != 2)
            throw std::runtime_error("preimage_components: level curve is not a closed 1-manifold");

    std::vector<bool> used(segments.size(), false);
    std::vector<std::vector<std::size_t>> loops;
    for (std::size_t start = 0; start < segments.size(); ++start) {
        if (used[start]) continue;
        std::vector<std::size_t> loop;
        std::size_t seg = start, entry = segments[start].edge_a;
        while (!used[seg]) {
            used[seg] = true;
            std::size_t exit =
                segments[seg].edge_a == entry ? segments[seg].edge_b : segments[seg].edge_a;
            loop.push_back(exit);
            const auto& pair = by_edge[exit];
            seg = (pair[0] == seg) ? pair[1] : pair[0];
            entry = exit;
        }
        loops.push_back(std::move(loop));
    }
    return loops;
}

Complex edge_point(const Crossings& cross, std::size_t edge) {
    std::size_t cell = edge / 2, res = cross.grid.res;
    std::size_t i = cell % res, j = cell / res;
    return (edge % 2 == 0) ? cross.horizontal(i, j) : cross.vertical(i, j);
}

bool point_in_loop(const std::vector<Complex>& loop, const Complex& z) {
    bool inside = false;
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Complex& p = loop[i];
        const Complex& q = loop[(i + 1) % n];
        if ((p.imag() > z.imag()) != (q.imag() > z.imag())) {
            double x_cross =
                p.real() + (z.imag() - p.imag()) * (q.real() - p.real()) / (q.imag() - p.imag());
            if (x_cross > z.real()) inside = !inside;
        }
    }
    return inside;
}

}  // namespace

int winding_degree(const BlaschkeProduct& b, const RoundDisk& v,
                   const std::vector<Complex>& boundary) {
    double total = 0.0;
    const std::size_t n = boundary.size();
    Complex prev = b(boundary[0]) - v.center;
    if (std::abs(prev) < 1e-14)
        throw std::domain_error("winding_degree: boundary passes through the disk center image");
    for (std::size_t k = 1; k <= n; ++k) {
        Complex cur = b(boundary[k % n]) - v.center;
        total += std::arg(cur / prev);
        prev = cur;
    }
    double winding = total / kTwoPi;
    double nearest = std::round(winding);
    if (std::fabs(winding - nearest) > 1e-3)
        throw std::runtime_error("winding_degree: non-integer winding " + std::to_string(winding));
    return int(std::fabs(nearest));
}

std::vector<PreimageComponent> preimage_components(const BlaschkeProduct& b, const RoundDisk& v,
                                                   std::size_t grid_res) {
    if (grid_res < 512) throw std::invalid_argument("preimage_components: grid_res must be >= 512");
    const double margin = 2.0 / double(grid_res);

    std::vector<CriticalPoint> crit = critical_points(b);
    for (const auto& cp : crit) {
        double gap = std::fabs(v.boundary_gap(b(cp.point)));
        if (gap < margin)
            throw std::domain_error(
                "preimage_components: boundary of V passes near a critical value; perturb the "
                "radius by at least " +
                std::to_string(margin));
    }

    LevelGrid grid = evaluate_level(b, v, grid_res);
    Crossings cross{grid};
    std::vector<TraceSegment> segments = march(grid);
    if (segments.empty()) return {};
    std::vector<std::vector<std::size_t>> loops = stitch_loops(segments);

    // Flood fill the negative nodes; each blob should pair with one loop.
    std::vector<long> blob(grid_res * grid_res, -1);
    std::vector<Complex> blob_rep;
    for (std::size_t j = 0; j < grid_res; ++j) {
        for (std::size_t i = 0; i < grid_res; ++i) {
            if (grid.at(i, j) >= 0.0 || blob[j * grid_res + i] >= 0) continue;
            long id = long(blob_rep.size());
            blob_rep.push_back(grid.node(i, j));
            std::queue<std::pair<std::size_t, std::size_t>> frontier;
            frontier.push({i, j});
            blob[j * grid_res + i] = id;
            while (!frontier.empty()) {
                auto [ci, cj] = frontier.front();
                frontier.pop();
                const long di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
                for (int d = 0; d < 4; ++d) {
                    long ni = long(ci) + di[d], nj = long(cj) + dj[d];
                    if (ni < 0 || nj < 0 || ni >= long(grid_res) || nj >= long(grid_res)) continue;
                    std::size_t k = std::size_t(nj) * grid_res + std::size_t(ni);
                    if (blob[k] >= 0 || grid.g[k] >= 0.0) continue;
                    blob[k] = id;
                    frontier.push({std::size_t(ni), std::size_t(nj)});
                }
            }
        }
    }

    std::vector<PreimageComponent> out;
    std::vector<bool> blob_claimed(blob_rep.size(), false);
    for (const auto& loop_edges : loops) {
        PreimageComponent comp;
        comp.boundary.reserve(loop_edges.size());
        for (std::size_t e : loop_edges) comp.boundary.push_back(edge_point(cross, e));

        long owner = -1;
        for (std::size_t rep = 0; rep < blob_rep.size(); ++rep) {
            if (point_in_loop(comp.boundary, blob_rep[rep])) {
                owner = long(rep);
                break;
            }
        }
        if (owner < 0) continue;  // sub-cell sliver: no interior node resolved
        if (blob_claimed[std::size_t(owner)])
            throw std::runtime_error("preimage_components: two loops claim one component");
        blob_claimed[std::size_t(owner)] = true;
        comp.interior_point = blob_rep[std::size_t(owner)];

        for (const auto& cp : crit)
            if (v.contains(b(cp.point)) && point_in_loop(comp.boundary, cp.point))
                comp.critical_points_inside.push_back(cp);

        comp.touches_circle = false;
        for (const Complex& z : comp.boundary)
            if (std::abs(z) > 1.0 - 2.0 / double(grid_res)) comp.touches_circle = true;

        comp.degree = winding_degree(b, v, comp.boundary);
        // Every genuine component loop winds at least once around the target
        // center; a zero reading means the raster cannot resolve this island.
        if (comp.degree == 0)
            throw std::runtime_error(
                "preimage_components: sub-cell component detected; increase grid_res");
        out.push_back(std::move(comp));
    }

    for (std::size_t rep = 0; rep < blob_rep.size(); ++rep)
        if (!blob_claimed[rep])
            throw std::runtime_error("preimage_components: unclaimed preimage region on the grid");

    std::sort(out.begin(), out.end(), [](const PreimageComponent& l, const PreimageComponent& r) {
        if (l.interior_point.real() != r.interior_point.real())
            return l.interior_point.real() < r.interior_point.real();
        return l.interior_point.imag() < r.interior_point.imag();
    });
    return out;
}

IslandReport island_classify(const BlaschkeProduct& b, const RoundDisk& v, std::size_t grid_res) {
    IslandReport report;
    report.components = preimage_components(b, v, grid_res);

    DiskMeasure nu = critical_value_measure(b);
    double dist = 1e300;
    for (const auto& atom : nu.atoms) dist = std::min(dist, v.boundary_gap(atom.point));
    report.distance_to_critical_values = std::max(0.0, dist);

    report.simple_islands = !report.components.empty();
    for (const auto& comp : report.components)
        if (comp.degree != 1 || comp.touches_circle) report.simple_islands = false;
    return report;
}

double escaping_green_sum(const BlaschkeFamily& family, int n, const RoundDisk& v,
                          const Complex& p, double split_radius) {
    if (!(split_radius > 0.0 && split_radius < 1.0))
        throw std::invalid_argument("escaping_green_sum: split_radius must be in (0,1)");
    BlaschkeProduct b = family(n);
    double sum = 0.0;
    for (const auto& cp : critical_points(b)) {
        if (std::abs(cp.point) <= split_radius) continue;  // converging, not escaping
        if (!v.contains(b(cp.point))) continue;
        sum += double(cp.multiplicity) * green_disk(p, cp.point);
    }
    return sum;
}

}  // namespace innerlab
