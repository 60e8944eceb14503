#include "innerlab/extremal.hpp"

#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace innerlab {

void GridDomain::validate() const {
    if (cols < 2 || rows < 2 || mask.size() != cols * rows || side.size() != mask.size())
        throw std::invalid_argument("GridDomain: inconsistent raster");
    std::size_t inside_count = 0, a_count = 0, b_count = 0, start = mask.size();
    for (std::size_t k = 0; k < mask.size(); ++k) {
        if (!mask[k]) {
            if (side[k] != Side::None)
                throw std::invalid_argument("GridDomain: side label outside the mask");
            continue;
        }
        ++inside_count;
        if (start == mask.size()) start = k;
        if (side[k] == Side::A) ++a_count;
        if (side[k] == Side::B) ++b_count;
    }
    if (inside_count == 0) throw std::invalid_argument("GridDomain: empty mask");
    if (a_count < 8 || b_count < 8)
        throw std::invalid_argument("GridDomain: each side must span >= 8 nodes");

    // Connectivity sweep.
    std::vector<std::uint8_t> seen(mask.size(), 0);
    std::queue<std::size_t> frontier;
    frontier.push(start);
    seen[start] = 1;
    std::size_t reached = 0;
    while (!frontier.empty()) {
        std::size_t k = frontier.front();
        frontier.pop();
        ++reached;
        std::size_t i = k % cols, j = k / cols;
        auto visit = [&](std::size_t ii, std::size_t jj) {
            std::size_t kk = jj * cols + ii;
            if (mask[kk] && !seen[kk]) {
                seen[kk] = 1;
                frontier.push(kk);
            }
        };
        if (i > 0) visit(i - 1, j);
        if (i + 1 < cols) visit(i + 1, j);
        if (j > 0) visit(i, j - 1);
        if (j + 1 < rows) visit(i, j + 1);
    }
    if (reached != inside_count) throw std::invalid_argument("GridDomain: mask is disconnected");
}

GridDomain rectangle_grid(double width, double height, double delta) {
    GridDomain g;
    g.delta = delta;
    g.cols = std::size_t(std::lround(width / delta)) + 1;
    g.rows = std::size_t(std::lround(height / delta)) + 1;
    g.mask.assign(g.cols * g.rows, 1);
    g.side.assign(g.cols * g.rows, GridDomain::Side::None);
    for (std::size_t i = 0; i < g.cols; ++i) {
        g.side[g.at(i, 0)] = GridDomain::Side::A;
        g.side[g.at(i, g.rows - 1)] = GridDomain::Side::B;
    }
    return g;
}

GridDomain rasterize_strip_window(const StripGraphDomain& u, double x1, double x2, double delta) {
    if (!(x1 < x2)) throw std::invalid_argument("rasterize_strip_window: need x1 < x2");
    GridDomain g;
    g.delta = delta;
    g.cols = std::size_t(std::lround((x2 - x1) / delta)) + 1;
    g.rows = std::size_t(std::lround(1.0 / delta)) + 1;
    g.mask.assign(g.cols * g.rows, 0);
    g.side.assign(g.cols * g.rows, GridDomain::Side::None);
    for (std::size_t i = 0; i < g.cols; ++i) {
        double x = x1 + double(i) * delta;
        double lo = -0.5 + u.h1(x), hi = 0.5 - u.h2(x);
        // Nearest-node rounding keeps the full rectangle when h < delta/2.
        long j_lo = std::lround((lo + 0.5) / delta);
        long j_hi = std::lround((hi + 0.5) / delta);
        j_lo = std::max(j_lo, 0L);
        j_hi = std::min(j_hi, long(g.rows) - 1L);
        for (long j = j_lo; j <= j_hi; ++j) g.mask[g.at(i, std::size_t(j))] = 1;
        g.side[g.at(i, std::size_t(j_lo))] = GridDomain::Side::A;
        g.side[g.at(i, std::size_t(j_hi))] = GridDomain::Side::B;
    }
    return g;
}

double modulus(const GridDomain& g) {
    g.validate();
    const std::size_t n = g.cols * g.rows;

    // Edge conductances from dual plaquettes: an edge bordered by two full
    // raster cells gets weight 1, a boundary edge gets 1/2.  This makes the
    // discrete energy of a linear potential on a rectangle exact.
    auto plaquette = [&](long i, long j) -> bool {
        if (i < 0 || j < 0 || i + 1 >= long(g.cols) || j + 1 >= long(g.rows)) return false;
        return g.inside(std::size_t(i), std::size_t(j)) &&
               g.inside(std::size_t(i + 1), std::size_t(j)) &&
               g.inside(std::size_t(i), std::size_t(j + 1)) &&
               g.inside(std::size_t(i + 1), std::size_t(j + 1));
    };
    struct Edge {
        std::size_t a, b;
        double w;
    };
    std::vector<Edge> edges;
    edges.reserve(2 * n);
    for (std::size_t j = 0; j < g.rows; ++j) {
        for (std::size_t i = 0; i < g.cols; ++i) {
            if (!g.inside(i, j)) continue;
            if (i + 1 < g.cols && g.inside(i + 1, j)) {
                double w = 0.5 * (double(plaquette(long(i), long(j) - 1)) +
                                  double(plaquette(long(i), long(j))));
                if (w > 0.0) edges.push_back({g.at(i, j), g.at(i + 1, j), w});
            }
            if (j + 1 < g.rows && g.inside(i, j + 1)) {
                double w = 0.5 * (double(plaquette(long(i) - 1, long(j))) +
                                  double(plaquette(long(i), long(j))));
                if (w > 0.0) edges.push_back({g.at(i, j), g.at(i, j + 1), w});
            }
        }
    }

    // Unknown numbering over masked, non-Dirichlet nodes.
    std::vector<long> index(n, -1);
    std::vector<double> fixed(n, 0.0);
    long unknowns = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (!g.mask[k]) continue;
        if (g.side[k] == GridDomain::Side::A)
            fixed[k] = 0.0;
        else if (g.side[k] == GridDomain::Side::B)
            fixed[k] = 1.0;
        else
            index[k] = unknowns++;
    }

    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(unknowns);
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(edges.size() * 4);
    for (const Edge& e : edges) {
        long ia = index[e.a], ib = index[e.b];
        if (ia >= 0) trip.emplace_back(ia, ia, e.w);
        if (ib >= 0) trip.emplace_back(ib, ib, e.w);
        if (ia >= 0 && ib >= 0) {
            trip.emplace_back(ia, ib, -e.w);
            trip.emplace_back(ib, ia, -e.w);
        } else if (ia >= 0) {
            rhs[ia] += e.w * fixed[e.b];
        } else if (ib >= 0) {
            rhs[ib] += e.w * fixed[e.a];
        }
    }

    Eigen::VectorXd solution;
    if (unknowns > 0) {
        Eigen::SparseMatrix<double> a(unknowns, unknowns);
        a.setFromTriplets(trip.begin(), trip.end());
        Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper,
                                 Eigen::DiagonalPreconditioner<double>>
            cg;
        cg.setMaxIterations(100000);
        cg.setTolerance(1e-10);
        cg.compute(a);
        solution = cg.solve(rhs);
        if (cg.info() != Eigen::Success)
            throw std::runtime_error("modulus: conjugate gradient did not converge");
    }

    auto value_at = [&](std::size_t k) { return index[k] >= 0 ? solution[index[k]] : fixed[k]; };
    double energy = 0.0;
    for (const Edge& e : edges) {
        double d = value_at(e.a) - value_at(e.b);
        energy += e.w * d * d;
    }
    return energy;
}

std::vector<double> rw_excesses(const StripGraphDomain& u,
                                const std::vector<std::pair<double, double>>& windows,
                                double delta) {
    std::vector<double> out;
    for (const auto& [a, b] : windows)
        out.push_back(modulus(rasterize_strip_window(u, a, b, delta)) - (b - a));
    return out;
}

ThickVerdict rw_criterion(const StripGraphDomain& u,
                          const std::vector<std::pair<double, double>>& windows, double tol,
                          double delta) {
    if (windows.size() < 2) throw std::invalid_argument("rw_criterion: need >= 2 windows");
    return trend_verdict(rw_excesses(u, windows, delta), tol);
}

}  // namespace innerlab
