#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "innerlab/measures.hpp"

namespace innerlab {

namespace {

constexpr double kMassTol = 1e-15;

// Exact W1 between two probability vectors on point sets, solved as a dense
// transportation problem by successive shortest augmenting paths with
// potentials.  Each augmentation exhausts a source or a sink, so there are at
// most n+m phases; sizes here are atom lists, so dense Dijkstra is fine.
double transport_cost(const std::vector<Complex>& src, std::vector<double> supply,
                      const std::vector<Complex>& dst, std::vector<double> demand) {
    const std::size_t n = src.size(), m = dst.size();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> cost(n, std::vector<double>(m));
    std::vector<std::vector<double>> flow(n, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) cost[i][j] = std::abs(src[i] - dst[j]);

    std::vector<double> pot(n + m, 0.0);  // node potentials; sinks offset by n
    double remaining = 0.0;
    for (double s : supply) remaining += s;

    while (remaining > kMassTol) {
        std::vector<double> dist(n + m, inf);
        std::vector<int> parent(n + m, -1);
        std::vector<bool> done(n + m, false);
        for (std::size_t i = 0; i < n; ++i)
            if (supply[i] > kMassTol) dist[i] = 0.0;

        for (;;) {
            int u = -1;
            double best = inf;
            for (std::size_t k = 0; k < n + m; ++k)
                if (!done[k] && dist[k] < best) best = dist[k], u = int(k);
            if (u < 0) break;
            done[std::size_t(u)] = true;
            if (u < int(n)) {
                std::size_t i = std::size_t(u);
                for (std::size_t j = 0; j < m; ++j) {
                    double rc = cost[i][j] + pot[i] - pot[n + j];
                    if (rc < 0.0) rc = 0.0;
                    if (dist[i] + rc < dist[n + j]) {
                        dist[n + j] = dist[i] + rc;
                        parent[n + j] = u;
                    }
                }
            } else {
                std::size_t j = std::size_t(u) - n;
                for (std::size_t i = 0; i < n; ++i) {
                    if (flow[i][j] <= kMassTol) continue;
                    double rc = -cost[i][j] + pot[n + j] - pot[i];
                    if (rc < 0.0) rc = 0.0;
                    if (dist[n + j] + rc < dist[i]) {
                        dist[i] = dist[n + j] + rc;
                        parent[i] = u;
                    }
                }
            }
        }

        int sink = -1;
        double best = inf;
        for (std::size_t j = 0; j < m; ++j)
            if (demand[j] > kMassTol && dist[n + j] < best) best = dist[n + j], sink = int(n + j);
        if (sink < 0) throw std::runtime_error("weak_distance: transport network disconnected");

        int head = sink;
        double push = demand[std::size_t(sink) - n];
        for (int v = sink; parent[v] >= 0; v = parent[v]) {
            int u = parent[v];
            if (v < int(n)) push = std::min(push, flow[std::size_t(v)][std::size_t(u) - n]);
            head = u;
        }
        push = std::min(push, supply[std::size_t(head)]);

        for (int v = sink; parent[v] >= 0; v = parent[v]) {
            int u = parent[v];
            if (v >= int(n))
                flow[std::size_t(u)][std::size_t(v) - n] += push;
            else
                flow[std::size_t(v)][std::size_t(u) - n] -= push;
        }
        supply[std::size_t(head)] -= push;
        demand[std::size_t(sink) - n] -= push;
        remaining -= push;

        double cutoff = dist[std::size_t(sink)];
        for (std::size_t k = 0; k < n + m; ++k)
            pot[k] += std::min(dist[k], cutoff);
    }

    double value = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) value += flow[i][j] * cost[i][j];
    return value;
}

}  // namespace

double weak_distance(const DiskMeasure& mu, const DiskMeasure& nu) {
    if (mu.empty() || nu.empty())
        throw std::domain_error("weak_distance: measures must be non-empty");
    if (mu.atoms.size() > 10000 || nu.atoms.size() > 10000)
        throw std::invalid_argument("weak_distance: atom count cap is 1e4");

    // Merge coincident atoms so equal measures come out exactly zero.
    auto merged = [](const DiskMeasure& m) {
        std::vector<DiskMeasure::Atom> atoms;
        for (const auto& a : m.atoms) {
            bool hit = false;
            for (auto& b : atoms)
                if (std::abs(a.point - b.point) <= 1e-12) {
                    b.mass += a.mass;
                    hit = true;
                    break;
                }
            if (!hit) atoms.push_back(a);
        }
        return atoms;
    };
    std::vector<DiskMeasure::Atom> am = merged(mu), bm = merged(nu);

    double mass_mu = 0.0, mass_nu = 0.0;
    for (const auto& a : am) mass_mu += a.mass;
    for (const auto& b : bm) mass_nu += b.mass;

    std::vector<Complex> src, dst;
    std::vector<double> supply, demand;
    for (const auto& a : am) {
        src.push_back(a.point);
        supply.push_back(a.mass / mass_mu);
    }
    for (const auto& b : bm) {
        dst.push_back(b.point);
        demand.push_back(b.mass / mass_nu);
    }
    double w1 = transport_cost(src, supply, dst, demand);
    return w1 + std::fabs(mass_mu - mass_nu);
}

}  // namespace innerlab
