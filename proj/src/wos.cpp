#include "innerlab/wos.hpp"

#include <cmath>
#include <stdexcept>

#include "innerlab/parallel.hpp"
#include "innerlab/rng.hpp"

namespace innerlab {

WosStats wos_run(const PolylineJordanDomain& omega, const Complex& w,
                 const BoundaryPartition& parts, std::size_t n_walks, std::uint64_t seed,
                 const std::function<double(const Complex&, std::size_t)>& weight) {
    if (n_walks < 1) throw std::invalid_argument("wos_run: need at least one walk");
    parts.validate(omega.segment_count());
    SegmentGrid grid(omega);
    const double absorb = 1e-6 * omega.diameter();
    {
        auto hit = grid.nearest(w);
        if (!omega.contains(w) || hit.distance <= absorb)
            throw std::domain_error("wos_run: start point must be strictly interior");
    }
    constexpr std::size_t kStepCap = 10000;

    const std::size_t n_parts = parts.parts.size();
    struct Partial {
        std::vector<double> count, wsum;
        double total_w = 0.0, total_w2 = 0.0;
    };
    std::vector<Partial> partials;
    std::vector<std::size_t> part_by_segment(omega.segment_count());
    for (std::size_t s = 0; s < omega.segment_count(); ++s)
        part_by_segment[s] = parts.part_of(s, omega.segment_count());

    partials.assign(parallel_chunk_count(n_walks, 4096),
                    Partial{std::vector<double>(n_parts, 0.0), std::vector<double>(n_parts, 0.0),
                            0.0, 0.0});

    parallel_chunks(
        n_walks,
        [&](std::size_t chunk, std::size_t begin, std::size_t end) {
            Partial& acc = partials.at(chunk);
            for (std::size_t walk = begin; walk < end; ++walk) {
                SplitMix64 rng(seed, walk);
                Complex z = w;
                std::size_t segment = 0;
                bool absorbed = false;
                while (!absorbed) {
                    for (std::size_t step = 0; step < kStepCap; ++step) {
                        // Far from the boundary a cheap lower bound is a valid
                        // jump radius; the exact query is reserved for the
                        // final approach.
                        double lb = grid.distance_lower_bound(z);
                        if (lb > 64.0 * absorb) {
                            z += lb * unit(rng.uniform(0.0, kTwoPi));
                            continue;
                        }
                        auto hit = grid.nearest(z);
                        if (hit.distance <= absorb) {
                            segment = hit.segment;
                            z = hit.closest;
                            absorbed = true;
                            break;
                        }
                        z += hit.distance * unit(rng.uniform(0.0, kTwoPi));
                    }
                    if (!absorbed) z = w;  // restart cap hit; re-launch the walk
                }
                std::size_t p = part_by_segment[segment];
                acc.count[p] += 1.0;
                if (weight) {
                    double value = weight(z, segment);
                    acc.wsum[p] += value;
                    acc.total_w += value;
                    acc.total_w2 += value * value;
                }
            }
        },
        4096);

    WosStats out;
    out.walks = n_walks;
    out.part_probability.assign(n_parts, 0.0);
    out.part_weight_mean.assign(n_parts, 0.0);
    double total_w = 0.0, total_w2 = 0.0;
    for (const Partial& acc : partials) {
        if (acc.count.empty()) continue;
        for (std::size_t p = 0; p < n_parts; ++p) {
            out.part_probability[p] += acc.count[p];
            out.part_weight_mean[p] += acc.wsum[p];
        }
        total_w += acc.total_w;
        total_w2 += acc.total_w2;
    }
    double n = double(n_walks);
    for (std::size_t p = 0; p < n_parts; ++p) {
        out.part_probability[p] /= n;
        out.part_weight_mean[p] /= n;
    }
    out.weighted_mean = total_w / n;
    double variance = std::max(0.0, total_w2 / n - out.weighted_mean * out.weighted_mean);
    out.weighted_sigma = std::sqrt(variance / n);
    return out;
}

std::vector<double> wos_harmonic_measure(const PolylineJordanDomain& omega, const Complex& w,
                                         const BoundaryPartition& parts, std::size_t n_walks,
                                         std::uint64_t seed) {
    if (n_walks < 10000) throw std::invalid_argument("wos_harmonic_measure: need >= 1e4 walks");
    return wos_run(omega, w, parts, n_walks, seed).part_probability;
}

}  // namespace innerlab
