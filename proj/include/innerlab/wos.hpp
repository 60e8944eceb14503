#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "innerlab/jordan.hpp"

namespace innerlab {

// Walk-on-spheres exit statistics.  Walks jump to a uniform point on the
// largest centered disk until they come within 1e-6 * diameter of the
// boundary, then absorb on the nearest segment.  Each walk draws from its own
// (seed, index) stream, so the result is independent of the thread count.
struct WosStats {
    std::vector<double> part_probability;  // per part, sums to 1
    std::vector<double> part_weight_mean;  // mean of weight(b) restricted to the part
    double weighted_mean = 0.0;            // mean of weight(b) over all walks
    double weighted_sigma = 0.0;           // standard error of weighted_mean
    std::size_t walks = 0;
};

WosStats wos_run(const PolylineJordanDomain& omega, const Complex& w,
                 const BoundaryPartition& parts, std::size_t n_walks, std::uint64_t seed,
                 const std::function<double(const Complex&, std::size_t)>& weight = {});

// Harmonic measure of each part seen from w.
std::vector<double> wos_harmonic_measure(const PolylineJordanDomain& omega, const Complex& w,
                                         const BoundaryPartition& parts, std::size_t n_walks,
                                         std::uint64_t seed);

}  // namespace innerlab
