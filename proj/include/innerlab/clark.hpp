#pragma once

#include <optional>

#include "innerlab/jordan.hpp"
#include "innerlab/measures.hpp"
#include "innerlab/thickness.hpp"
#include "innerlab/wos.hpp"

namespace innerlab {

// Pushforward decomposition of the composition-operator measure through a
// conformal map phi: disk -> omega, split across the two boundary pieces:
//   on d(omega) inside the disk:   P_mu(z) d(harmonic measure from phi(0))
//   on d(omega) on the circle:     |psi'(x)| d(mu),  psi = phi^{-1},
// with |psi'(x)| the radial boundary derivative (0 at thin contact points).
struct ClarkPushforward {
    DiskMeasure interior;     // estimated atoms at segment midpoints on d(omega) in the disk
    CircleMeasure boundary;   // reweighted mu on d(omega) on the circle
    double interior_total = 0.0;
    double interior_sigma = 0.0;  // Monte-Carlo standard error of interior_total
    bool used_walks = false;      // false when the interior boundary is empty
    bool boundary_available = true;
};

// psi: omega -> disk supplied as a map oracle (evaluated along radii toward
// circle contact points); phi0 = phi(0) is the harmonic-measure viewpoint.
// When the interior boundary is empty no walks are spent and the result is
// the closed-form boundary reweighting alone.
ClarkPushforward clark_pushforward(const PolylineJordanDomain& omega, const MapOracle& map_inverse,
                                   const Complex& phi0, const CircleMeasure& mu,
                                   std::size_t n_walks, std::uint64_t seed);

}  // namespace innerlab
