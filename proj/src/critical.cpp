#include "innerlab/critical.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "innerlab/poly_roots.hpp"

namespace innerlab {

namespace {

constexpr double kInteriorCut = 1.0 - 1e-10;
constexpr double kClusterTol = 1e-6;

}  // namespace

std::vector<CriticalPoint> critical_points(const BlaschkeProduct& b) {
    const int d = b.degree();
    if (d < 2) throw std::invalid_argument("critical_points: degree must be >= 2");

    std::vector<CriticalPoint> result;
    // Repeated zeros are critical points of known order; no root-finding.
    for (const auto& zr : b.zeros)
        if (zr.multiplicity >= 2) result.push_back({zr.point, zr.multiplicity - 1});

    const std::size_t k = b.zeros.size();
    if (k >= 2) {
        // Reduced numerator of B'/B: sum_j m_j (1-|a_j|^2) prod_{l != j}
        // (z - a_l)(1 - conj(a_l) z).  Its roots are the critical points away
        // from the zeros of B; they come in pairs c, 1/conj(c).
        Polynomial reduced{Complex(0.0, 0.0)};
        for (std::size_t j = 0; j < k; ++j) {
            Polynomial term{Complex(double(b.zeros[j].multiplicity) *
                                        (1.0 - std::norm(b.zeros[j].point)),
                                    0.0)};
            for (std::size_t l = 0; l < k; ++l) {
                if (l == j) continue;
                term = poly_mul(term, {-b.zeros[l].point, Complex(1.0, 0.0)});
                term = poly_mul(term, {Complex(1.0, 0.0), -std::conj(b.zeros[l].point)});
            }
            reduced = poly_add(reduced, term);
        }

        std::vector<Complex> roots = find_roots(reduced);
        std::vector<Complex> interior, exterior;
        for (const Complex& r : roots)
            (std::abs(r) < kInteriorCut ? interior : exterior).push_back(r);

        // Reflections 1/conj(c) of the interior roots must account for the
        // exterior ones; a mismatch means the root set is unreliable.
        for (const Complex& c : interior) {
            Complex mirror = 1.0 / std::conj(c);
            bool matched = false;
            for (const Complex& e : exterior)
                if (std::abs(e - mirror) <= 1e-5 * (1.0 + std::abs(mirror))) {
                    matched = true;
                    break;
                }
            if (!matched && std::abs(c) > 1e-8) {
                std::ostringstream msg;
                msg << "critical_points: interior root " << c
                    << " lacks its reflected partner; residual check failed";
                throw std::runtime_error(msg.str());
            }
        }

        for (const auto& [center, count] : cluster_points(interior, kClusterTol))
            result.push_back({center, count});
    }

    int total = 0;
    for (const auto& cp : result) total += cp.multiplicity;
    if (total != d - 1) {
        std::ostringstream msg;
        msg << "critical_points: found multiplicity " << total << ", expected " << d - 1;
        throw std::runtime_error(msg.str());
    }
    std::sort(result.begin(), result.end(), [](const CriticalPoint& l, const CriticalPoint& r) {
        if (l.point.real() != r.point.real()) return l.point.real() < r.point.real();
        return l.point.imag() < r.point.imag();
    });
    return result;
}

namespace {

double atom_weight(const Complex& c, CriticalWeight weight) {
    return weight == CriticalWeight::OneMinusModulus ? 1.0 - std::abs(c)
                                                     : std::log(1.0 / std::abs(c));
}

}  // namespace

DiskMeasure critical_measure(const BlaschkeProduct& b, CriticalWeight weight) {
    std::vector<DiskMeasure::Atom> atoms;
    for (const auto& cp : critical_points(b))
        atoms.push_back({cp.point, double(cp.multiplicity) * atom_weight(cp.point, weight)});
    return DiskMeasure(atoms);
}

DiskMeasure critical_value_measure(const BlaschkeProduct& b, CriticalWeight weight) {
    std::vector<DiskMeasure::Atom> atoms;
    for (const auto& cp : critical_points(b))
        atoms.push_back({b(cp.point), double(cp.multiplicity) * atom_weight(cp.point, weight)});
    return DiskMeasure(atoms);
}

BlaschkeProduct derivative_inner_part(const BlaschkeProduct& b) {
    std::vector<BlaschkeProduct::Zero> zeros;
    for (const auto& cp : critical_points(b)) zeros.push_back({cp.point, cp.multiplicity});
    return BlaschkeProduct(zeros, 0.0);
}

EntropyResult entropy(const BlaschkeProduct& b, std::size_t quadrature_n) {
    if (quadrature_n < 64) throw std::invalid_argument("entropy: need >= 64 quadrature nodes");
    EntropyResult out;
    for (const auto& zr : b.zeros)
        if (1.0 - std::abs(zr.point) < 1e-6) out.accuracy_warning = true;
    double sum = 0.0;
    for (std::size_t j = 0; j < quadrature_n; ++j) {
        double theta = kTwoPi * double(j) / double(quadrature_n);
        sum += std::log(std::abs(b.derivative(unit(theta))));
    }
    out.value = sum / double(quadrature_n);
    return out;
}

double green_disk(const Complex& p, const Complex& z) {
    if (std::abs(p - z) < 1e-14) throw std::domain_error("green_disk: coincident points");
    if (std::abs(p) >= 1.0 || std::abs(z) >= 1.0)
        throw std::domain_error("green_disk: points must be interior");
    return std::log(std::abs(1.0 - std::conj(p) * z)) - std::log(std::abs(z - p));
}

double jensen_residual(const BlaschkeProduct& b, const Complex& z, std::size_t quadrature_n) {
    if (std::abs(z) >= 1.0) throw std::domain_error("jensen_residual: |z| must be < 1");
    std::vector<CriticalPoint> crit = critical_points(b);
    for (const auto& cp : crit)
        if (std::abs(cp.point - z) < 1e-8)
            throw std::domain_error("jensen_residual: z is at a critical point");

    double lhs = std::log(std::abs(b.derivative(z)));
    double quad = 0.0;
    for (std::size_t j = 0; j < quadrature_n; ++j) {
        double theta = kTwoPi * double(j) / double(quadrature_n);
        Complex zeta = unit(theta);
        quad += poisson_kernel(z, zeta) * std::log(std::abs(b.derivative(zeta)));
    }
    quad /= double(quadrature_n);
    double green_sum = 0.0;
    for (const auto& cp : crit) green_sum += double(cp.multiplicity) * green_disk(z, cp.point);
    return std::fabs(lhs - (quad - green_sum));
}

}  // namespace innerlab
