#include "innerlab/green.hpp"

#include <Eigen/SparseLU>
#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace innerlab {

namespace {

// First boundary crossing along a grid edge, as a fraction of delta in (0, 1].
double cut_fraction(const PolylineJordanDomain& omega, const Complex& from, const Complex& to) {
    double best = 1.0;
    const std::size_t n = omega.segment_count();
    Complex d = to - from;
    for (std::size_t s = 0; s < n; ++s) {
        Complex a = omega.segment_start(s), b = omega.segment_end(s);
        Complex e = b - a;
        double denom = d.real() * e.imag() - d.imag() * e.real();
        if (std::fabs(denom) < 1e-300) continue;
        double t = ((a - from).real() * e.imag() - (a - from).imag() * e.real()) / denom;
        double u = ((a - from).real() * d.imag() - (a - from).imag() * d.real()) / denom;
        if (t > 1e-12 && t <= 1.0 && u >= -1e-12 && u <= 1.0 + 1e-12) best = std::min(best, t);
    }
    return best;
}

}  // namespace

GreenField::GreenField(const PolylineJordanDomain& omega, const Complex& p, double delta)
    : delta_(delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("GreenField: delta must be positive");
    SegmentGrid grid(omega);
    if (!omega.contains(p) || grid.nearest(p).distance < 4.0 * delta)
        throw std::domain_error("GreenField: source must sit >= 4*delta inside the domain");

    double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
    for (const Complex& v : omega.vertices) {
        lo_x = std::min(lo_x, v.real());
        hi_x = std::max(hi_x, v.real());
        lo_y = std::min(lo_y, v.imag());
        hi_y = std::max(hi_y, v.imag());
    }
    // Irrational origin offset so node rows and columns never coincide with
    // polyline vertices or axis-aligned edges exactly.
    x0_ = lo_x - delta * 1.0000003719;
    y0_ = lo_y - delta * 1.0000004273;
    nx_ = std::size_t(std::ceil((hi_x - x0_) / delta)) + 2;
    ny_ = std::size_t(std::ceil((hi_y - y0_) / delta)) + 2;
    inside_.assign(nx_ * ny_, 0);
    values_.assign(nx_ * ny_, 0.0);

    auto node = [&](std::size_t i, std::size_t j) {
        return Complex(x0_ + double(i) * delta, y0_ + double(j) * delta);
    };
    // Scanline fill: crossings of each boundary segment with every node row,
    // then parity inside each row.  Linear in segments + crossings.
    {
        std::vector<std::vector<double>> crossings(ny_);
        const std::size_t nseg = omega.segment_count();
        for (std::size_t s = 0; s < nseg; ++s) {
            Complex a = omega.segment_start(s), b = omega.segment_end(s);
            double ylo = std::min(a.imag(), b.imag()), yhi = std::max(a.imag(), b.imag());
            // Widened by one row against round-off; the crossing test decides.
            long j0 = long(std::ceil((ylo - y0_) / delta)) - 1;
            long j1 = long(std::floor((yhi - y0_) / delta)) + 1;
            for (long j = std::max(0L, j0); j <= std::min(long(ny_) - 1, j1); ++j) {
                double y = y0_ + double(j) * delta;
                if ((a.imag() > y) == (b.imag() > y)) continue;  // half-open rule
                double x_cross =
                    a.real() + (y - a.imag()) * (b.real() - a.real()) / (b.imag() - a.imag());
                crossings[std::size_t(j)].push_back(x_cross);
            }
        }
        for (std::size_t j = 0; j < ny_; ++j) {
            auto& xs = crossings[j];
            std::sort(xs.begin(), xs.end());
            for (std::size_t c = 0; c + 1 < xs.size(); c += 2) {
                long i0 = long(std::ceil((xs[c] - x0_) / delta));
                long i1 = long(std::floor((xs[c + 1] - x0_) / delta));
                for (long i = std::max(0L, i0); i <= std::min(long(nx_) - 1, i1); ++i) {
                    if (x0_ + double(i) * delta == xs[c] || x0_ + double(i) * delta == xs[c + 1])
                        continue;  // nodes exactly on the boundary stay outside
                    inside_[at(std::size_t(i), std::size_t(j))] = 1;
                }
            }
        }
    }

    std::vector<long> index(nx_ * ny_, -1);
    long unknowns = 0;
    for (std::size_t k = 0; k < inside_.size(); ++k)
        if (inside_[k]) index[k] = unknowns++;
    if (unknowns == 0) throw std::domain_error("GreenField: raster too coarse for the domain");

    // Source node nearest to p.
    long pi = std::lround((p.real() - x0_) / delta), pj = std::lround((p.imag() - y0_) / delta);
    std::size_t source = at(std::size_t(pi), std::size_t(pj));
    if (!inside_[source]) throw std::domain_error("GreenField: source node left the mask");

    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(std::size_t(unknowns) * 5);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(unknowns);
    const int di[4] = {1, -1, 0, 0};
    const int dj[4] = {0, 0, 1, -1};
    for (std::size_t j = 0; j < ny_; ++j) {
        for (std::size_t i = 0; i < nx_; ++i) {
            std::size_t k = at(i, j);
            if (!inside_[k]) continue;
            long row = index[k];
            // Shortley-Weller arms: neighbors outside the mask are replaced
            // by the true boundary crossing with value zero.
            double arm[4];
            long nbr[4];
            for (int d = 0; d < 4; ++d) {
                long ii = long(i) + di[d], jj = long(j) + dj[d];
                bool in = ii >= 0 && jj >= 0 && ii < long(nx_) && jj < long(ny_) &&
                          inside_[at(std::size_t(ii), std::size_t(jj))];
                if (in) {
                    arm[d] = 1.0;
                    nbr[d] = index[at(std::size_t(ii), std::size_t(jj))];
                } else {
                    double frac = cut_fraction(omega, node(i, j),
                                               node(std::size_t(ii), std::size_t(jj)));
                    arm[d] = std::max(frac, 0.05);  // clamp degenerate slivers
                    nbr[d] = -1;
                }
            }
            double diag = 0.0;
            for (int axis = 0; axis < 2; ++axis) {
                double hp = arm[2 * axis], hm = arm[2 * axis + 1];
                double cp = 2.0 / (hp * (hp + hm));
                double cm = 2.0 / (hm * (hp + hm));
                diag += cp + cm;
                if (nbr[2 * axis] >= 0) trip.emplace_back(row, nbr[2 * axis], -cp);
                if (nbr[2 * axis + 1] >= 0) trip.emplace_back(row, nbr[2 * axis + 1], -cm);
            }
            trip.emplace_back(row, row, diag);
            // Arms are in units of delta, so the row is delta^2 times the
            // continuum operator; the unit point source then reduces to 2 pi.
            if (k == source) rhs[row] = kTwoPi;
        }
    }

    Eigen::SparseMatrix<double> a(unknowns, unknowns);
    a.setFromTriplets(trip.begin(), trip.end());
    // The cut-arm operator is mildly nonsymmetric; a direct factorization is
    // cheap at these sizes and sidesteps iterative breakdown.
    Eigen::SparseLU<Eigen::SparseMatrix<double>> solver;
    solver.analyzePattern(a);
    solver.factorize(a);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("GreenField: factorization failed");
    Eigen::VectorXd u = solver.solve(rhs);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("GreenField: linear solve failed");

    for (std::size_t k = 0; k < inside_.size(); ++k)
        if (index[k] >= 0) values_[k] = u[index[k]];
}

bool GreenField::covers(const Complex& z) const {
    double fx = (z.real() - x0_) / delta_, fy = (z.imag() - y0_) / delta_;
    long i = long(std::floor(fx)), j = long(std::floor(fy));
    if (i < 0 || j < 0 || i + 1 >= long(nx_) || j + 1 >= long(ny_)) return false;
    return inside_[at(std::size_t(i), std::size_t(j))] &&
           inside_[at(std::size_t(i + 1), std::size_t(j))] &&
           inside_[at(std::size_t(i), std::size_t(j + 1))] &&
           inside_[at(std::size_t(i + 1), std::size_t(j + 1))];
}

double GreenField::value(const Complex& z) const {
    double fx = (z.real() - x0_) / delta_, fy = (z.imag() - y0_) / delta_;
    long i = long(std::floor(fx)), j = long(std::floor(fy));
    if (!covers(z)) throw std::domain_error("GreenField: evaluation outside the solved mask");
    double tx = fx - double(i), ty = fy - double(j);
    double v00 = values_[at(std::size_t(i), std::size_t(j))];
    double v10 = values_[at(std::size_t(i + 1), std::size_t(j))];
    double v01 = values_[at(std::size_t(i), std::size_t(j + 1))];
    double v11 = values_[at(std::size_t(i + 1), std::size_t(j + 1))];
    return v00 * (1 - tx) * (1 - ty) + v10 * tx * (1 - ty) + v01 * (1 - tx) * ty + v11 * tx * ty;
}

double green_grid(const PolylineJordanDomain& omega, const Complex& p, const Complex& z,
                  double delta) {
    if (std::abs(p - z) <= 4.0 * delta)
        throw std::domain_error("green_grid: evaluation point too close to the source");
    GreenField field(omega, p, delta);
    return field.value(z);
}

std::vector<double> green_quotient_profile(const PolylineJordanDomain& omega, const Complex& p,
                                           double zeta, const std::vector<double>& radii,
                                           double delta) {
    Complex target = unit(zeta);
    // The ray must aim at a genuine boundary contact point of the record.
    bool touches = false;
    for (std::size_t s = 0; s < omega.segment_count(); ++s) {
        if (std::abs(omega.segment_start(s) - target) < 1e-6) {
            touches = true;
            break;
        }
    }
    if (!touches) throw std::domain_error("green_quotient_profile: zeta is not a contact point");

    GreenField field(omega, p, delta);
    std::vector<double> out;
    out.reserve(radii.size());
    for (double r : radii) {
        Complex z = r * target;
        double num = field.covers(z) ? field.value(z) : 0.0;
        out.push_back(num / green_disk(p, z));
    }
    return out;
}

}  // namespace innerlab
