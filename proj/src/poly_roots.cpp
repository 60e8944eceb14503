#include "innerlab/poly_roots.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace innerlab {

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) {
    if (p.empty() || q.empty()) return {};
    Polynomial out(p.size() + q.size() - 1, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    return out;
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) {
    Polynomial out(std::max(p.size(), q.size()), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < p.size(); ++i) out[i] += p[i];
    for (std::size_t i = 0; i < q.size(); ++i) out[i] += q[i];
    return out;
}

Polynomial poly_sub(const Polynomial& p, const Polynomial& q) {
    return poly_add(p, poly_scale(q, Complex(-1.0, 0.0)));
}

Polynomial poly_scale(const Polynomial& p, const Complex& s) {
    Polynomial out = p;
    for (Complex& c : out) c *= s;
    return out;
}

Polynomial poly_derivative(const Polynomial& p) {
    if (p.size() <= 1) return {Complex(0.0, 0.0)};
    Polynomial out(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = double(i) * p[i];
    return out;
}

Complex poly_eval(const Polynomial& p, const Complex& z) {
    Complex acc(0.0, 0.0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * z + p[i];
    return acc;
}

Polynomial poly_trim(const Polynomial& p, double rel_tol) {
    double scale = 0.0;
    for (const Complex& c : p) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) return {};
    Polynomial out = p;
    while (out.size() > 1 && std::abs(out.back()) <= rel_tol * scale) out.pop_back();
    return out;
}

std::vector<Complex> find_roots(const Polynomial& raw, int max_sweeps) {
    Polynomial p = poly_trim(raw);
    if (p.size() <= 1) return {};

    // Strip exact roots at the origin first; they are free.
    std::vector<Complex> roots;
    std::size_t low = 0;
    while (low + 1 < p.size() && p[low] == Complex(0.0, 0.0)) ++low;
    for (std::size_t k = 0; k < low; ++k) roots.push_back(Complex(0.0, 0.0));
    if (low > 0) p.erase(p.begin(), p.begin() + low);
    const std::size_t n = p.size() - 1;
    if (n == 0) return roots;

    Polynomial dp = poly_derivative(p);

    // Cauchy-style radius bound for the initial ring.
    double lead = std::abs(p.back());
    double radius = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        radius = std::max(radius, std::pow(std::abs(p[i]) / lead, 1.0 / double(n - i)));
    radius = std::min(2.0 * radius + 0.25, 1e6);

    std::vector<Complex> z(n);
    for (std::size_t i = 0; i < n; ++i) {
        double angle = kTwoPi * double(i) / double(n) + 0.376841;  // irrational offset
        z[i] = radius * unit(angle);
    }

    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        converged = true;
        for (std::size_t i = 0; i < n; ++i) {
            Complex pv = poly_eval(p, z[i]);
            Complex dv = poly_eval(dp, z[i]);
            if (pv == Complex(0.0, 0.0)) continue;
            Complex newton = (dv == Complex(0.0, 0.0)) ? Complex(1e-12, 1e-12) : pv / dv;
            Complex repulsion(0.0, 0.0);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                Complex diff = z[i] - z[j];
                if (std::abs(diff) < 1e-300) diff = Complex(1e-300, 0.0);
                repulsion += 1.0 / diff;
            }
            Complex denom = 1.0 - newton * repulsion;
            Complex step = (std::abs(denom) < 1e-300) ? newton : newton / denom;
            z[i] -= step;
            if (std::abs(step) > 1e-13 * (1.0 + std::abs(z[i]))) converged = false;
        }
    }

    // Newton polish; keep the iterate only while it improves the residual.
    for (std::size_t i = 0; i < n; ++i) {
        for (int it = 0; it < 3; ++it) {
            Complex pv = poly_eval(p, z[i]);
            Complex dv = poly_eval(dp, z[i]);
            if (dv == Complex(0.0, 0.0)) break;
            Complex cand = z[i] - pv / dv;
            if (std::abs(poly_eval(p, cand)) < std::abs(pv)) z[i] = cand;
        }
    }

    if (!converged) {
        // Multiple roots stall the per-step criterion; accept if residuals are
        // small relative to the coefficient scale, else report diagnostics.
        double scale = 0.0;
        for (const Complex& c : p) scale = std::max(scale, std::abs(c));
        double worst = 0.0;
        for (const Complex& r : z) {
            double local = scale * std::max(1.0, std::pow(std::abs(r), double(n)));
            worst = std::max(worst, std::abs(poly_eval(p, r)) / local);
        }
        if (worst > 1e-8) {
            std::ostringstream msg;
            msg << "find_roots: no convergence after " << max_sweeps
                << " sweeps; worst relative residual " << worst;
            throw std::runtime_error(msg.str());
        }
    }

    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

std::vector<std::pair<Complex, int>> cluster_points(const std::vector<Complex>& pts, double tol) {
    std::vector<Complex> sorted = pts;
    std::sort(sorted.begin(), sorted.end(), [](const Complex& l, const Complex& r) {
        if (l.real() != r.real()) return l.real() < r.real();
        return l.imag() < r.imag();
    });
    std::vector<std::pair<Complex, int>> clusters;
    std::vector<bool> used(sorted.size(), false);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (used[i]) continue;
        Complex sum = sorted[i];
        int count = 1;
        used[i] = true;
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            if (used[j]) continue;
            if (std::abs(sorted[j] - sum / double(count)) <= tol) {
                sum += sorted[j];
                ++count;
                used[j] = true;
            }
        }
        clusters.emplace_back(sum / double(count), count);
    }
    return clusters;
}

}  // namespace innerlab
