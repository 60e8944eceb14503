#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace innerlab {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Unit-disk coordinates throughout; points are dimensionless.
inline bool in_open_disk(const Complex& z) { return std::abs(z) < 1.0; }

inline bool on_circle(const Complex& z, double tol = 1e-12) {
    return std::abs(std::abs(z) - 1.0) <= tol;
}

inline bool is_finite(const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline Complex unit(double theta) { return std::polar(1.0, theta); }

// Wraps an angle into [0, 2*pi).
inline double wrap_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0) t += kTwoPi;
    return t;
}

// Shortest angular distance between two circle points, in [0, pi].
inline double angle_distance(double a, double b) {
    double d = std::fabs(wrap_angle(a) - wrap_angle(b));
    return d > kPi ? kTwoPi - d : d;
}

// Chordal distance |e^{ia} - e^{ib}|.
inline double chord_distance(double a, double b) {
    return 2.0 * std::fabs(std::sin(0.5 * (a - b)));
}

// Hyperbolic density 2/(1-|z|^2) of the unit disk.
inline double disk_density(const Complex& z) {
    double r2 = std::norm(z);
    if (r2 >= 1.0) throw std::domain_error("disk_density: point not in the open disk");
    return 2.0 / (1.0 - r2);
}

// Poisson kernel (1-|z|^2)/|zeta-z|^2 for |z|<1, |zeta|=1.
inline double poisson_kernel(const Complex& z, const Complex& zeta) {
    return (1.0 - std::norm(z)) / std::norm(zeta - z);
}

}  // namespace innerlab
