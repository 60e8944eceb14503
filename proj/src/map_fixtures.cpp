#include "innerlab/map_fixtures.hpp"

#include <cmath>

#include "innerlab/inner_function.hpp"

namespace innerlab {

namespace {

const Complex kI(0.0, 1.0);

Complex s1(const Complex& z) { return (1.0 + z) / (1.0 - z); }
Complex s1p(const Complex& z) { return 2.0 / ((1.0 - z) * (1.0 - z)); }
Complex s3(const Complex& w) { return (w - kI) / (w + kI); }
Complex s3p(const Complex& w) { return 2.0 * kI / ((w + kI) * (w + kI)); }

}  // namespace

Complex upper_half_disk_to_disk(const Complex& z) {
    Complex a = s1(z);
    return s3(a * a);
}

Complex upper_half_disk_to_disk_derivative(const Complex& z) {
    Complex a = s1(z);
    return s3p(a * a) * 2.0 * a * s1p(z);
}

Complex right_half_disk_to_disk(const Complex& z) { return upper_half_disk_to_disk(kI * z); }

Complex right_half_disk_to_disk_derivative(const Complex& z) {
    return upper_half_disk_to_disk_derivative(kI * z) * kI;
}

Complex right_half_disk_center() { return Complex(std::tan(kPi / 8.0), 0.0); }

MapOracle oracle_identity() {
    MapOracle o;
    o.domain = MapOracle::Domain::Disk;
    o.map = [](Complex z) { return z; };
    o.exact_derivative = [](Complex) { return Complex(1.0, 0.0); };
    o.boundary_value = [](Complex zeta) { return zeta; };
    return o;
}

MapOracle oracle_blaschke(const BlaschkeProduct& b) {
    MapOracle o;
    o.domain = MapOracle::Domain::Disk;
    o.map = [b](Complex z) { return b(z); };
    o.exact_derivative = [b](Complex z) { return b.derivative(z); };
    o.boundary_value = [b](Complex zeta) { return b(zeta); };
    return o;
}

MapOracle oracle_moebius(const Moebius& m) {
    MapOracle o;
    o.domain = MapOracle::Domain::Disk;
    o.map = [m](Complex z) { return m(z); };
    o.exact_derivative = [m](Complex z) { return m.derivative(z); };
    o.boundary_value = [m](Complex zeta) { return m(zeta); };
    return o;
}

MapOracle oracle_singular_atom(double theta, double mass) {
    SingularAtomicInner s = SingularAtomicInner::point_mass(theta, mass);
    MapOracle o;
    o.domain = MapOracle::Domain::Disk;
    o.map = [s](Complex z) { return s(z); };
    o.exact_derivative = [s](Complex z) { return s.derivative(z); };
    return o;
}

MapOracle oracle_right_half_disk_inverse() {
    MapOracle o;
    o.domain = MapOracle::Domain::HalfDiskRight;
    o.map = [](Complex z) { return right_half_disk_to_disk(z); };
    o.exact_derivative = [](Complex z) { return right_half_disk_to_disk_derivative(z); };
    o.boundary_value = [](Complex zeta) { return right_half_disk_to_disk(zeta); };
    return o;
}

MapOracle oracle_upper_half_disk_inverse() {
    MapOracle o;
    o.domain = MapOracle::Domain::HalfDiskUpper;
    o.map = [](Complex z) { return upper_half_disk_to_disk(z); };
    o.exact_derivative = [](Complex z) { return upper_half_disk_to_disk_derivative(z); };
    o.boundary_value = [](Complex zeta) { return upper_half_disk_to_disk(zeta); };
    return o;
}

double upper_half_disk_diameter_measure(const Complex& w) {
    // Through the quadrant model the diameter lands on the positive real
    // axis of the half-plane; harmonic measure there is 1 - arg/pi.
    Complex a = s1(w);
    Complex in_half_plane = a * a;
    return 1.0 - std::arg(in_half_plane) / kPi;
}

}  // namespace innerlab
