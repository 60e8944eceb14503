#include "innerlab/mobius.hpp"

namespace innerlab {

Moebius::Moebius(Complex a_, double rotation_) : a(a_), rotation(rotation_) {
    if (!is_finite(a) || std::abs(a) >= 1.0)
        throw std::invalid_argument("Moebius: pole parameter must satisfy |a| < 1");
}

Complex Moebius::operator()(const Complex& z) const {
    return unit(rotation) * (z - a) / (1.0 - std::conj(a) * z);
}

Complex Moebius::derivative(const Complex& z) const {
    Complex den = 1.0 - std::conj(a) * z;
    return unit(rotation) * (1.0 - std::norm(a)) / (den * den);
}

Moebius Moebius::inverse() const {
    // w = e^{it}(z-a)/(1-conj(a) z)  =>  z = e^{-it}(w + a e^{it})/(1 + conj(a) e^{-it} w)
    return Moebius(-a * unit(rotation), -rotation);
}

Moebius operator*(const Moebius& lhs, const Moebius& rhs) {
    // Matrix form [alpha beta; gamma delta] of the composition, then re-extract
    // the (a, rotation) normal form.  a = preimage of 0, so a = rhs^{-1}(lhs-pole).
    Complex el = unit(lhs.rotation), er = unit(rhs.rotation);
    Complex alpha = el * er + lhs.a * std::conj(rhs.a) * el;
    Complex beta = -el * er * rhs.a - el * lhs.a;
    Complex gamma = -std::conj(lhs.a) * er - std::conj(rhs.a);
    Complex delta = 1.0 + std::conj(lhs.a) * er * rhs.a;

    Complex a = -beta / alpha;
    // Unimodular factor recovered at a probe point away from the pole of the form.
    Complex z0 = (std::abs(a) < 0.5) ? Complex(0.7, 0.1) : Complex(0.0, 0.0);
    Complex w = (alpha * z0 + beta) / (gamma * z0 + delta);
    Complex phase = w * (1.0 - std::conj(a) * z0) / (z0 - a);
    phase /= std::abs(phase);  // kill round-off drift off the unit circle
    return Moebius(a, std::arg(phase));
}

}  // namespace innerlab
