#pragma once

#include "innerlab/geometry.hpp"

namespace innerlab {

// Disk automorphism z -> e^{i rotation} (z - a) / (1 - conj(a) z), |a| < 1.
struct Moebius {
    Complex a{0.0, 0.0};
    double rotation = 0.0;

    Moebius() = default;
    Moebius(Complex a_, double rotation_);

    static Moebius identity() { return Moebius(); }
    bool is_identity() const { return a == Complex(0.0, 0.0) && rotation == 0.0; }

    Complex operator()(const Complex& z) const;
    Complex derivative(const Complex& z) const;
    Moebius inverse() const;

    // Composition (lhs after rhs); the result is again a disk automorphism.
    friend Moebius operator*(const Moebius& lhs, const Moebius& rhs);
};

}  // namespace innerlab
