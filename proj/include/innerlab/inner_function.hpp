#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "innerlab/mobius.hpp"

namespace innerlab {

// Finite Blaschke product e^{i rotation} prod_k ((z - a_k)/(1 - conj(a_k) z))^{m_k}.
// Zeros are stored deduplicated (points within 1e-12 merge, multiplicities add).
struct BlaschkeProduct {
    struct Zero {
        Complex point;
        int multiplicity = 1;
    };

    std::vector<Zero> zeros;
    double rotation = 0.0;

    BlaschkeProduct() = default;
    BlaschkeProduct(std::vector<Zero> zeros_, double rotation_ = 0.0);

    static BlaschkeProduct monomial(int degree, double rotation = 0.0);

    int degree() const;

    Complex operator()(const Complex& z) const;
    Complex derivative(const Complex& z) const;
};

// Atomic singular inner function exp(-sum_j mass_j (zeta_j + z)/(zeta_j - z)),
// zeta_j = e^{i theta_j}.  |S| < 1 in the disk, |S| = 1 on the circle off the atoms.
struct SingularAtomicInner {
    struct Atom {
        double theta = 0.0;
        double mass = 0.0;
    };

    std::vector<Atom> atoms;

    SingularAtomicInner() = default;
    explicit SingularAtomicInner(std::vector<Atom> atoms_);

    // Singular inner function with a single boundary atom.
    static SingularAtomicInner point_mass(double theta, double mass = 1.0);

    Complex operator()(const Complex& z) const;
    Complex derivative(const Complex& z) const;

    // Smallest distance from z to an atom location on the circle.
    double atom_distance(const Complex& z) const;
};

// Product of an optional Blaschke factor and an optional atomic singular factor,
// followed by a disk automorphism.  At least one factor must be present.
struct InnerFunctionRep {
    std::optional<BlaschkeProduct> blaschke;
    std::optional<SingularAtomicInner> singular;
    Moebius post;

    InnerFunctionRep() = default;
    InnerFunctionRep(std::optional<BlaschkeProduct> b, std::optional<SingularAtomicInner> s,
                     Moebius post_ = Moebius());

    static InnerFunctionRep from(BlaschkeProduct b) { return {std::move(b), std::nullopt}; }
    static InnerFunctionRep from(SingularAtomicInner s) { return {std::nullopt, std::move(s)}; }
    static InnerFunctionRep identity();

    Complex operator()(const Complex& z) const;
    Complex derivative(const Complex& z) const;
};

Complex evaluate(const InnerFunctionRep& f, const Complex& z);
Complex derivative(const InnerFunctionRep& f, const Complex& z);

// Conformal density of the pulled-back hyperbolic metric, 2|F'(z)|/(1-|F(z)|^2).
// Satisfies the Schwarz-Pick bound pullback_density(F, z) <= 2/(1-|z|^2).
double pullback_density(const InnerFunctionRep& f, const Complex& z);

// (F - a)/(1 - conj(a) F), realised by composing the post factor.
InnerFunctionRep frostman_shift(const InnerFunctionRep& f, const Complex& a);

// m o B re-expanded in zero/rotation form; the new zeros solve B(z) = m^{-1}(0).
BlaschkeProduct post_compose(const BlaschkeProduct& b, const Moebius& m);

// Degree n+1 Blaschke products with one critical point of multiplicity n at
// -1 + 1/n; they converge stably to the singular inner function with a unit
// boundary atom at -1.
BlaschkeProduct boundary_atom_family(int n);

// Family parameter helpers for the boundary-atom family.
inline double boundary_atom_family_zero(int n) { return -1.0 + 1.0 / double(n); }

}  // namespace innerlab
