#include "innerlab/inner_function.hpp"

#include <algorithm>
#include <cmath>

#include "innerlab/poly_roots.hpp"

namespace innerlab {

namespace {

constexpr double kMergeTol = 1e-12;
constexpr double kAtomTol = 1e-12;

}  // namespace

BlaschkeProduct::BlaschkeProduct(std::vector<Zero> zeros_, double rotation_)
    : rotation(rotation_) {
    for (const Zero& zr : zeros_) {
        if (!is_finite(zr.point) || std::abs(zr.point) >= 1.0)
            throw std::invalid_argument("BlaschkeProduct: zeros must lie in the open disk");
        if (zr.multiplicity < 1)
            throw std::invalid_argument("BlaschkeProduct: multiplicities must be positive");
        bool merged = false;
        for (Zero& existing : zeros) {
            if (std::abs(existing.point - zr.point) <= kMergeTol) {
                existing.multiplicity += zr.multiplicity;
                merged = true;
                break;
            }
        }
        if (!merged) zeros.push_back(zr);
    }
    if (zeros.empty()) throw std::invalid_argument("BlaschkeProduct: needs at least one zero");
    std::sort(zeros.begin(), zeros.end(), [](const Zero& l, const Zero& r) {
        if (l.point.real() != r.point.real()) return l.point.real() < r.point.real();
        return l.point.imag() < r.point.imag();
    });
}

BlaschkeProduct BlaschkeProduct::monomial(int degree, double rotation) {
    if (degree < 1) throw std::invalid_argument("monomial: degree must be >= 1");
    return BlaschkeProduct({{Complex(0.0, 0.0), degree}}, rotation);
}

int BlaschkeProduct::degree() const {
    int d = 0;
    for (const Zero& z : zeros) d += z.multiplicity;
    return d;
}

Complex BlaschkeProduct::operator()(const Complex& z) const {
    Complex value = unit(rotation);
    for (const Zero& zr : zeros) {
        Complex factor = (z - zr.point) / (1.0 - std::conj(zr.point) * z);
        for (int k = 0; k < zr.multiplicity; ++k) value *= factor;
    }
    return value;
}

Complex BlaschkeProduct::derivative(const Complex& z) const {
    // B' = sum_k m_k f_k' f_k^{m_k-1} prod_{j != k} f_j^{m_j}, assembled from
    // prefix/suffix products so it stays finite at the zeros themselves.
    const std::size_t n = zeros.size();
    std::vector<Complex> value(n), deriv(n);
    for (std::size_t k = 0; k < n; ++k) {
        Complex den = 1.0 - std::conj(zeros[k].point) * z;
        value[k] = (z - zeros[k].point) / den;
        deriv[k] = (1.0 - std::norm(zeros[k].point)) / (den * den);
    }
    std::vector<Complex> powers(n), prefix(n + 1), suffix(n + 1);
    for (std::size_t k = 0; k < n; ++k) powers[k] = std::pow(value[k], zeros[k].multiplicity);
    prefix[0] = Complex(1.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) prefix[k + 1] = prefix[k] * powers[k];
    suffix[n] = Complex(1.0, 0.0);
    for (std::size_t k = n; k-- > 0;) suffix[k] = suffix[k + 1] * powers[k];

    Complex total(0.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        Complex reduced = std::pow(value[k], zeros[k].multiplicity - 1);
        total += double(zeros[k].multiplicity) * deriv[k] * reduced * prefix[k] * suffix[k + 1];
    }
    return unit(rotation) * total;
}

SingularAtomicInner::SingularAtomicInner(std::vector<Atom> atoms_) : atoms(std::move(atoms_)) {
    for (const Atom& a : atoms) {
        if (!(a.mass > 0.0) || !std::isfinite(a.mass))
            throw std::invalid_argument("SingularAtomicInner: masses must be positive");
    }
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& l, const Atom& r) { return wrap_angle(l.theta) < wrap_angle(r.theta); });
}

SingularAtomicInner SingularAtomicInner::point_mass(double theta, double mass) {
    return SingularAtomicInner({{theta, mass}});
}

double SingularAtomicInner::atom_distance(const Complex& z) const {
    double best = std::numeric_limits<double>::infinity();
    for (const Atom& a : atoms) best = std::min(best, std::abs(z - unit(a.theta)));
    return best;
}

Complex SingularAtomicInner::operator()(const Complex& z) const {
    if (atom_distance(z) <= kAtomTol)
        throw std::domain_error("SingularAtomicInner: evaluation at a singular atom");
    Complex exponent(0.0, 0.0);
    for (const Atom& a : atoms) {
        Complex zeta = unit(a.theta);
        exponent -= a.mass * (zeta + z) / (zeta - z);
    }
    return std::exp(exponent);
}

Complex SingularAtomicInner::derivative(const Complex& z) const {
    Complex s = (*this)(z);
    Complex factor(0.0, 0.0);
    for (const Atom& a : atoms) {
        Complex zeta = unit(a.theta);
        Complex den = zeta - z;
        factor -= a.mass * 2.0 * zeta / (den * den);
    }
    return s * factor;
}

InnerFunctionRep::InnerFunctionRep(std::optional<BlaschkeProduct> b,
                                   std::optional<SingularAtomicInner> s, Moebius post_)
    : blaschke(std::move(b)), singular(std::move(s)), post(post_) {
    if (!blaschke && !singular)
        throw std::invalid_argument("InnerFunctionRep: at least one factor required");
}

InnerFunctionRep InnerFunctionRep::identity() {
    return InnerFunctionRep(BlaschkeProduct({{Complex(0.0, 0.0), 1}}), std::nullopt);
}

Complex InnerFunctionRep::operator()(const Complex& z) const {
    if (std::abs(z) > 1.0 + 1e-12)
        throw std::domain_error("InnerFunctionRep: evaluation outside the closed disk");
    Complex w(1.0, 0.0);
    if (blaschke) w *= (*blaschke)(z);
    if (singular) w *= (*singular)(z);
    return post.is_identity() ? w : post(w);
}

Complex InnerFunctionRep::derivative(const Complex& z) const {
    if (std::abs(z) > 1.0 + 1e-12)
        throw std::domain_error("InnerFunctionRep: evaluation outside the closed disk");
    Complex b(1.0, 0.0), bp(0.0, 0.0), s(1.0, 0.0), sp(0.0, 0.0);
    if (blaschke) {
        b = (*blaschke)(z);
        bp = blaschke->derivative(z);
    }
    if (singular) {
        s = (*singular)(z);
        sp = singular->derivative(z);
    }
    Complex inner_deriv = bp * s + b * sp;
    if (post.is_identity()) return inner_deriv;
    return post.derivative(b * s) * inner_deriv;
}

Complex evaluate(const InnerFunctionRep& f, const Complex& z) { return f(z); }
Complex derivative(const InnerFunctionRep& f, const Complex& z) { return f.derivative(z); }

double pullback_density(const InnerFunctionRep& f, const Complex& z) {
    if (std::abs(z) >= 1.0) throw std::domain_error("pullback_density: |z| must be < 1");
    Complex w = f(z);
    double denom = 1.0 - std::norm(w);
    if (denom <= 0.0) throw std::domain_error("pullback_density: |F(z)| >= 1 numerically");
    return 2.0 * std::abs(f.derivative(z)) / denom;
}

InnerFunctionRep frostman_shift(const InnerFunctionRep& f, const Complex& a) {
    if (std::abs(a) >= 1.0) throw std::domain_error("frostman_shift: |a| must be < 1");
    InnerFunctionRep shifted = f;
    shifted.post = Moebius(a, 0.0) * f.post;
    return shifted;
}

BlaschkeProduct post_compose(const BlaschkeProduct& b, const Moebius& m) {
    // Zeros of m o B are the solutions of B(z) = m^{-1}(0) = a_m.
    Complex target = m.a;
    int d = b.degree();
    // Numerator and denominator of B in polynomial form.
    Polynomial num{Complex(1.0, 0.0)}, den{Complex(1.0, 0.0)};
    for (const auto& zr : b.zeros) {
        for (int k = 0; k < zr.multiplicity; ++k) {
            num = poly_mul(num, {-zr.point, Complex(1.0, 0.0)});
            den = poly_mul(den, {Complex(1.0, 0.0), -std::conj(zr.point)});
        }
    }
    Polynomial shifted = poly_sub(poly_scale(num, unit(b.rotation)), poly_scale(den, target));
    std::vector<Complex> roots = find_roots(shifted);
    if (static_cast<int>(roots.size()) != d)
        throw std::runtime_error("post_compose: level-set root count mismatch");

    std::vector<BlaschkeProduct::Zero> zeros;
    zeros.reserve(roots.size());
    for (const Complex& r : roots) {
        if (std::abs(r) >= 1.0)
            throw std::runtime_error("post_compose: root escaped the open disk");
        zeros.push_back({r, 1});
    }
    BlaschkeProduct out(zeros, 0.0);
    // Fix the unimodular factor at a probe point away from the new zeros.
    Complex probe(0.3123, 0.1717);
    Complex want = m(b(probe));
    Complex have = out(probe);
    out.rotation = std::arg(want / have);
    return out;
}

BlaschkeProduct boundary_atom_family(int n) {
    if (n < 1) throw std::invalid_argument("boundary_atom_family: n must be >= 1");
    Complex c(boundary_atom_family_zero(n), 0.0);
    return BlaschkeProduct({{c, n + 1}}, 0.0);
}

}  // namespace innerlab
