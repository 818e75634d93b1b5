#pragma once

#include <vector>

#include "gaussmap/polynomial.hpp"
#include "gaussmap/types.hpp"

namespace gaussmap {

struct Mobius {
    // z -> (a z + b) / (c z + d), ad - bc != 0
    Complex a{1}, b{0}, c{0}, d{1};

    static Mobius identity() { return {}; }

    ExtComplex eval(const ExtComplex& z) const;
    Mobius inverse() const { return {d, -b, -c, a}; }

    // Unique Mobius map sending (z0, z1, z2) to (w0, w1, w2); points may be infinite.
    static Mobius through(const ExtComplex z[3], const ExtComplex w[3]);

    // The Mobius transformation induced on the stereographic chart by a rotation
    // of the sphere (built from the images of three reference points).
    static Mobius from_rotation(const Mat3& rot);
};

class RationalMap {
public:
    RationalMap() : num_(Polynomial::constant(0.0)), den_(Polynomial::constant(1.0)) {}
    RationalMap(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    int degree() const { return std::max(num_.degree(), den_.degree()); }
    bool is_zero() const { return num_.is_zero(); }

    ExtComplex eval(const ExtComplex& z) const;
    Complex eval_finite(Complex z) const;  // throws PoleAt near a denominator zero
    ExtComplex value_at_infinity() const;

    RationalMap derivative() const;

    RationalMap operator+(const RationalMap& o) const;
    RationalMap operator-(const RationalMap& o) const;
    RationalMap operator*(const RationalMap& o) const;
    RationalMap operator/(const RationalMap& o) const;
    RationalMap operator*(Complex s) const { return RationalMap(num_ * s, den_); }

    // Cancels matching numerator/denominator roots, then verifies the reduced
    // map agrees with the original at sample points.
    RationalMap simplified(double tol = 1e-7) const;

    // Minimum distance between numerator and denominator roots, relative.
    double coprimality_margin() const;

    // M(f): composition with a Mobius transformation on the target side.
    RationalMap compose_mobius_left(const Mobius& m) const;

    // Finite poles with multiplicity; add_infinity reports a pole at infinity
    // (order deg(num) - deg(den)) as well.
    std::vector<std::pair<ExtComplex, int>> poles(double cluster_tol = 1e-6) const;

    // Pole order of the 1-form f(z) dz at a point (0 if regular there).
    int form_pole_order(const ExtComplex& w, double match_tol = 1e-6) const;

private:
    Polynomial num_, den_;
};

}  // namespace gaussmap
