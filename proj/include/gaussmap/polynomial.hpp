#pragma once

#include <utility>
#include <vector>

#include "gaussmap/types.hpp"

namespace gaussmap {

// Dense polynomial over the complex numbers, coefficients in ascending degree.
// The zero polynomial has an empty coefficient vector.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Complex> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial constant(Complex c) { return Polynomial({c}); }
    static Polynomial from_roots(const std::vector<Complex>& roots, Complex lead = 1.0);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
    const std::vector<Complex>& coeffs() const { return c_; }
    Complex coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(k)] : Complex(0);
    }
    Complex lead() const { return c_.empty() ? Complex(0) : c_.back(); }
    double coeff_scale() const;

    Complex eval(Complex z) const;                       // Horner
    std::pair<Complex, Complex> eval_with_derivative(Complex z) const;
    Polynomial derivative() const;
    Polynomial antiderivative() const;  // constant term 0
    Polynomial reversed() const;        // z^deg * p(1/z)

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(Complex s) const;

    // All complex roots, counted with multiplicity (simultaneous iteration with
    // Newton polishing; deflation fallback when iteration stalls).
    // warm_start may seed the iteration with degree() many guesses.
    std::vector<Complex> roots(const std::vector<Complex>* warm_start = nullptr) const;

    // Roots grouped into multiplicity clusters.
    std::vector<std::pair<Complex, int>> root_clusters(double tol = 1e-6) const;

    void trim(double rel_tol = 0.0);

private:
    std::vector<Complex> c_;
};

// Groups a root list into (location, multiplicity) clusters.
std::vector<std::pair<Complex, int>> cluster_points(std::vector<Complex> pts, double tol);

}  // namespace gaussmap
