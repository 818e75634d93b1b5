#include "gaussmap/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace gaussmap {

void Polynomial::trim(double rel_tol) {
    double scale = 0.0;
    for (const auto& c : c_) scale = std::max(scale, std::abs(c));
    double cut = rel_tol * scale;
    while (!c_.empty() && std::abs(c_.back()) <= cut) c_.pop_back();
}

double Polynomial::coeff_scale() const {
    double s = 0.0;
    for (const auto& c : c_) s = std::max(s, std::abs(c));
    return s;
}

Polynomial Polynomial::from_roots(const std::vector<Complex>& roots, Complex lead) {
    // ascending-order multiplication by (z - r), one root at a time
    std::vector<Complex> c{lead};
    for (Complex r : roots) {
        c.push_back(0.0);
        for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k)
            c[static_cast<size_t>(k)] = c[static_cast<size_t>(k - 1)] - r * c[static_cast<size_t>(k)];
        c[0] = -r * c[0];
    }
    return Polynomial(std::move(c));
}

Complex Polynomial::eval(Complex z) const {
    Complex acc = 0.0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
    return acc;
}

std::pair<Complex, Complex> Polynomial::eval_with_derivative(Complex z) const {
    Complex p = 0.0, dp = 0.0;
    for (size_t i = c_.size(); i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c_[i];
    }
    return {p, dp};
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Complex> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<double>(k);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
    std::vector<Complex> a(c_.size() + 1, Complex(0));
    for (size_t k = 0; k < c_.size(); ++k) a[k + 1] = c_[k] / static_cast<double>(k + 1);
    return Polynomial(std::move(a));
}

Polynomial Polynomial::reversed() const {
    std::vector<Complex> r(c_.rbegin(), c_.rend());
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Complex> r(std::max(c_.size(), o.c_.size()), Complex(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    Polynomial p(std::move(r));
    p.trim(1e-14);
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * Complex(-1.0); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Complex> r(c_.size() + o.c_.size() - 1, Complex(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(Complex s) const {
    std::vector<Complex> r = c_;
    for (auto& c : r) c *= s;
    return Polynomial(std::move(r));
}

namespace {

// One Weierstrass/Durand-Kerner sweep; returns max relative update.
double dk_sweep(const Polynomial& p, std::vector<Complex>& z) {
    const int n = static_cast<int>(z.size());
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        Complex denom = p.lead();
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            denom *= (z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]);
        }
        if (std::abs(denom) < 1e-300) {
            z[static_cast<size_t>(i)] += Complex(1e-8, 1e-8);
            worst = std::max(worst, 1.0);
            continue;
        }
        Complex delta = p.eval(z[static_cast<size_t>(i)]) / denom;
        z[static_cast<size_t>(i)] -= delta;
        worst = std::max(worst, std::abs(delta) / (1.0 + std::abs(z[static_cast<size_t>(i)])));
    }
    return worst;
}

Complex newton_polish(const Polynomial& p, Complex z, int iters = 8) {
    for (int k = 0; k < iters; ++k) {
        auto [v, dv] = p.eval_with_derivative(z);
        if (std::abs(dv) < 1e-300) break;
        Complex step = v / dv;
        z -= step;
        if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) break;
    }
    return z;
}

}  // namespace

std::vector<Complex> Polynomial::roots(const std::vector<Complex>* warm_start) const {
    const int n = degree();
    if (n <= 0) return {};
    if (n == 1) return {-c_[0] / c_[1]};
    if (n == 2) {
        // numerically stable quadratic
        Complex a = c_[2], b = c_[1], c = c_[0];
        Complex disc = std::sqrt(b * b - 4.0 * a * c);
        if ((conj(b) * disc).real() < 0) disc = -disc;
        Complex q = -0.5 * (b + disc);
        Complex r1 = (std::abs(q) > 0) ? q / a : Complex(0);
        Complex r2 = (std::abs(q) > 0) ? c / q : -b / a - r1;
        return {r1, r2};
    }

    std::vector<Complex> z;
    if (warm_start && static_cast<int>(warm_start->size()) == n) {
        z = *warm_start;
        // nudge coincident seeds apart
        for (size_t i = 0; i < z.size(); ++i)
            for (size_t j = 0; j < i; ++j)
                if (std::abs(z[i] - z[j]) < 1e-12) z[i] += Complex(1e-9, 2e-9);
    } else {
        double radius = 0.0;
        double lead_abs = std::abs(lead());
        for (int k = 0; k < n; ++k)
            radius = std::max(radius, std::pow(std::abs(coeff(k)) / lead_abs, 1.0 / (n - k)));
        radius = 1.0 + radius;
        z.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            double ang = kTwoPi * i / n + 0.41;
            z[static_cast<size_t>(i)] = radius * Complex(std::cos(ang), std::sin(ang));
        }
    }

    double worst = 1.0;
    for (int iter = 0; iter < 400; ++iter) {
        worst = dk_sweep(*this, z);
        if (worst < 1e-14) break;
    }

    if (worst >= 1e-10) {
        // deflation fallback: peel roots off one at a time
        Polynomial q = *this;
        std::vector<Complex> out;
        for (int k = 0; k < n; ++k) {
            Complex r = newton_polish(q, z.empty() ? Complex(0.3, 0.7) : z[static_cast<size_t>(k % n)], 80);
            out.push_back(r);
            // synthetic division by (z - r)
            std::vector<Complex> qc = q.coeffs();
            std::vector<Complex> nc(qc.size() - 1);
            Complex carry = qc.back();
            for (size_t i = qc.size() - 1; i-- > 0;) {
                nc[i] = carry;
                carry = qc[i] + carry * r;
            }
            q = Polynomial(std::move(nc));
            if (q.degree() <= 0) break;
        }
        for (auto& r : out) r = newton_polish(*this, r, 12);
        z = out;
        z.resize(static_cast<size_t>(n), Complex(0));
    } else {
        for (auto& r : z) r = newton_polish(*this, r, 4);
    }
    return z;
}

std::vector<std::pair<Complex, int>> cluster_points(std::vector<Complex> pts, double tol) {
    std::vector<std::pair<Complex, int>> out;
    std::vector<bool> used(pts.size(), false);
    for (size_t i = 0; i < pts.size(); ++i) {
        if (used[i]) continue;
        Complex sum = pts[i];
        int count = 1;
        used[i] = true;
        for (size_t j = i + 1; j < pts.size(); ++j) {
            if (used[j]) continue;
            if (std::abs(pts[j] - sum / static_cast<double>(count)) <=
                tol * (1.0 + std::abs(pts[j]))) {
                sum += pts[j];
                ++count;
                used[j] = true;
            }
        }
        out.emplace_back(sum / static_cast<double>(count), count);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
        return a.first.imag() < b.first.imag();
    });
    return out;
}

std::vector<std::pair<Complex, int>> Polynomial::root_clusters(double tol) const {
    return cluster_points(roots(), tol);
}

}  // namespace gaussmap
