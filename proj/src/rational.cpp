#include "gaussmap/rational.hpp"

#include <algorithm>
#include <cmath>

namespace gaussmap {

ExtComplex Mobius::eval(const ExtComplex& z) const {
    if (z.infinite) {
        if (std::abs(c) < 1e-300) return ExtComplex::inf();
        return ExtComplex(a / c);
    }
    Complex den = c * z.value + d;
    Complex num = a * z.value + b;
    if (std::abs(den) <= 1e-14 * (std::abs(c * z.value) + std::abs(d)) || std::abs(den) < 1e-300)
        return ExtComplex::inf();
    return ExtComplex(num / den);
}

Mobius Mobius::through(const ExtComplex z[3], const ExtComplex w[3]) {
    // cross-ratio map sending (p0,p1,p2) -> (0,1,inf)
    auto to_std = [](const ExtComplex p[3]) -> Mobius {
        // M(z) = (z-p0)(p1-p2) / ((z-p2)(p1-p0)) with infinity handled by limits
        if (p[0].infinite) {
            // (p1-p2)/(z-p2)
            Complex p1 = p[1].finite(), p2 = p[2].finite();
            return {Complex(0), p1 - p2, Complex(1), -p2};
        }
        if (p[1].infinite) {
            Complex p0 = p[0].finite(), p2 = p[2].finite();
            return {Complex(1), -p0, Complex(1), -p2};
        }
        if (p[2].infinite) {
            Complex p0 = p[0].finite(), p1 = p[1].finite();
            return {Complex(1), -p0, Complex(0), p1 - p0};
        }
        Complex p0 = p[0].finite(), p1 = p[1].finite(), p2 = p[2].finite();
        return {p1 - p2, -p0 * (p1 - p2), p1 - p0, -p2 * (p1 - p0)};
    };
    Mobius mz = to_std(z);
    Mobius mw = to_std(w);
    Mobius mwi = mw.inverse();
    // compose mwi . mz
    return {mwi.a * mz.a + mwi.b * mz.c, mwi.a * mz.b + mwi.b * mz.d,
            mwi.c * mz.a + mwi.d * mz.c, mwi.c * mz.b + mwi.d * mz.d};
}

Mobius Mobius::from_rotation(const Mat3& rot) {
    // Map three reference points through the rotation on the sphere.  Reference
    // points are re-picked if an image lands too close to the north pole, where
    // the chart coordinate blows up.
    const ExtComplex candidates[6] = {ExtComplex(0.0, 0.0),   ExtComplex(1.0, 0.0),
                                      ExtComplex::inf(),      ExtComplex(0.0, 1.0),
                                      ExtComplex(-1.0, 0.0),  ExtComplex(0.5, -0.5)};
    ExtComplex zs[3], ws[3];
    int picked = 0;
    for (const auto& cand : candidates) {
        Vec3 img = rot * sphere_point(cand);
        ExtComplex w = (img.z > 1.0 - 1e-9) ? ExtComplex::inf() : stereo_project(img);
        if (!w.infinite && std::abs(w.value) > 1e6) continue;  // ill-conditioned
        zs[picked] = cand;
        ws[picked] = w;
        if (++picked == 3) break;
    }
    if (picked < 3) throw Error(ErrorKind::Internal, "from_rotation: could not pick chart points");
    Mobius m = through(zs, ws);
    // normalize determinant for conditioning
    Complex det = m.a * m.d - m.b * m.c;
    Complex s = 1.0 / std::sqrt(det);
    m.a *= s; m.b *= s; m.c *= s; m.d *= s;
    return m;
}

RationalMap::RationalMap(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(ErrorKind::DegenerateData, "RationalMap: zero denominator");
    // normalize so the denominator has unit leading coefficient
    Complex lead = den_.lead();
    num_ = num_ * (1.0 / lead);
    den_ = den_ * (1.0 / lead);
}

ExtComplex RationalMap::eval(const ExtComplex& z) const {
    if (z.infinite) return value_at_infinity();
    // evaluate in the w = 1/z chart when |z| is large, for conditioning
    Complex zz = z.value;
    Complex n, d;
    if (std::abs(zz) > 2.0) {
        Complex w = 1.0 / zz;
        int dn = num_.degree(), dd = den_.degree(), top = std::max(dn, dd);
        n = num_.reversed().eval(w);
        d = den_.reversed().eval(w);
        for (int k = dn; k < top; ++k) n *= w;
        for (int k = dd; k < top; ++k) d *= w;
    } else {
        n = num_.eval(zz);
        d = den_.eval(zz);
    }
    double scale = num_.coeff_scale() + den_.coeff_scale();
    if (std::abs(d) < 1e-14 * scale && std::abs(d) <= 1e-10 * std::abs(n))
        return ExtComplex::inf();
    if (std::abs(d) < 1e-300) return ExtComplex::inf();
    return ExtComplex(n / d);
}

Complex RationalMap::eval_finite(Complex z) const {
    ExtComplex v = eval(ExtComplex(z));
    if (v.infinite)
        throw Error(ErrorKind::PoleAt, "RationalMap: evaluation at a pole");
    return v.value;
}

ExtComplex RationalMap::value_at_infinity() const {
    int dn = num_.degree(), dd = den_.degree();
    if (num_.is_zero()) return ExtComplex(0.0, 0.0);
    if (dn > dd) return ExtComplex::inf();
    if (dn < dd) return ExtComplex(0.0, 0.0);
    return ExtComplex(num_.lead() / den_.lead());
}

RationalMap RationalMap::derivative() const {
    return RationalMap(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalMap RationalMap::operator+(const RationalMap& o) const {
    return RationalMap(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RationalMap RationalMap::operator-(const RationalMap& o) const {
    return RationalMap(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
RationalMap RationalMap::operator*(const RationalMap& o) const {
    return RationalMap(num_ * o.num_, den_ * o.den_);
}
RationalMap RationalMap::operator/(const RationalMap& o) const {
    if (o.num_.is_zero()) throw Error(ErrorKind::DegenerateData, "RationalMap: division by zero map");
    return RationalMap(num_ * o.den_, den_ * o.num_);
}

RationalMap RationalMap::simplified(double tol) const {
    if (num_.is_zero()) return RationalMap(Polynomial::constant(0.0), Polynomial::constant(1.0));
    std::vector<Complex> nr = num_.roots();
    std::vector<Complex> dr = den_.roots();
    std::vector<bool> used(dr.size(), false);
    std::vector<Complex> nr_keep;
    for (const Complex& r : nr) {
        bool cancelled = false;
        for (size_t j = 0; j < dr.size(); ++j) {
            if (used[j]) continue;
            if (std::abs(r - dr[j]) <= tol * (1.0 + std::abs(r))) {
                used[j] = true;
                cancelled = true;
                break;
            }
        }
        if (!cancelled) nr_keep.push_back(r);
    }
    std::vector<Complex> dr_keep;
    for (size_t j = 0; j < dr.size(); ++j)
        if (!used[j]) dr_keep.push_back(dr[j]);
    if (nr_keep.size() == nr.size()) return *this;  // nothing cancelled

    Complex nl = num_.lead(), dl = den_.lead();
    RationalMap reduced(Polynomial::from_roots(nr_keep, nl), Polynomial::from_roots(dr_keep, dl));
    // accept the reduction only if it reproduces the original map
    const Complex samples[5] = {{0.37, 0.18}, {-1.21, 0.77}, {0.05, -1.44}, {2.3, 1.9}, {-0.6, -0.35}};
    for (Complex s : samples) {
        ExtComplex v0 = eval(ExtComplex(s));
        ExtComplex v1 = reduced.eval(ExtComplex(s));
        if (v0.infinite || v1.infinite) continue;
        double mag = 1.0 + std::abs(v0.value);
        if (std::abs(v0.value - v1.value) > 1e-6 * mag) return *this;
    }
    return reduced;
}

double RationalMap::coprimality_margin() const {
    if (num_.degree() < 1 || den_.degree() < 1) return 1e9;
    std::vector<Complex> nr = num_.roots();
    std::vector<Complex> dr = den_.roots();
    double best = 1e9;
    for (const Complex& a : nr)
        for (const Complex& b : dr)
            best = std::min(best, std::abs(a - b) / (1.0 + std::abs(a)));
    return best;
}

RationalMap RationalMap::compose_mobius_left(const Mobius& m) const {
    // (a f + b) / (c f + d) with f = num/den
    Polynomial n = num_ * m.a + den_ * m.b;
    Polynomial d = num_ * m.c + den_ * m.d;
    return RationalMap(std::move(n), std::move(d));
}

std::vector<std::pair<ExtComplex, int>> RationalMap::poles(double cluster_tol) const {
    std::vector<std::pair<ExtComplex, int>> out;
    for (auto& [loc, mult] : den_.root_clusters(cluster_tol)) out.push_back({ExtComplex(loc), mult});
    int inf_order = num_.degree() - den_.degree();
    if (inf_order > 0) out.push_back({ExtComplex::inf(), inf_order});
    return out;
}

int RationalMap::form_pole_order(const ExtComplex& w, double match_tol) const {
    if (w.infinite) {
        // in the chart u = 1/z the form f(z) dz picks up a factor -1/u^2
        return num_.degree() - den_.degree() + 2;
    }
    int order = 0;
    for (auto& [loc, mult] : den_.root_clusters(match_tol)) {
        if (std::abs(loc - w.value) <= match_tol * (1.0 + std::abs(loc))) order += mult;
    }
    return order;
}

}  // namespace gaussmap
