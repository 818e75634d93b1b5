#include "gaussmap/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gaussmap/quadrature.hpp"

namespace gaussmap {

WeierstrassData::WeierstrassData(RationalMap g_, RationalMap h_, std::vector<ExtComplex> ends_,
                                 std::string name_)
    : g(std::move(g_)), h(std::move(h_)), ends(std::move(ends_)), name(std::move(name_)) {
    const Polynomial& p = g.num();
    const Polynomial& q = g.den();
    const Polynomial& r = h.num();
    const Polynomial& s = h.den();

    Polynomial q2 = q * q, p2 = p * p, pq = p * q;
    RationalMap phi1(Polynomial((q2 - p2) * r) * Complex(0.5), Polynomial(pq * s));
    RationalMap phi2(Polynomial((q2 + p2) * r) * Complex(0, 0.5), Polynomial(pq * s));
    phi[0] = phi1.simplified();
    phi[1] = phi2.simplified();
    phi[2] = h.simplified();
    for (int i = 0; i < 3; ++i) phi_prime[static_cast<size_t>(i)] = phi[static_cast<size_t>(i)].derivative().simplified();
    g_prime = g.derivative().simplified();
    g_inv = RationalMap(q, p);
    g_inv_prime = g_inv.derivative().simplified();
    metric_hg = (h * g).simplified();
    metric_hog = (h / g).simplified();
}

bool WeierstrassData::is_end(const ExtComplex& z, double tol) const {
    for (const auto& e : ends) {
        if (z.infinite || e.infinite) {
            if (z.infinite && e.infinite) return true;
            continue;
        }
        if (std::abs(z.value - e.value) <= tol * (1.0 + std::abs(e.value))) return true;
    }
    return false;
}

std::array<Complex, 3> eval_phi(const WeierstrassData& data, Complex z) {
    std::array<Complex, 3> out;
    for (int i = 0; i < 3; ++i) {
        ExtComplex v = data.phi[static_cast<size_t>(i)].eval(ExtComplex(z));
        if (v.infinite) {
            std::ostringstream ss;
            ss << "phi_" << (i + 1) << " has a pole at (" << z.real() << ", " << z.imag() << ")";
            throw Error(ErrorKind::PoleAt, ss.str());
        }
        out[static_cast<size_t>(i)] = v.value;
    }
    return out;
}

Vec3 eval_gauss(const WeierstrassData& data, const ExtComplex& z) {
    return sphere_point(data.g.eval(z));
}

MetricSample curvature_and_metric(const WeierstrassData& data, Complex z) {
    // lambda = (|h g| + |h/g|)/2 evaluated through reduced products so zeros of
    // g compensated by h stay finite.
    ExtComplex a = data.metric_hg.eval(ExtComplex(z));
    ExtComplex b = data.metric_hog.eval(ExtComplex(z));
    if (a.infinite || b.infinite)
        throw Error(ErrorKind::PoleAt, "metric evaluated at a pole of the height differential");
    double lambda = 0.5 * (std::abs(a.value) + std::abs(b.value));
    if (lambda < 1e-300) throw Error(ErrorKind::MetricDegenerate, "metric factor underflow");

    // spherical derivative |g'| / (1 + |g|^2), via the 1/g chart when |g| > 1
    ExtComplex gv = data.g.eval(ExtComplex(z));
    double gsharp;
    if (!gv.infinite && std::abs(gv.value) <= 1.0) {
        Complex gp = data.g_prime.eval_finite(z);
        gsharp = std::abs(gp) / (1.0 + std::norm(gv.value));
    } else {
        ExtComplex iv = data.g_inv.eval(ExtComplex(z));
        Complex ip = data.g_inv_prime.eval_finite(z);
        gsharp = std::abs(ip) / (1.0 + std::norm(iv.value));
    }
    double root = 2.0 * gsharp / lambda;
    return {lambda, -root * root};
}

DegreeAndBranches degree_and_branch_points(const WeierstrassData& data) {
    DegreeAndBranches out;
    const Polynomial& p = data.g.num();
    const Polynomial& q = data.g.den();
    out.n = data.g.degree();

    Polynomial w = p.derivative() * q - p * q.derivative();
    w.trim(1e-12);
    int total_expected = 2 * out.n - 2;
    if (!w.is_zero()) {
        for (auto& [loc, mult] : w.root_clusters(1e-6))
            out.branches.push_back({ExtComplex(loc), mult});
    }
    int finite_total = 0;
    for (auto& b : out.branches) finite_total += b.order;
    int at_inf = total_expected - finite_total;
    if (at_inf > 0) out.branches.push_back({ExtComplex::inf(), at_inf});
    out.branch_total = finite_total + std::max(at_inf, 0);
    return out;
}

std::vector<EndData> geometric_indices(const WeierstrassData& data) {
    std::vector<EndData> out;
    for (const auto& w : data.ends) {
        int max_order = 0;
        for (int i = 0; i < 3; ++i)
            max_order = std::max(max_order, data.phi[static_cast<size_t>(i)].form_pole_order(w));
        if (max_order <= 1) {
            std::ostringstream ss;
            ss << "end " << (w.infinite ? std::string("inf") : std::to_string(w.value.real()))
               << " has maximal pole order " << max_order << " < 2";
            throw Error(ErrorKind::NotComplete, ss.str());
        }
        EndData e;
        e.end = w;
        e.geometric_index = max_order - 1;
        e.gauss_image = eval_gauss(data, w);
        out.push_back(e);
    }
    return out;
}

namespace {

double point_segment_distance(Complex p, Complex a, Complex b, double& t_out) {
    Complex ab = b - a;
    double denom = std::norm(ab);
    double t = denom > 0 ? std::clamp(((p - a) * std::conj(ab)).real() / denom, 0.0, 1.0) : 0.0;
    t_out = t;
    return std::abs(p - (a + t * ab));
}

double pole_clearance(Complex p, const std::vector<Complex>& poles) {
    double nearest = 1e300;
    for (Complex q : poles) {
        if (std::abs(q - p) < 1e-12) continue;
        nearest = std::min(nearest, std::abs(q - p));
    }
    if (nearest > 1e299) nearest = 0.5 * (1.0 + std::abs(p));
    return 0.5 * nearest;
}

}  // namespace

std::vector<Complex> route_path(Complex from, Complex to, const std::vector<Complex>& poles) {
    std::vector<Complex> path{from};
    Complex cursor = from;
    int guard = 0;
    while (guard++ < 64) {
        // nearest clearance violation along the remaining straight run
        int worst = -1;
        double worst_t = 2.0;
        double worst_r = 0.0;
        for (size_t i = 0; i < poles.size(); ++i) {
            double r = pole_clearance(poles[i], poles);
            r = std::min(r, 0.8 * std::min(std::abs(from - poles[i]), std::abs(to - poles[i])));
            if (r <= 0) continue;
            double t;
            double d = point_segment_distance(poles[i], cursor, to, t);
            if (d < r && t > 1e-12 && t < worst_t) {
                worst = static_cast<int>(i);
                worst_t = t;
                worst_r = r;
            }
        }
        if (worst < 0) break;
        Complex p = poles[static_cast<size_t>(worst)];
        double r = worst_r;
        Complex dir = (to - cursor) / std::abs(to - cursor);
        // chord/circle intersection
        Complex rel = cursor - p;
        double bq = (rel * std::conj(dir)).real();
        double cq = std::norm(rel) - r * r;
        double disc = bq * bq - cq;
        if (disc <= 0) break;
        double t1 = -bq - std::sqrt(disc), t2 = -bq + std::sqrt(disc);
        t1 = std::max(t1, 0.0);
        Complex entry = cursor + t1 * dir;
        Complex exit = cursor + std::min(t2, std::abs(to - cursor)) * dir;
        double a0 = std::arg(entry - p), a1 = std::arg(exit - p);
        double sweep = a1 - a0;
        while (sweep > kPi) sweep -= kTwoPi;
        while (sweep < -kPi) sweep += kTwoPi;
        // walk the arc on the side away from the closest other pole
        Complex mid_ccw = p + r * std::polar(1.0, a0 + 0.5 * (sweep >= 0 ? sweep : sweep + kTwoPi));
        Complex mid_cw = p + r * std::polar(1.0, a0 + 0.5 * (sweep <= 0 ? sweep : sweep - kTwoPi));
        double d_ccw = 1e300, d_cw = 1e300;
        for (Complex q : poles) {
            if (std::abs(q - p) < 1e-12) continue;
            d_ccw = std::min(d_ccw, std::abs(mid_ccw - q));
            d_cw = std::min(d_cw, std::abs(mid_cw - q));
        }
        if (d_cw > d_ccw) {
            sweep = (sweep <= 0) ? sweep : sweep - kTwoPi;
        } else {
            sweep = (sweep >= 0) ? sweep : sweep + kTwoPi;
        }
        int steps = std::max(2, static_cast<int>(std::ceil(std::abs(sweep) / (kPi / 9))));
        path.push_back(entry);
        for (int k = 1; k <= steps; ++k)
            path.push_back(p + r * std::polar(1.0, a0 + sweep * k / steps));
        cursor = path.back();
    }
    path.push_back(to);
    return path;
}

Vec3 immersion_increment(const WeierstrassData& data, Complex from, Complex to, double rel_tol) {
    Complex dz = to - from;
    auto f = [&](double t) -> Vec3 {
        Complex z = from + t * dz;
        auto ph = eval_phi(data, z);
        return {(ph[0] * dz).real(), (ph[1] * dz).real(), (ph[2] * dz).real()};
    };
    return integrate_adaptive<Vec3>(f, 0.0, 1.0, rel_tol, 1e-14);
}

Vec3 eval_immersion(const WeierstrassData& data, Complex z, Complex basepoint, double rel_tol) {
    std::vector<Complex> finite_poles;
    for (int i = 0; i < 3; ++i)
        for (auto& [loc, mult] : data.phi[static_cast<size_t>(i)].poles())
            if (!loc.infinite) finite_poles.push_back(loc.value);
    for (Complex p : finite_poles) {
        if (std::abs(z - p) < 1e-10 || std::abs(basepoint - p) < 1e-10)
            throw Error(ErrorKind::PathThroughPole, "immersion endpoint at a pole");
    }
    std::vector<Complex> path = route_path(basepoint, z, finite_poles);
    Vec3 acc;
    for (size_t k = 0; k + 1 < path.size(); ++k)
        acc += immersion_increment(data, path[k], path[k + 1], rel_tol);
    return acc;
}

std::array<double, 3> real_period(const WeierstrassData& data, Complex center, double radius,
                                  double rel_tol) {
    auto f = [&](double theta) -> Vec3 {
        Complex z = center + radius * std::polar(1.0, theta);
        Complex dz = radius * std::polar(1.0, theta) * Complex(0, 1);
        auto ph = eval_phi(data, z);
        return {(ph[0] * dz).real(), (ph[1] * dz).real(), (ph[2] * dz).real()};
    };
    Vec3 v = integrate_adaptive<Vec3>(f, 0.0, kTwoPi, rel_tol, 1e-13);
    return {v.x, v.y, v.z};
}

std::vector<std::pair<ExtComplex, int>> gauss_preimages(const WeierstrassData& data,
                                                        const ExtComplex& value,
                                                        double cluster_tol) {
    const Polynomial& p = data.g.num();
    const Polynomial& q = data.g.den();
    int n = data.g.degree();
    std::vector<std::pair<ExtComplex, int>> out;
    Polynomial target;
    if (value.infinite) {
        target = q;
    } else {
        target = p - q * value.value;
    }
    target.trim(1e-11 * std::max(1.0, target.coeff_scale()));
    int fin = 0;
    if (!target.is_zero() && target.degree() >= 1) {
        for (auto& [loc, mult] : target.root_clusters(cluster_tol)) {
            out.push_back({ExtComplex(loc), mult});
            fin += mult;
        }
    }
    if (fin < n) out.push_back({ExtComplex::inf(), n - fin});
    return out;
}

namespace {

std::string ext_to_string(const ExtComplex& z) {
    if (z.infinite) return "inf";
    std::ostringstream ss;
    ss << "(" << z.value.real() << ", " << z.value.imag() << ")";
    return ss.str();
}

}  // namespace

ValidityReport validate_data(const WeierstrassData& data, const ValidateOptions& opts) {
    ValidityReport rep;

    rep.coprimality_margin = data.g.coprimality_margin();
    if (rep.coprimality_margin < 1e-9)
        rep.add(ErrorKind::DegenerateData, "gauss map numerator and denominator share a root", true);

    // poles of the immersion forms must sit at ends
    for (int i = 0; i < 3; ++i) {
        for (auto& [loc, mult] : data.phi[static_cast<size_t>(i)].poles()) {
            (void)mult;
            if (!data.is_end(loc, 1e-6))
                rep.add(ErrorKind::PoleAt,
                        "phi_" + std::to_string(i + 1) + " has a pole away from the ends at " +
                            ext_to_string(loc),
                        true);
        }
    }

    // real periods around each end (big loop enclosing the finite poles stands
    // in for the end at infinity)
    double maxp = 0.0;
    std::vector<Complex> finite_poles;
    for (int i = 0; i < 3; ++i)
        for (auto& [loc, mult] : data.phi[static_cast<size_t>(i)].poles())
            if (!loc.infinite) finite_poles.push_back(loc.value);
    for (const auto& w : data.ends) {
        Complex center;
        double radius;
        if (w.infinite) {
            double r = 1.0;
            for (Complex pz : finite_poles) r = std::max(r, std::abs(pz));
            center = 0;
            radius = 2.0 * r + 1.0;
        } else {
            center = w.value;
            double nearest = 1e300;
            for (Complex pz : finite_poles)
                if (std::abs(pz - center) > 1e-10) nearest = std::min(nearest, std::abs(pz - center));
            radius = (nearest > 1e299) ? 0.5 : 0.4 * nearest;
        }
        auto res = real_period(data, center, radius);
        rep.period_residuals.push_back(res);
        for (double v : res) maxp = std::max(maxp, std::abs(v));
    }
    if (maxp > opts.period_tol)
        rep.add(ErrorKind::PeriodViolation,
                "real period residual " + std::to_string(maxp) + " exceeds tolerance", true);

    // AE.5: Gauss image of every end off the equator (hard); distance from the
    // poles is reported but not enforced -- the model surfaces have ends there.
    double min_eq = 1e300, min_pole = 1e300;
    for (const auto& w : data.ends) {
        Vec3 gw = eval_gauss(data, w);
        min_eq = std::min(min_eq, std::abs(gw.z));
        min_pole = std::min(min_pole, std::min((gw - Vec3{0, 0, 1}).norm(), (gw - Vec3{0, 0, -1}).norm()));
    }
    rep.min_end_equator_distance = data.ends.empty() ? 1.0 : min_eq;
    rep.min_end_pole_distance = data.ends.empty() ? 1.0 : min_pole;
    if (rep.min_end_equator_distance < opts.equator_tol)
        rep.add(ErrorKind::EndOnCircle, "an end maps onto the singular circle (AE.5)", true);

    // AE.4: no branch point on the singular set
    auto db = degree_and_branch_points(data);
    double min_branch_gap = 1e300;
    for (const auto& b : db.branches) {
        ExtComplex gv = data.g.eval(b.location);
        double dist = gv.infinite ? 1.0 : std::abs(std::abs(gv.value) - 1.0);
        min_branch_gap = std::min(min_branch_gap, dist);
        if (dist < opts.branch_tol)
            rep.add(ErrorKind::BranchOnCircle,
                    "branch point at " + ext_to_string(b.location) + " lies on the singular set (AE.4)",
                    true);
        bool near_pole = gv.infinite || std::abs(gv.value) < 1e-8 || std::abs(gv.value) > 1e8;
        if (near_pole && !data.is_end(b.location))
            rep.add(ErrorKind::AEViolation,
                    "branch point over a projection pole at " + ext_to_string(b.location),
                    false);
    }

    // metric positivity and curvature along the unit-circle preimage
    double min_lambda = 1e300, min_absK = 1e300;
    const Polynomial& p = data.g.num();
    const Polynomial& q = data.g.den();
    std::vector<Complex> warm;
    for (int k = 0; k < opts.sigma_samples; ++k) {
        double theta = kTwoPi * k / opts.sigma_samples;
        Polynomial target = p - q * std::polar(1.0, theta);
        if (target.degree() < data.g.degree()) continue;
        std::vector<Complex> roots = target.roots(warm.empty() ? nullptr : &warm);
        warm = roots;
        for (Complex z : roots) {
            if (data.is_end(ExtComplex(z), 1e-6)) continue;
            try {
                MetricSample m = curvature_and_metric(data, z);
                min_lambda = std::min(min_lambda, m.lambda);
                min_absK = std::min(min_absK, std::abs(m.K));
            } catch (const Error&) {
            }
        }
    }
    // coarse grid samples of the metric away from ends
    for (int i = -opts.grid_samples; i <= opts.grid_samples; ++i) {
        for (int j = -opts.grid_samples; j <= opts.grid_samples; ++j) {
            Complex z(1.7 * i / opts.grid_samples + 0.003, 1.7 * j / opts.grid_samples + 0.007);
            if (data.is_end(ExtComplex(z), 1e-3)) continue;
            try {
                MetricSample m = curvature_and_metric(data, z);
                min_lambda = std::min(min_lambda, m.lambda);
                if (m.K > 1e-12)
                    rep.add(ErrorKind::AEViolation, "positive curvature sample", true);
            } catch (const Error&) {
            }
        }
    }
    rep.min_metric_sample = min_lambda;
    rep.min_abs_K_on_sigma = min_absK;
    if (min_lambda < 1e-12)
        rep.add(ErrorKind::MetricDegenerate, "metric factor vanishes at a sample point", true);

    return rep;
}

}  // namespace gaussmap
