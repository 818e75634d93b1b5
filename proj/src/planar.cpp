#include "gaussmap/planar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace gaussmap {

namespace {

std::vector<Vec2> dedupe(const std::vector<Vec2>& pts, double tol) {
    std::vector<Vec2> out;
    out.reserve(pts.size());
    for (const Vec2& p : pts) {
        if (out.empty() || (p - out.back()).norm() > tol) out.push_back(p);
    }
    if (out.size() > 1 && (out.front() - out.back()).norm() <= tol) out.pop_back();
    return out;
}

double curve_diameter(const std::vector<Vec2>& pts) {
    double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
    for (const Vec2& p : pts) {
        lo_x = std::min(lo_x, p.x);
        hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_y = std::max(hi_y, p.y);
    }
    return std::hypot(hi_x - lo_x, hi_y - lo_y);
}

double turn_angle(const Vec2& u, const Vec2& v) { return std::atan2(u.cross(v), u.dot(v)); }

struct SegHit {
    size_t i, j;
    double u, v;
    Vec2 point;
    double sin_angle;
    int theta;
};

// all intersections between non-adjacent segments of a closed polyline,
// pruned with an x-interval sweep
std::vector<SegHit> segment_hits(const std::vector<Vec2>& p) {
    const size_t n = p.size();
    auto seg = [&](size_t k, Vec2& a, Vec2& b) {
        a = p[k];
        b = p[(k + 1) % n];
    };
    struct Item {
        double xmin, xmax;
        size_t k;
    };
    std::vector<Item> items(n);
    for (size_t k = 0; k < n; ++k) {
        Vec2 a, b;
        seg(k, a, b);
        items[k] = {std::min(a.x, b.x), std::max(a.x, b.x), k};
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.xmin < b.xmin; });

    std::vector<SegHit> hits;
    std::vector<size_t> active;
    for (const Item& it : items) {
        active.erase(std::remove_if(active.begin(), active.end(),
                                    [&](size_t idx) { return items[idx].xmax < it.xmin; }),
                     active.end());
        for (size_t idx : active) {
            size_t i = items[idx].k, j = it.k;
            if (i == j) continue;
            size_t lo = std::min(i, j), hi = std::max(i, j);
            if (hi - lo == 1 || (lo == 0 && hi == n - 1)) continue;  // adjacent
            Vec2 a, b, c, d;
            seg(lo, a, b);
            seg(hi, c, d);
            Vec2 r = b - a, s = d - c;
            double den = r.cross(s);
            double scale = r.norm() * s.norm();
            if (scale <= 0) continue;
            if (std::abs(den) < 1e-14 * scale) continue;  // parallel
            Vec2 q = c - a;
            double u = q.cross(s) / den;
            double v = q.cross(r) / den;
            if (u < 0 || u >= 1 || v < 0 || v >= 1) continue;
            SegHit h;
            h.i = lo;
            h.j = hi;
            h.u = u;
            h.v = v;
            h.point = a + r * u;
            h.sin_angle = std::abs(den) / scale;
            h.theta = (den < 0) ? 1 : -1;  // negative base of (earlier, later) tangents
            hits.push_back(h);
        }
        active.push_back(static_cast<size_t>(&it - items.data()));
    }
    return hits;
}

}  // namespace

double polyline_signed_area(const std::vector<Vec2>& pts) {
    double acc = 0;
    const size_t n = pts.size();
    for (size_t k = 0; k < n; ++k) {
        const Vec2& a = pts[k];
        const Vec2& b = pts[(k + 1) % n];
        acc += a.cross(b);
    }
    return 0.5 * acc;
}

double polyline_rotation_number(const std::vector<Vec2>& pts) {
    std::vector<Vec2> p = dedupe(pts, 1e-13 * (1.0 + curve_diameter(pts)));
    const size_t n = p.size();
    if (n < 3) return 0;
    double total = 0;
    for (size_t k = 0; k < n; ++k) {
        Vec2 u = p[(k + 1) % n] - p[k];
        Vec2 v = p[(k + 2) % n] - p[(k + 1) % n];
        total += turn_angle(u, v);
    }
    return total / kTwoPi;
}

bool open_polyline_self_intersects(const std::vector<Vec2>& pts) {
    const size_t n = pts.size();
    if (n < 4) return false;
    for (size_t i = 0; i + 1 < n; ++i) {
        for (size_t j = i + 2; j + 1 < n; ++j) {
            Vec2 a = pts[i], b = pts[i + 1], c = pts[j], d = pts[j + 1];
            Vec2 r = b - a, s = d - c;
            double den = r.cross(s);
            if (std::abs(den) < 1e-16 * r.norm() * s.norm()) continue;
            Vec2 q = c - a;
            double u = q.cross(s) / den;
            double v = q.cross(r) / den;
            if (u > 0 && u < 1 && v > 0 && v < 1) return true;
        }
    }
    return false;
}

OpenArcShape open_polyline_shape(const std::vector<Vec2>& pts, double angle_tol) {
    OpenArcShape out;
    std::vector<Vec2> p = dedupe(pts, 1e-13 * (1.0 + curve_diameter(pts)));
    if (p.size() < 3) {
        out.convex = true;
        return out;
    }
    double pos = 0, neg = 0;
    for (size_t k = 0; k + 2 < p.size(); ++k) {
        double a = turn_angle(p[k + 1] - p[k], p[k + 2] - p[k + 1]);
        out.total_turning += a;
        if (a > angle_tol) pos += a;
        if (a < -angle_tol) neg += -a;
    }
    out.convex = (std::min(pos, neg) < 1e-3 * std::max(1e-300, std::max(pos, neg)));
    out.self_intersects = open_polyline_self_intersects(p);
    return out;
}

int winding_number(const std::vector<Vec2>& pts, const Vec2& q) {
    int w = 0;
    const size_t n = pts.size();
    auto is_left = [](const Vec2& a, const Vec2& b, const Vec2& p) {
        return (b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y);
    };
    for (size_t k = 0; k < n; ++k) {
        const Vec2& a = pts[k];
        const Vec2& b = pts[(k + 1) % n];
        if (a.y <= q.y) {
            if (b.y > q.y && is_left(a, b, q) > 0) ++w;
        } else {
            if (b.y <= q.y && is_left(a, b, q) < 0) --w;
        }
    }
    return w;
}

WhitneyCounts whitney_counts(const std::vector<Vec2>& closed_polyline, const WhitneyOptions& opts) {
    double diam = curve_diameter(closed_polyline);
    std::vector<Vec2> p = dedupe(closed_polyline, 1e-12 * (1.0 + diam));
    const size_t n = p.size();
    if (n < 3) throw Error(ErrorKind::NotNormal, "degenerate polyline");

    // outside starting point: support point in a generic direction.  The set of
    // near-maximal vertices must be one contiguous arc, so the curve touches
    // the support line only once.
    WhitneyCounts out;
    size_t best_vertex = 0;
    Vec2 dir;
    bool found = false;
    for (int attempt = 0; attempt < 64 && !found; ++attempt) {
        double ang = 2.39996322972865332 * attempt + 0.2;  // golden-angle sequence
        Vec2 d(std::cos(ang), std::sin(ang));
        double hi = -1e300;
        size_t hi_k = 0;
        for (size_t k = 0; k < n; ++k) {
            double v = p[k].dot(d);
            if (v > hi) {
                hi = v;
                hi_k = k;
            }
        }
        double gap = 1e-5 * (1.0 + diam);
        bool contiguous = true;
        for (size_t k = 0; k < n; ++k) {
            if (p[k].dot(d) > hi - gap) {
                size_t fwd = (k + n - hi_k) % n;
                size_t back = (hi_k + n - k) % n;
                if (std::min(fwd, back) > n / 8) {
                    contiguous = false;
                    break;
                }
            }
        }
        if (contiguous) {
            best_vertex = hi_k;
            dir = d;
            found = true;
        }
    }
    if (!found) throw Error(ErrorKind::NotNormal, "no clean outside starting point");

    std::rotate(p.begin(), p.begin() + static_cast<long>(best_vertex), p.end());
    out.support_vertex = static_cast<int>(best_vertex);
    out.support_direction = dir;

    // rotation number
    out.rho_raw = polyline_rotation_number(p);
    out.rho = static_cast<int>(std::lround(out.rho_raw));
    if (opts.require_integer_rho && std::abs(out.rho_raw - out.rho) > 0.05) {
        std::ostringstream ss;
        ss << "rotation number " << out.rho_raw << " is not close to an integer";
        throw Error(ErrorKind::NotNormal, ss.str());
    }

    // mu: after moving the support point to the origin with the curve in the
    // upper half plane, mu is the sign of the starting tangent's first
    // component; that frame rotation sends dir to -e2.
    Vec2 tangent = (p[1] - p[n - 1]).unit();
    double mu_sign = tangent.dot(dir.rot90());
    if (std::abs(mu_sign) < 1e-12)
        throw Error(ErrorKind::NotNormal, "tangent at the outside starting point is degenerate");
    out.mu = mu_sign > 0 ? 1 : -1;

    // simple crossings
    auto hits = segment_hits(p);
    for (const SegHit& h : hits) {
        if (h.sin_angle < opts.tangential_tol)
            throw Error(ErrorKind::NotNormal, "tangential self-intersection");
        PlanarCrossing c;
        c.s1 = static_cast<double>(h.i) + h.u;
        c.s2 = static_cast<double>(h.j) + h.v;
        c.point = h.point;
        c.theta = h.theta;
        out.crossings.push_back(c);
    }
    std::sort(out.crossings.begin(), out.crossings.end(),
              [](const PlanarCrossing& a, const PlanarCrossing& b) { return a.s1 < b.s1; });
    for (size_t i = 0; i < out.crossings.size(); ++i)
        for (size_t j = i + 1; j < out.crossings.size(); ++j)
            if ((out.crossings[i].point - out.crossings[j].point).norm() <
                opts.duplicate_tol * (1.0 + diam))
                throw Error(ErrorKind::NotNormal, "triple or coincident self-intersection");
    for (const auto& c : out.crossings) (c.theta > 0 ? out.theta_plus : out.theta_minus)++;

    // nesting cancellation: repeatedly remove the innermost interleaved pair of
    // opposite-sign crossings whose spanned arcs do not meet
    std::vector<size_t> live(out.crossings.size());
    std::iota(live.begin(), live.end(), size_t{0});
    bool changed = true;
    while (changed) {
        changed = false;
        double best_span = 1e300;
        size_t best_a = 0, best_b = 0;
        bool have = false;
        for (size_t ia = 0; ia < live.size(); ++ia) {
            for (size_t ib = 0; ib < live.size(); ++ib) {
                if (ia == ib) continue;
                const PlanarCrossing& a = out.crossings[live[ia]];
                const PlanarCrossing& b = out.crossings[live[ib]];
                // pattern t1 < t2 < t1' < t2' with disjoint spanned arcs
                if (!(a.s1 < b.s1 && b.s1 < a.s2 && a.s2 < b.s2)) continue;
                if (a.theta + b.theta != 0) continue;
                bool blocked = false;
                for (size_t ic = 0; ic < live.size() && !blocked; ++ic) {
                    if (ic == ia || ic == ib) continue;
                    const PlanarCrossing& c = out.crossings[live[ic]];
                    bool u_in = (c.s1 > a.s1 && c.s1 < b.s1);
                    bool v_in = (c.s2 > a.s2 && c.s2 < b.s2);
                    if (u_in && v_in) blocked = true;
                }
                if (blocked) continue;
                double span = b.s2 - a.s1;
                if (span < best_span) {
                    best_span = span;
                    best_a = ia;
                    best_b = ib;
                    have = true;
                }
            }
        }
        if (have) {
            out.crossings[live[best_a]].true_crossing = false;
            out.crossings[live[best_b]].true_crossing = false;
            size_t hi = std::max(best_a, best_b), lo = std::min(best_a, best_b);
            live.erase(live.begin() + static_cast<long>(hi));
            live.erase(live.begin() + static_cast<long>(lo));
            changed = true;
        }
    }
    for (size_t k : live)
        (out.crossings[k].theta > 0 ? out.theta_plus_true : out.theta_minus_true)++;

    return out;
}

}  // namespace gaussmap
