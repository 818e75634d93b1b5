#pragma once

#include <string>
#include <vector>

#include "gaussmap/types.hpp"

namespace gaussmap {

// Closed polyline utilities for the plane-curve bookkeeping: rotation numbers,
// signed self-crossings with the nesting cancellation that leaves only true
// crossings, and the outside-starting-point sign mu.

double polyline_signed_area(const std::vector<Vec2>& pts);

// Total tangent turning / 2pi of a closed polyline.
double polyline_rotation_number(const std::vector<Vec2>& pts);

// Self-intersection test for an open polyline (adjacent segments excluded).
bool open_polyline_self_intersects(const std::vector<Vec2>& pts);

// Total absolute turning of an open polyline plus convexity (single turning sign).
struct OpenArcShape {
    double total_turning = 0;
    bool convex = false;
    bool self_intersects = false;
};
OpenArcShape open_polyline_shape(const std::vector<Vec2>& pts, double angle_tol = 1e-9);

// Winding number of a closed polyline around a point.
int winding_number(const std::vector<Vec2>& pts, const Vec2& p);

struct PlanarCrossing {
    double s1 = 0, s2 = 0;  // curve parameters (vertex index + fraction), s1 < s2,
                            // measured from the outside starting point
    Vec2 point;
    int theta = 0;          // +1 when {gamma'(s1), gamma'(s2)} is a negative base
    bool true_crossing = true;
};

struct WhitneyCounts {
    double rho_raw = 0;    // turning / 2pi before integer rounding
    int rho = 0;
    int mu = 0;            // outside-starting-point sign
    int theta_plus = 0, theta_minus = 0;    // all simple crossings
    int theta_plus_true = 0, theta_minus_true = 0;  // after nesting cancellation
    int support_vertex = 0;                 // index into the input polyline
    Vec2 support_direction;
    std::vector<PlanarCrossing> crossings;  // parameters relative to the re-rooted curve
    int identity_residual() const { return rho - (mu + theta_plus_true - theta_minus_true); }
};

struct WhitneyOptions {
    double tangential_tol = 1e-8;  // |sin angle| below this at a crossing -> NotNormal
    double duplicate_tol = 1e-9;   // crossing points closer than this -> NotNormal
    bool require_integer_rho = true;
};

// Full Whitney bookkeeping for a closed normal curve.  Throws NotNormal for
// tangential or coincident intersections.
WhitneyCounts whitney_counts(const std::vector<Vec2>& closed_polyline,
                             const WhitneyOptions& opts = {});

}  // namespace gaussmap
