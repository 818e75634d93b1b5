#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "gaussmap/rational.hpp"
#include "gaussmap/types.hpp"

namespace gaussmap {

struct EndData {
    ExtComplex end;
    int geometric_index = 0;  // I(w) >= 1
    Vec3 gauss_image;
};

struct BranchRecord {
    ExtComplex location;
    int order = 0;  // beta >= 1
};

// Genus-zero Weierstrass data: Gauss map g, height differential dh = h dz,
// and the set of ends.  The component maps of the immersion form,
// phi = ( (1/g - g) h / 2, i (1/g + g) h / 2, h ), are cached in reduced form
// so they stay evaluable where g has a zero or pole that h compensates.
struct WeierstrassData {
    RationalMap g;
    RationalMap h;
    std::vector<ExtComplex> ends;
    std::string name;

    std::array<RationalMap, 3> phi;        // reduced
    std::array<RationalMap, 3> phi_prime;  // derivatives of the reduced maps
    RationalMap g_prime;
    RationalMap g_inv, g_inv_prime;        // 1/g in reduced form, for the |g| > 1 chart
    RationalMap metric_hg, metric_hog;     // h*g and h/g reduced, for the metric factor

    WeierstrassData(RationalMap g_, RationalMap h_, std::vector<ExtComplex> ends_,
                    std::string name_ = "");

    bool is_end(const ExtComplex& z, double tol = 1e-8) const;
};

std::array<Complex, 3> eval_phi(const WeierstrassData& data, Complex z);

// G(z) on the whole sphere; poles of g map to the north pole.
Vec3 eval_gauss(const WeierstrassData& data, const ExtComplex& z);

// Conformal factor lambda (ds = lambda |dz|) and Gaussian curvature K.
struct MetricSample {
    double lambda = 0;
    double K = 0;
};
MetricSample curvature_and_metric(const WeierstrassData& data, Complex z);

struct DegreeAndBranches {
    int n = 0;
    std::vector<BranchRecord> branches;
    int branch_total = 0;  // sum of beta, equals 2n - 2 for genus zero
};
DegreeAndBranches degree_and_branch_points(const WeierstrassData& data);

std::vector<EndData> geometric_indices(const WeierstrassData& data);

// Straight path from `from` to `to`, re-routed around the listed poles with a
// clearance radius of half the distance to the nearest other pole.
std::vector<Complex> route_path(Complex from, Complex to, const std::vector<Complex>& poles);

// x(z) = Re int_basepoint^z phi, along a pole-avoiding piecewise-linear path.
Vec3 eval_immersion(const WeierstrassData& data, Complex z, Complex basepoint,
                    double rel_tol = 1e-11);

// Integral of phi along one straight segment (no routing).
Vec3 immersion_increment(const WeierstrassData& data, Complex from, Complex to,
                         double rel_tol = 1e-11);

// Re of the loop integral of each phi_i around a small circle centred at c.
std::array<double, 3> real_period(const WeierstrassData& data, Complex center, double radius,
                                  double rel_tol = 1e-11);

struct ValidityIssue {
    ErrorKind kind;
    std::string detail;
    bool hard = true;  // hard issues abort analysis, soft ones are informational
};

struct ValidityReport {
    bool ok = true;  // no hard violations
    std::vector<ValidityIssue> issues;
    std::vector<std::array<double, 3>> period_residuals;  // per end
    double min_metric_sample = 0;
    double min_abs_K_on_sigma = 0;           // AE.4 along the traced circle preimage
    double min_end_equator_distance = 0;     // AE.5, |J(G(w))| over ends
    double min_end_pole_distance = 0;        // distance of G(w) from the poles (informational)
    double coprimality_margin = 0;

    void add(ErrorKind kind, const std::string& detail, bool hard_issue) {
        issues.push_back({kind, detail, hard_issue});
        if (hard_issue) ok = false;
    }
};

struct ValidateOptions {
    double equator_tol = 1e-6;   // minimum |J| at ends (AE.5 hard check)
    double branch_tol = 1e-6;    // minimum | |g|-1 | at branch points (AE.4 hard check)
    double period_tol = 1e-7;
    int sigma_samples = 64;
    int grid_samples = 9;
};

ValidityReport validate_data(const WeierstrassData& data, const ValidateOptions& opts = {});

// Points z with g(z) = value, with multiplicity, including the point at
// infinity when the fibre passes through it.
std::vector<std::pair<ExtComplex, int>> gauss_preimages(const WeierstrassData& data,
                                                        const ExtComplex& value,
                                                        double cluster_tol = 1e-6);

}  // namespace gaussmap
