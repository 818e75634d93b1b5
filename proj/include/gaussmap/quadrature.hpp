#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "gaussmap/types.hpp"

namespace gaussmap {

namespace quad_detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
struct GK15 {
    static constexpr std::array<double, 8> xk = {
        0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
        0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
    static constexpr std::array<double, 8> wk = {
        0.209482141084728, 0.204432940075298, 0.190350578064785, 0.169004726639267,
        0.140653259715525, 0.104790010322250, 0.063092092629979, 0.022935322010529};
    static constexpr std::array<double, 4> wg = {
        0.417959183673469, 0.381830050505119, 0.279705391489277, 0.129484966168870};
};

inline double vnorm(double v) { return std::abs(v); }
inline double vnorm(const Complex& v) { return std::abs(v); }
inline double vnorm(const Vec3& v) { return v.norm(); }

template <typename T>
T vzero();
template <>
inline double vzero<double>() { return 0.0; }
template <>
inline Complex vzero<Complex>() { return Complex(0); }
template <>
inline Vec3 vzero<Vec3>() { return Vec3(); }

}  // namespace quad_detail

// Adaptive Gauss-Kronrod on a real interval, bisecting until the embedded
// error estimate meets the tolerance.
template <typename T, typename F>
T integrate_adaptive(F&& f, double a, double b, double rel_tol = 1e-10, double abs_tol = 1e-13,
                     int max_depth = 28) {
    using namespace quad_detail;
    struct Frame {
        double a, b;
        int depth;
    };
    auto gk = [&f](double lo, double hi, T& kron, double& err) {
        double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        T y0 = f(mid);
        kron = y0 * GK15::wk[0];
        T gauss = y0 * GK15::wg[0];
        for (int i = 1; i < 8; ++i) {
            double dx = half * GK15::xk[static_cast<size_t>(i)];
            T y = f(mid + dx) + f(mid - dx);
            kron += y * GK15::wk[static_cast<size_t>(i)];
            if (i % 2 == 0) gauss += y * GK15::wg[static_cast<size_t>(i / 2)];
        }
        kron = kron * half;
        gauss = gauss * half;
        double diff = vnorm(kron - gauss);
        err = 200.0 * diff * std::sqrt(std::max(diff, 1e-300));
        err = std::min(err, diff * 200.0);
    };

    T total = vzero<T>();
    double scale = 0.0;
    std::vector<Frame> stack{{a, b, 0}};
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        T kron;
        double err;
        gk(fr.a, fr.b, kron, err);
        scale = std::max(scale, vnorm(kron));
        if (err <= abs_tol + rel_tol * std::max(1.0, scale) || fr.depth >= max_depth) {
            total += kron;
        } else {
            double mid = 0.5 * (fr.a + fr.b);
            stack.push_back({fr.a, mid, fr.depth + 1});
            stack.push_back({mid, fr.b, fr.depth + 1});
        }
    }
    return total;
}

}  // namespace gaussmap
