#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace gaussmap {

using Complex = std::complex<double>;

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

// Extended complex plane: a finite value or the point at infinity.
// Infinity is an explicit tag, never a large-magnitude proxy.
struct ExtComplex {
    Complex value{0.0, 0.0};
    bool infinite = false;

    ExtComplex() = default;
    ExtComplex(Complex v) : value(v) {}
    ExtComplex(double re, double im) : value(re, im) {}

    static ExtComplex inf() {
        ExtComplex e;
        e.infinite = true;
        return e;
    }

    bool is_inf() const { return infinite; }
    Complex finite() const {
        if (infinite) throw std::domain_error("ExtComplex: finite() on the point at infinity");
        return value;
    }
};

inline bool ext_close(const ExtComplex& a, const ExtComplex& b, double tol) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return std::abs(a.value - b.value) <= tol * (1.0 + std::abs(a.value));
}

// Chordal distance on the Riemann sphere, convenient for matching points near infinity.
inline double chordal_dist(const ExtComplex& a, const ExtComplex& b) {
    auto lift = [](const ExtComplex& e, double& x, double& y, double& z) {
        if (e.infinite) { x = 0; y = 0; z = 1; return; }
        double n = std::norm(e.value);
        x = 2 * e.value.real() / (1 + n);
        y = 2 * e.value.imag() / (1 + n);
        z = (n - 1) / (1 + n);
    };
    double ax, ay, az, bx, by, bz;
    lift(a, ax, ay, az);
    lift(b, bx, by, bz);
    return std::sqrt((ax - bx) * (ax - bx) + (ay - by) * (ay - by) + (az - bz) * (az - bz));
}

struct Vec2 {
    double x = 0, y = 0;
    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}
    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
    Vec2 unit() const {
        double n = norm();
        return n > 0 ? Vec2{x / n, y / n} : Vec2{0, 0};
    }
    Vec2 rot90() const { return {-y, x}; }
};

struct Vec3 {
    double x = 0, y = 0, z = 0;
    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}
    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    Vec3 unit() const {
        double n = norm();
        return n > 0 ? Vec3{x / n, y / n, z / n} : Vec3{0, 0, 0};
    }
    Vec2 horizontal() const { return {x, y}; }
};

struct Mat3 {
    // row-major
    double m[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

    static Mat3 identity() { return {}; }

    Vec3 operator*(const Vec3& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
    }
    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                r.m[i][j] = 0;
                for (int k = 0; k < 3; ++k) r.m[i][j] += m[i][k] * o.m[k][j];
            }
        return r;
    }
    Mat3 transposed() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
        return r;
    }
    double det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    static Mat3 axis_angle(Vec3 axis, double angle) {
        Vec3 u = axis.unit();
        double c = std::cos(angle), s = std::sin(angle), t = 1 - c;
        Mat3 r;
        r.m[0][0] = c + u.x * u.x * t;
        r.m[0][1] = u.x * u.y * t - u.z * s;
        r.m[0][2] = u.x * u.z * t + u.y * s;
        r.m[1][0] = u.y * u.x * t + u.z * s;
        r.m[1][1] = c + u.y * u.y * t;
        r.m[1][2] = u.y * u.z * t - u.x * s;
        r.m[2][0] = u.z * u.x * t - u.y * s;
        r.m[2][1] = u.z * u.y * t + u.x * s;
        r.m[2][2] = c + u.z * u.z * t;
        return r;
    }
};

enum class ErrorKind {
    PoleAt,
    DegenerateData,
    PathThroughPole,
    PeriodViolation,
    MetricDegenerate,
    NotComplete,
    BranchOnCircle,
    EndOnCircle,
    DegenerateSecondOrder,
    InconclusiveAtTolerance,
    ArcTooShort,
    NotNormal,
    AmbiguousRegion,
    Disagreement,
    AEViolation,
    EpsilonTooLarge,
    TargetTooFar,
    NotProperRegion,
    ParseError,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::PoleAt: return "PoleAt";
        case ErrorKind::DegenerateData: return "DegenerateData";
        case ErrorKind::PathThroughPole: return "PathThroughPole";
        case ErrorKind::PeriodViolation: return "PeriodViolation";
        case ErrorKind::MetricDegenerate: return "MetricDegenerate";
        case ErrorKind::NotComplete: return "NotComplete";
        case ErrorKind::BranchOnCircle: return "BranchOnCircle";
        case ErrorKind::EndOnCircle: return "EndOnCircle";
        case ErrorKind::DegenerateSecondOrder: return "DegenerateSecondOrder";
        case ErrorKind::InconclusiveAtTolerance: return "InconclusiveAtTolerance";
        case ErrorKind::ArcTooShort: return "ArcTooShort";
        case ErrorKind::NotNormal: return "NotNormal";
        case ErrorKind::AmbiguousRegion: return "AmbiguousRegion";
        case ErrorKind::Disagreement: return "Disagreement";
        case ErrorKind::AEViolation: return "AEViolation";
        case ErrorKind::EpsilonTooLarge: return "EpsilonTooLarge";
        case ErrorKind::TargetTooFar: return "TargetTooFar";
        case ErrorKind::NotProperRegion: return "NotProperRegion";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

// Inverse stereographic projection onto the unit sphere; 0 maps to the south
// pole, infinity to the north pole.  This is the convention that puts the
// singular set of the vertical projection at |g| = 1.
inline Vec3 sphere_point(const ExtComplex& zeta) {
    if (zeta.infinite) return {0, 0, 1};
    double n = std::norm(zeta.value);
    double d = 1.0 + n;
    return {2 * zeta.value.real() / d, 2 * zeta.value.imag() / d, (n - 1) / d};
}

inline ExtComplex stereo_project(const Vec3& p) {
    if (std::abs(1.0 - p.z) < 1e-14) return ExtComplex::inf();
    return ExtComplex(Complex(p.x, p.y) / (1.0 - p.z));
}

}  // namespace gaussmap
