#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gaussmap/polynomial.hpp"

using namespace gaussmap;

namespace {

bool contains_root(const std::vector<Complex>& roots, Complex r, double tol = 1e-9) {
    for (Complex z : roots)
        if (std::abs(z - r) < tol * (1.0 + std::abs(r))) return true;
    return false;
}

}  // namespace

TEST_CASE("degree and trim") {
    Polynomial zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);

    Polynomial p({Complex(1), Complex(0), Complex(0)});
    CHECK(p.degree() == 0);

    Polynomial q({Complex(2), Complex(-3), Complex(1)});
    CHECK(q.degree() == 2);
    CHECK(q.eval(1.0) == Complex(0));
    CHECK(q.eval(2.0) == Complex(0));
}

TEST_CASE("roots of small polynomials") {
    // (z-1)(z-2) = 2 - 3z + z^2
    Polynomial q({Complex(2), Complex(-3), Complex(1)});
    auto r = q.roots();
    REQUIRE(r.size() == 2);
    CHECK(contains_root(r, 1.0));
    CHECK(contains_root(r, 2.0));

    // z^2 + 1
    Polynomial c({Complex(1), Complex(0), Complex(1)});
    auto rc = c.roots();
    CHECK(contains_root(rc, Complex(0, 1)));
    CHECK(contains_root(rc, Complex(0, -1)));
}

TEST_CASE("roots of a degree-7 polynomial with known zeros") {
    std::vector<Complex> want = {{1, 0}, {-2, 0}, {0.5, 0.5}, {0.5, -0.5}, {0, 3}, {-1, -1}, {2.5, 0.25}};
    Polynomial p = Polynomial::from_roots(want, Complex(2, 1));
    auto got = p.roots();
    REQUIRE(got.size() == want.size());
    for (Complex w : want) CHECK(contains_root(got, w, 1e-8));
}

TEST_CASE("multiple roots cluster with the right multiplicity") {
    std::vector<Complex> want = {{1, 1}, {1, 1}, {-2, 0}};
    Polynomial p = Polynomial::from_roots(want);
    auto clusters = p.root_clusters(1e-5);
    int total = 0;
    bool found_double = false;
    for (auto& [loc, mult] : clusters) {
        total += mult;
        if (mult == 2) {
            found_double = true;
            CHECK(std::abs(loc - Complex(1, 1)) < 1e-5);
        }
    }
    CHECK(total == 3);
    CHECK(found_double);
}

TEST_CASE("derivative matches finite differences") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> coeffs;
    for (int i = 0; i < 6; ++i) coeffs.emplace_back(u(rng), u(rng));
    Polynomial p(coeffs);
    Polynomial dp = p.derivative();
    for (int k = 0; k < 25; ++k) {
        Complex z(u(rng), u(rng));
        double h = 1e-6;
        Complex fd = (p.eval(z + h) - p.eval(z - h)) / (2 * h);
        CHECK(std::abs(fd - dp.eval(z)) < 1e-7 * (1.0 + std::abs(dp.eval(z))));
    }
}

TEST_CASE("reversed gives the 1/z chart") {
    Polynomial p({Complex(3), Complex(0, 2), Complex(1)});  // 3 + 2i z + z^2
    Complex z(0.2, -0.4);
    Complex lhs = p.reversed().eval(z);
    Complex rhs = std::pow(z, 2) * p.eval(1.0 / z);
    CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("warm started roots track a moving target") {
    std::vector<Complex> warm;
    for (int k = 0; k <= 50; ++k) {
        double theta = 0.02 * k;
        Polynomial p = Polynomial::from_roots(
            {std::polar(1.0, theta), std::polar(1.0, theta + 2.0), std::polar(1.3, -theta)});
        auto r = p.roots(warm.empty() ? nullptr : &warm);
        REQUIRE(r.size() == 3);
        CHECK(contains_root(r, std::polar(1.0, theta), 1e-8));
        warm = r;
    }
}
