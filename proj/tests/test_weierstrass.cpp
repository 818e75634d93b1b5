#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gaussmap/catalog.hpp"
#include "gaussmap/weierstrass.hpp"

using namespace gaussmap;

namespace {

WeierstrassData make(const std::string& name) { return catalog_surface(name); }

bool has_end_index(const std::vector<EndData>& ends, bool at_inf, Complex loc, int index) {
    for (const auto& e : ends) {
        if (e.end.infinite != at_inf) continue;
        if (!at_inf && std::abs(e.end.value - loc) > 1e-8) continue;
        return e.geometric_index == index;
    }
    return false;
}

}  // namespace

TEST_CASE("eval_phi on catenoid and enneper") {
    auto cat = make("catenoid");
    auto ph = eval_phi(cat, Complex(1, 0));
    CHECK(std::abs(ph[0] - Complex(0, 0)) < 1e-14);
    CHECK(std::abs(ph[1] - Complex(0, 1)) < 1e-14);
    CHECK(std::abs(ph[2] - Complex(1, 0)) < 1e-14);

    auto enn = make("enneper");
    auto pe1 = eval_phi(enn, Complex(1, 0));
    CHECK(std::abs(pe1[0] - Complex(0, 0)) < 1e-14);
    CHECK(std::abs(pe1[1] - Complex(0, 1)) < 1e-14);
    CHECK(std::abs(pe1[2] - Complex(1, 0)) < 1e-14);

    // phi extends across z = 0 after the 1/g pole cancels against h:
    // phi = ((1 - z^2)/2, i (1 + z^2)/2, z), so phi(0) = (1/2, i/2, 0).
    auto pe0 = eval_phi(enn, Complex(0, 0));
    CHECK(std::abs(pe0[0] - Complex(0.5, 0)) < 1e-14);
    CHECK(std::abs(pe0[1] - Complex(0, 0.5)) < 1e-14);
    CHECK(std::abs(pe0[2]) < 1e-14);

    // catenoid phi_1 has a double pole at the end z = 0
    CHECK_THROWS_AS((void)eval_phi(cat, Complex(0, 0)), Error);
}

TEST_CASE("eval_gauss basics") {
    auto cat = make("catenoid");
    Vec3 south = eval_gauss(cat, ExtComplex(0.0, 0.0));
    CHECK((south - Vec3{0, 0, -1}).norm() < 1e-14);
    Vec3 north = eval_gauss(cat, ExtComplex::inf());
    CHECK((north - Vec3{0, 0, 1}).norm() < 1e-14);
    Vec3 eq = eval_gauss(cat, ExtComplex(1.0, 0.0));
    CHECK((eq - Vec3{1, 0, 0}).norm() < 1e-14);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int k = 0; k < 50; ++k) {
        Vec3 g = eval_gauss(cat, ExtComplex(u(rng), u(rng)));
        CHECK(std::abs(g.norm() - 1.0) < 1e-12);
    }
}

TEST_CASE("curvature and metric") {
    auto enn = make("enneper");
    // K = -16 / (1 + |z|^2)^4 for the enneper data, so K(0) = -16
    auto m0 = curvature_and_metric(enn, Complex(0, 0));
    CHECK(m0.K == doctest::Approx(-16.0).epsilon(1e-9));
    CHECK(m0.lambda == doctest::Approx(0.5).epsilon(1e-9));
    auto m1 = curvature_and_metric(enn, Complex(0.3, -0.4));
    CHECK(m1.K == doctest::Approx(-16.0 / std::pow(1.25, 4)).epsilon(1e-9));

    auto cat = make("catenoid");
    for (double t : {0.1, 1.0, 2.5, 4.0}) {
        auto m = curvature_and_metric(cat, std::polar(1.0, t));
        CHECK(m.K < 0.0);
        CHECK(m.K == doctest::Approx(-1.0).epsilon(1e-9));  // waist of the unit catenoid
    }

    // branch point of g = z^2 at the origin has K = 0
    auto e2 = make("enneper2");
    auto mb = curvature_and_metric(e2, Complex(0, 0));
    CHECK(std::abs(mb.K) < 1e-12);
    CHECK(mb.lambda == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("degree and branch points") {
    auto cat = make("catenoid");
    auto db1 = degree_and_branch_points(cat);
    CHECK(db1.n == 1);
    CHECK(db1.branches.empty());

    auto e2 = make("enneper2");
    auto db2 = degree_and_branch_points(e2);
    CHECK(db2.n == 2);
    REQUIRE(db2.branches.size() == 2);
    CHECK(db2.branch_total == 2);  // 2n - 2
    bool zero_found = false, inf_found = false;
    for (auto& b : db2.branches) {
        if (b.location.infinite) {
            inf_found = true;
            CHECK(b.order == 1);
        } else {
            zero_found = true;
            CHECK(std::abs(b.location.value) < 1e-9);
            CHECK(b.order == 1);
        }
    }
    CHECK(zero_found);
    CHECK(inf_found);

    // g = (z^2-1)/z: two simple branch points at +-i
    RationalMap g(Polynomial({Complex(-1), Complex(0), Complex(1)}), Polynomial({Complex(0), Complex(1)}));
    RationalMap h(Polynomial::constant(1.0), Polynomial::constant(1.0));
    WeierstrassData wd(g, h, {ExtComplex::inf()}, "test");
    auto db3 = degree_and_branch_points(wd);
    CHECK(db3.n == 2);
    CHECK(db3.branch_total == 2);
    REQUIRE(db3.branches.size() == 2);
    for (auto& b : db3.branches) {
        CHECK(!b.location.infinite);
        CHECK(std::abs(std::abs(b.location.value.imag()) - 1.0) < 1e-9);
        CHECK(std::abs(b.location.value.real()) < 1e-9);
        CHECK(b.order == 1);
    }
}

TEST_CASE("geometric indices with euler cross-check") {
    // 2n = -chi(S^2) + #E + sum I = -2 + #E + sum I for genus zero
    auto check_tc = [](const WeierstrassData& data) {
        auto db = degree_and_branch_points(data);
        auto ends = geometric_indices(data);
        int isum = 0;
        for (auto& e : ends) isum += e.geometric_index;
        CHECK(2 * db.n == -2 + static_cast<int>(ends.size()) + isum);
    };

    auto cat = make("catenoid");
    auto ends = geometric_indices(cat);
    CHECK(has_end_index(ends, false, Complex(0, 0), 1));
    CHECK(has_end_index(ends, true, Complex(0, 0), 1));
    check_tc(cat);

    auto enn = make("enneper");
    CHECK(has_end_index(geometric_indices(enn), true, Complex(0, 0), 3));
    check_tc(enn);

    auto e2 = make("enneper2");
    CHECK(has_end_index(geometric_indices(e2), true, Complex(0, 0), 5));
    check_tc(e2);

    auto e3 = make("enneper3");
    CHECK(has_end_index(geometric_indices(e3), true, Complex(0, 0), 7));
    check_tc(e3);

    // incomplete data: g = z with h = 1 has only simple pole behaviour at the end
    WeierstrassData bad(RationalMap(Polynomial({Complex(0), Complex(1)}), Polynomial::constant(1.0)),
                        RationalMap(Polynomial::constant(1.0), Polynomial::constant(1.0)),
                        {ExtComplex(0.0, 0.0)}, "bad");
    CHECK_THROWS_AS((void)geometric_indices(bad), Error);
}

TEST_CASE("immersion evaluation") {
    auto enn = make("enneper");
    Vec3 zero = eval_immersion(enn, Complex(0, 0), Complex(0, 0));
    CHECK(zero.norm() < 1e-14);

    // Re int_0^1 ((1-t^2)/2, i(1+t^2)/2, t) dt = (1/3, 0, 1/2)
    Vec3 x1 = eval_immersion(enn, Complex(1, 0), Complex(0, 0));
    CHECK(x1.x == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
    CHECK(std::abs(x1.y) < 1e-10);
    CHECK(x1.z == doctest::Approx(0.5).epsilon(1e-10));

    // closed catenoid loop around the end at 0 comes back with zero displacement
    auto cat = make("catenoid");
    Vec3 acc;
    int steps = 12;
    for (int k = 0; k < steps; ++k) {
        Complex a = std::polar(1.0, kTwoPi * k / steps);
        Complex b = std::polar(1.0, kTwoPi * (k + 1) / steps);
        acc += immersion_increment(cat, a, b);
    }
    CHECK(acc.norm() < 1e-9);

    // two different paths agree (period-free data)
    Vec3 direct = eval_immersion(enn, Complex(1, 1), Complex(-1, 0));
    Vec3 via = eval_immersion(enn, Complex(0, 2), Complex(-1, 0)) +
               eval_immersion(enn, Complex(1, 1), Complex(0, 2));
    CHECK((direct - via).norm() < 1e-9);
}

TEST_CASE("path routing avoids poles") {
    auto cat = make("catenoid");
    // the straight segment from -1 to 1 passes through the double pole at 0
    auto path = route_path(Complex(-1, 0), Complex(1, 0), {Complex(0, 0)});
    CHECK(path.size() > 2);
    for (Complex z : path) CHECK(std::abs(z) > 0.2);
    // and the integral along it is finite and matches the two-leg route
    Vec3 a;
    for (size_t k = 0; k + 1 < path.size(); ++k) a += immersion_increment(cat, path[k], path[k + 1]);
    Vec3 b = eval_immersion(cat, Complex(0, 1), Complex(-1, 0)) +
             eval_immersion(cat, Complex(1, 0), Complex(0, 1));
    CHECK((a - b).norm() < 1e-8);
}

TEST_CASE("validate_data on the catalog") {
    for (const auto& name : catalog_names()) {
        auto data = make(name);
        auto rep = validate_data(data);
        INFO(name);
        CHECK(rep.ok);
        CHECK(rep.min_end_equator_distance > 0.9);  // catalog ends sit at the poles
        for (auto& res : rep.period_residuals)
            for (double v : res) CHECK(std::abs(v) < 1e-8);
    }
}

TEST_CASE("validate_data flags violations") {
    // real period: h = (1+i)/z makes Re of the phi_3 residue nonzero
    WeierstrassData per(RationalMap(Polynomial({Complex(0), Complex(1)}), Polynomial::constant(1.0)),
                        RationalMap(Polynomial::constant(Complex(1, 1)), Polynomial({Complex(0), Complex(1)})),
                        {ExtComplex(0.0, 0.0), ExtComplex::inf()}, "bad-period");
    auto rep = validate_data(per);
    CHECK(!rep.ok);
    bool found = false;
    for (auto& iss : rep.issues) found |= (iss.kind == ErrorKind::PeriodViolation);
    CHECK(found);

    // AE.4: g = 1 + z^2 has a branch point at 0 with |g(0)| = 1
    WeierstrassData ae4(RationalMap(Polynomial({Complex(1), Complex(0), Complex(1)}), Polynomial::constant(1.0)),
                        RationalMap(Polynomial::constant(1.0), Polynomial::constant(1.0)),
                        {ExtComplex::inf()}, "bad-ae4");
    auto rep4 = validate_data(ae4);
    bool found4 = false;
    for (auto& iss : rep4.issues) found4 |= (iss.kind == ErrorKind::BranchOnCircle);
    CHECK(found4);

    // AE.5: an end whose normal lies on the equator (g = z with the end at z = 1)
    WeierstrassData ae5b(RationalMap(Polynomial({Complex(0), Complex(1)}), Polynomial::constant(1.0)),
                         RationalMap(Polynomial::constant(1.0), Polynomial({Complex(-1), Complex(1)})),
                         {ExtComplex(1.0, 0.0)}, "bad-ae5b");
    auto rep5 = validate_data(ae5b);
    bool found5 = false;
    for (auto& iss : rep5.issues) found5 |= (iss.kind == ErrorKind::EndOnCircle);
    CHECK(found5);
    CHECK(!rep5.ok);
}

TEST_CASE("gauss preimages with multiplicity") {
    auto e2 = make("enneper2");
    // g = z^2: preimage of infinity is the double point at infinity
    auto pre_inf = gauss_preimages(e2, ExtComplex::inf());
    REQUIRE(pre_inf.size() == 1);
    CHECK(pre_inf[0].first.infinite);
    CHECK(pre_inf[0].second == 2);

    auto pre0 = gauss_preimages(e2, ExtComplex(0.0, 0.0));
    REQUIRE(pre0.size() == 1);
    CHECK(pre0[0].second == 2);

    auto pre4 = gauss_preimages(e2, ExtComplex(4.0, 0.0));
    REQUIRE(pre4.size() == 2);
    CHECK(pre4[0].second == 1);
    CHECK(pre4[1].second == 1);
}

TEST_CASE("derivative property for the catalog maps") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-1.8, 1.8);
    for (const auto& name : catalog_names()) {
        auto data = make(name);
        RationalMap dg = data.g.derivative();
        int checked = 0;
        while (checked < 100) {
            Complex z(u(rng), u(rng));
            if (std::abs(z) < 0.2) continue;
            Complex an = dg.eval_finite(z);
            double h = 1e-5;
            Complex fd = (data.g.eval_finite(z + h) - data.g.eval_finite(z - h)) / (2 * h);
            CHECK(std::abs(fd - an) <= 1e-6 * (1.0 + std::abs(an)));
            ++checked;
        }
    }
}
