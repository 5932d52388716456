#include <doctest.h>

#include <cmath>

#include "weingarten/closed_forms.hpp"
#include "weingarten/curvature.hpp"
#include "weingarten/errors.hpp"
#include "weingarten/numeric.hpp"
#include "weingarten/quadrature.hpp"
#include "weingarten/solver.hpp"

using namespace weingarten;

TEST_CASE("cone height in the flat case is a straight line") {
    const SpaceParams sp{0, 0};
    const ConeSpec cone{0.6, 0.0};
    for (double rho : {0.3, 1.0, 2.7})
        CHECK(cone_height(rho, cone, sp) == doctest::Approx(4.0 / 3.0 * rho).epsilon(1e-12));
}

TEST_CASE("cone height quadrature refinement and domain") {
    const SpaceParams sp{0, 1};
    const ConeSpec cone{0.5, 0.0};
    const double whole = cone_height(1.0, cone, sp);
    // independent midpoint-rule oracle at its own (coarser) accuracy
    double acc = 0.0;
    const std::size_t n = 40000;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
        acc += std::sqrt(1.0 - 0.25 * (1.0 + t * t)) / 4.0;
    }
    acc *= 4.0 / 0.5 / static_cast<double>(n);
    CHECK(whole == doctest::Approx(acc).epsilon(1e-7));

    const double bound = cone_rho_bound(cone, sp);
    CHECK(bound == doctest::Approx(std::sqrt(0.75) / 0.5).epsilon(1e-14));
    CHECK_THROWS_AS(cone_height(bound + 1e-7, cone, sp), DomainError);
    CHECK_THROWS_AS(cone_height(0.5, ConeSpec{0.0, 0.0}, sp), DomainError);
}

TEST_CASE("ke delta closed forms") {
    for (const SpaceParams sp : {SpaceParams{0, 1}, SpaceParams{-1, 0}, SpaceParams{4, 0.1}})
        for (double c : {0.5, 1.0, 3.0}) CHECK(ke_delta(0.0, c, sp) == doctest::Approx(1.0));

    // Nil3: delta(x) = 1 - log(1 + 2 x^2)
    const SpaceParams nil{0, 1};
    for (double x : linspace(0.0, 0.9, 10))
        CHECK(ke_delta(x, 1.0, nil) ==
              doctest::Approx(1.0 - std::log(1.0 + 2.0 * x * x)).epsilon(1e-14));

    // kappa = 4 tau^2 limit form against numeric continuation
    for (double tau : {0.0, 1.0}) {
        const double k4 = 4.0 * tau * tau;
        const SpaceParams lim{k4, tau};
        for (double x : linspace(0.05, 0.8, 8)) {
            const double dl = ke_delta(x, 1.0, lim);
            const double dp = ke_delta(x, 1.0, {k4 + 1e-6, tau});
            const double dm = ke_delta(x, 1.0, {k4 - 1e-6, tau});
            CHECK(std::fabs(dl - dp) < 1e-5);
            CHECK(std::fabs(dl - dm) < 1e-5);
            CHECK(dl == doctest::Approx(1.0 - (1.0 + tau * tau) * x * x / (1.0 + sq(tau * x)))
                            .epsilon(1e-13));
        }
    }
}

TEST_CASE("ke_x0 roots") {
    const SpaceParams nil{0, 1};
    CHECK(ke_x0(1.0, nil) == doctest::Approx(std::sqrt((std::exp(1.0) - 1.0) / 2.0)).epsilon(1e-11));
    CHECK(ke_angle(ke_x0(1.0, nil) * (1.0 - 1e-13), 1.0, nil) < 2e-6);
    CHECK(ke_x0(4.0, {0, 0}) == doctest::Approx(0.5).epsilon(1e-12)); // round sphere radius 1/sqrt(c)
    CHECK_THROWS_AS(ke_x0(0.0, nil), DomainError);

    // solver cross-check: the integrated orbit turns at rho = x0
    const SpaceParams bsp{4, 0.1};
    const CanonicalExample ex = integrate_canonical(WeingartenClass::constant_ke(1.0), bsp);
    REQUIRE(ex.classification == Classification::Sphere);
    double rho_at_turn = 0.0;
    for (const SampleRow& r : ex.samples)
        if (r.s == ex.diagnostics.turning_s && r.drho == 0.0) rho_at_turn = r.rho;
    CHECK(std::fabs(rho_at_turn - ke_x0(1.0, bsp)) < 1e-8);
}

TEST_CASE("minkowski rhs") {
    const WeingartenClass cke = WeingartenClass::constant_ke(0.7);
    const SpaceParams sp{0.5, 0.3};
    for (double x : {0.2, 0.8})
        for (double y : {0.1, 0.9}) {
            const double k = sp.kappa, t2 = sq(sp.tau);
            const double expect = 16.0 * x * (0.7 + t2) /
                                  ((4.0 + k * x * x) * (-4.0 + (k - 8.0 * t2) * x * x));
            CHECK(minkowski_rhs(x, y, cke, sp) == doctest::Approx(expect).epsilon(1e-14));
        }
    // flat specialization: y' y = -c x, the round sphere rho'' = -c rho
    CHECK(minkowski_rhs(0.5, 0.2, WeingartenClass::constant_ke(2.0), {0, 0}) ==
          doctest::Approx(-2.0 * 0.5).epsilon(1e-14));
    // sign over the valid range of the Nil3 unit-Ke sphere
    const SpaceParams nil{0, 1};
    const double x0 = ke_x0(1.0, nil);
    for (double x : linspace(0.05 * x0, 0.95 * x0, 20))
        CHECK(minkowski_rhs(x, ke_angle(x, 1.0, nil), WeingartenClass::constant_ke(1.0), nil) < 0.0);
    CHECK_THROWS_AS(minkowski_rhs(0.5, 0.0, WeingartenClass::constant_h(1.0), nil), DomainError);
}

TEST_CASE("cylinder extrinsic curvature") {
    CHECK(cylinder_ke({3, 0}) == 0.0);
    CHECK(cylinder_ke({0, 1}) == -1.0);
    // finite-difference oracle on a sampled cylinder patch
    const SpaceParams sp{0, 1};
    const Patch cyl = [](double u, double v) {
        return ModelPoint{1.3 * std::cos(v), 1.3 * std::sin(v), u};
    };
    CHECK(std::fabs(fd_shape_operator(cyl, 0.4, 1.0, sp).Ke - cylinder_ke(sp)) < 1e-5);
}

TEST_CASE("ke_angle satisfies its separable ODE") {
    for (const SpaceParams sp : {SpaceParams{0, 1}, SpaceParams{-1, 0}, SpaceParams{4, 0.1}}) {
        const double c = 1.0;
        const double x0 = ke_x0(c, sp);
        const WeingartenClass cls = WeingartenClass::constant_ke(c);
        for (double x : linspace(0.05 * x0, 0.95 * x0, 40)) {
            const double h = 1e-6;
            const double yp = (ke_angle(x + h, c, sp) - ke_angle(x - h, c, sp)) / (2.0 * h);
            CHECK(std::fabs(ke_angle(x, c, sp) * yp - minkowski_rhs(x, ke_angle(x, c, sp), cls, sp)) <
                  1e-7);
        }
    }
}
