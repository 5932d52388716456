#include <doctest.h>

#include <cmath>

#include "weingarten/errors.hpp"
#include "weingarten/hyperbolic.hpp"
#include "weingarten/numeric.hpp"
#include "weingarten/space.hpp"

using namespace weingarten;

TEST_CASE("principal curvatures in the hyperboloid model") {
    // CMC consistency: k1 + k2 = 2H along an integrated orbit
    const H2Orbit orbit = h2r_orbit(WeingartenClass::fform("2*0.6 - k2"));
    REQUIRE(orbit.classification == Classification::Sphere);
    for (const H2Sample& r : orbit.samples)
        CHECK(std::fabs(r.k1 + r.k2 - 1.2) < 1e-7);
    // umbilic limit near the axis
    const H2Sample& first = orbit.samples.front();
    CHECK(std::fabs(first.k1 - 0.6) < 1e-6);
    CHECK(std::fabs(first.k2 - 0.6) < 1e-6);
    CHECK_THROWS_AS(h2r_principal_curvatures(HyperState{0, 1e-9, 0.5, 0}, 0.0), SingularAxis);
}

TEST_CASE("CMC dichotomy seen from the phase plane") {
    const H2Orbit sphere = h2r_orbit(WeingartenClass::fform("2*0.6 - k2"));
    CHECK(sphere.classification == Classification::Sphere);
    SolveConfig cfg;
    cfg.max_s = 50.0;
    const H2Orbit graph = h2r_orbit(WeingartenClass::fform("2*0.5 - k2"), cfg);
    CHECK(graph.classification != Classification::Sphere);
    CHECK(graph.min_y > 0.0);
}

TEST_CASE("f-forms with the whole real line as domain stay bounded") {
    // k1 = 2H - k2 families: the orbit ends in a turning point or runs to
    // max_s with bounded diagnostics, never a blowup
    SolveConfig cfg;
    cfg.max_s = 50.0;
    for (double H0 : {0.3, 0.5, 0.8, 1.5}) {
        const H2Orbit orbit =
            h2r_orbit(WeingartenClass::fform("2*" + format_double(H0) + " - k2"), cfg);
        CHECK(orbit.classification != Classification::SecondFormBlowup);
        CHECK(orbit.max_sigma_sq < 1e6);
        CHECK((orbit.classification == Classification::Sphere || orbit.reached_max_s ||
               orbit.classification == Classification::EntireGraph));
    }
}

TEST_CASE("kappa2 stays positive before the turning point") {
    const H2Orbit orbit = h2r_orbit(WeingartenClass::fform("2*0.8 - k2"));
    for (const H2Sample& r : orbit.samples) {
        if (!(r.y > 0.0)) break;
        CHECK(r.k2 > 0.0);
    }
}

TEST_CASE("cross-model agreement: hyperboloid vs coordinate model of H^2 x R") {
    // nu as a function of geodesic radius from both models, within 1e-6
    const double H0 = 0.6;
    const SpaceParams sp{-1, 0};
    const H2Orbit orbit = h2r_orbit(WeingartenClass::fform("2*0.6 - k2"));
    const CanonicalExample model = integrate_canonical(WeingartenClass::constant_h(H0), sp);
    REQUIRE(orbit.classification == Classification::Sphere);
    REQUIRE(model.classification == Classification::Sphere);

    HermiteCurve nu_of_r_hyper; // from the hyperboloid orbit
    for (const H2Sample& r : orbit.samples) {
        if (!(r.y > 0.02)) break;
        if (r.x <= 0.0) continue;
        nu_of_r_hyper.x.push_back(r.x);
        nu_of_r_hyper.y.push_back(r.y);
        nu_of_r_hyper.dydx.push_back(-r.k1 * std::sqrt(1.0 - r.y * r.y) / r.y); // dy/dx = y'/x'
    }
    double worst = 0.0;
    int compared = 0;
    for (const SampleRow& r : model.samples) {
        if (!(r.nu > 0.05) || r.rho <= 0.0) continue;
        const double geo = geodesic_radius(r.rho, sp); // r = 2 artanh(rho/2)
        if (geo <= nu_of_r_hyper.x.front() || geo >= nu_of_r_hyper.x.back()) continue;
        worst = std::fmax(worst, std::fabs(nu_of_r_hyper.eval(geo) - r.nu));
        ++compared;
    }
    CHECK(compared > 50);
    CHECK(worst < 1e-6);
}

TEST_CASE("barrier curves") {
    const BarrierCurves bc = barrier_curves(0.8, 1.1);
    CHECK(bc.gamma0(1.0) == doctest::Approx(0.0));
    CHECK(bc.gamma0(0.999999) < 1e-2);
    // the curvature of Gamma0 at (0,1) equals alpha0^2
    CHECK(std::fabs(bc.gamma0_curvature_fd() - 1.1 * 1.1) < 1e-4);
    // artanh argument >= 1 below y^2 = 1 - alpha0^2
    const BarrierCurves low = barrier_curves(0.5, 0.9);
    CHECK_THROWS_AS(low.gamma0(0.1), DomainError);
    CHECK_NOTHROW(low.gamma0(0.95));
    CHECK_THROWS_AS(barrier_curves(1.1, 0.8), DomainError);

    // an f-form with a > 0 stays left of Gamma0 chosen between a and alpha
    const WeingartenClass cls = WeingartenClass::fform("1.1 + 1/(k2 - 1.1)");
    const double alpha = umbilic_constant(cls); // 2.1
    const H2Orbit orbit = h2r_orbit(cls);
    const BarrierCurves bc2 = barrier_curves(1.1, 0.5 * (1.1 + alpha));
    CHECK(bc2.orbit_stays_left(orbit));
}

TEST_CASE("popu0 counterexample construction") {
    const Popu0Result res = popu0_class(parse_expr("1.1"), 0.1);
    CHECK(res.cert.y_star_in_window);
    CHECK(res.cert.base_no_blowup_in_window);
    CHECK(res.cert.y_star > 0.5 * res.cert.y_eps);
    CHECK(res.cert.y_star < res.cert.y_eps);
    // the blend satisfies both printed and barrier forms of condition (2)
    CHECK(res.cert.cond2_lhs > res.cert.cond2_rhs_barrier);
    CHECK(res.cert.cond2_lhs > res.cert.cond2_rhs_printed);
    // the blended class is still a plain parsable expression
    CHECK(parse_expr(res.cls.expr.to_string()) == res.cls.expr);
    // the blended orbit blows up; the base orbit closes as a sphere
    const H2Orbit blown = h2r_orbit(res.cls);
    CHECK(blown.classification == Classification::SecondFormBlowup);
    const H2Orbit base = h2r_orbit(res.base);
    CHECK(base.classification == Classification::Sphere);

    // contraf violation rejected: phi0 = 0.9 < sqrt(1-v) near v = 0
    CHECK_THROWS_AS(popu0_class(parse_expr("0.9"), 0.1), ConfigError);
}

TEST_CASE("S^2 x R singular example") {
    const double R = 1.0 / 20.0;
    const double delta = s2r_matched_delta(R);
    // the matched delta comes from (R + delta)^3 = R^3 + R/6
    CHECK(std::pow(R + delta, 3.0) == doctest::Approx(R * R * R + R / 6.0).epsilon(1e-14));
    const S2RReport good = s2r_example(R, delta);
    CHECK(good.cond_axis);
    CHECK(good.cond_convex);
    CHECK(good.cond_opposite);
    CHECK(good.cond_limit);
    CHECK(std::fabs(good.limit_ratio + 1.0) < 1e-3);

    const S2RReport bad = s2r_example(R, 0.0);
    CHECK_FALSE(bad.all());

    // even polynomials with zero constant and linear coefficients satisfy
    // the axis condition automatically
    const S2RReport any = s2r_example(0.3, 0.12);
    CHECK(any.cond_axis);
}
