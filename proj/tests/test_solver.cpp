#include <doctest.h>

#include <cmath>

#include "weingarten/closed_forms.hpp"
#include "weingarten/errors.hpp"
#include "weingarten/numeric.hpp"
#include "weingarten/solver.hpp"

using namespace weingarten;

TEST_CASE("solve_rho_dd closed cases") {
    // constant extrinsic curvature: explicit right side
    for (const SpaceParams sp : {SpaceParams{0, 1}, SpaceParams{-1, 0}, SpaceParams{4, 0.1}}) {
        const double c = 1.3, rho = 0.4, drho = 0.8;
        const double expect = 16.0 * rho * (c + sq(sp.tau)) /
                              ((4.0 + sp.kappa * rho * rho) *
                               (-4.0 + (sp.kappa - 8.0 * sq(sp.tau)) * rho * rho));
        CHECK(solve_rho_dd(rho, drho, WeingartenClass::constant_ke(c), sp) ==
              doctest::Approx(expect).epsilon(1e-14));
    }
    // unit sphere residual root for H = 1 in R^3
    for (double th : {0.3, 0.9, 1.4})
        CHECK(solve_rho_dd(std::sin(th), std::cos(th), WeingartenClass::constant_h(1.0), {0, 0}) ==
              doctest::Approx(-std::sin(th)).epsilon(1e-11));
    // minimal surfaces: the residual root solves the H = 0 linear equation
    {
        const SpaceParams sp{-1, 0};
        const double rho = 0.2, drho = 0.95;
        const double omc = (1.0 - drho) * (1.0 + drho);
        const double expect = omc * (4.0 - sp.kappa * rho * rho) /
                              (rho * (4.0 + sp.kappa * rho * rho));
        CHECK(solve_rho_dd(rho, drho, WeingartenClass::general_phi("0"), sp) ==
              doctest::Approx(expect).epsilon(1e-11));
    }
    CHECK_THROWS_AS(solve_rho_dd(1e-10, 0.5, WeingartenClass::constant_h(1.0), {0, 0}), SingularAxis);
    CHECK_THROWS_AS(solve_rho_dd(0.5, 0.5, WeingartenClass::fform("1-k2"), {0, 0}), ConfigError);
}

TEST_CASE("general-phi root matches the direct solve when Phi ignores t") {
    // same class expressed two ways must give the same rho''
    const SpaceParams sp{0, 1};
    const WeingartenClass direct = WeingartenClass::constant_h(0.8);
    const WeingartenClass generic = WeingartenClass::general_phi("0.8 + 0*t");
    for (double rho : {0.3, 0.7})
        for (double drho : {0.2, 0.6}) {
            CHECK(solve_rho_dd(rho, drho, direct, sp) ==
                  doctest::Approx(solve_rho_dd(rho, drho, generic, sp)).epsilon(1e-11));
        }
}

TEST_CASE("series initialization") {
    // explicit-Ke closed form r3 = -(c + tau^2)/6
    for (const SpaceParams sp : {SpaceParams{0, 1}, SpaceParams{4, 0.1}}) {
        SolveConfig cfg;
        const double c = 2.0;
        const ProfileState st = series_init(WeingartenClass::constant_ke(c), sp, cfg);
        const double r3 = -(c + sq(sp.tau)) / 6.0;
        CHECK(st.rho == doctest::Approx(cfg.s0 + r3 * std::pow(cfg.s0, 3)).epsilon(1e-14));
        CHECK(st.drho == doctest::Approx(1.0 + 3.0 * r3 * cfg.s0 * cfg.s0).epsilon(1e-14));
        CHECK(st.h == doctest::Approx(0.5 * std::sqrt(c) * cfg.s0 * cfg.s0).epsilon(1e-14));
    }
    // constant H in R^3: circle of radius 1/H0, r3 -> -H0^2/6
    {
        SolveConfig cfg;
        const double h0 = 1.5;
        const ProfileState st = series_init(WeingartenClass::constant_h(h0), {0, 0}, cfg);
        const double r3 = (st.rho - cfg.s0) / std::pow(cfg.s0, 3);
        CHECK(r3 == doctest::Approx(-h0 * h0 / 6.0).epsilon(1e-5));
    }
}

TEST_CASE("series handoff insensitivity") {
    const SpaceParams sp{0, 1};
    const WeingartenClass cls = WeingartenClass::constant_ke(1.0);
    SolveConfig a, b;
    a.s0 = 1e-3;
    b.s0 = 1e-4;
    const ProfileState pa = integrate_to(cls, sp, a, series_init(cls, sp, a), 0.01);
    const ProfileState pb = integrate_to(cls, sp, b, series_init(cls, sp, b), 0.01);
    CHECK(std::fabs(pa.rho - pb.rho) < 1e-9);
    CHECK(std::fabs(pa.drho - pb.drho) < 1e-9);
    CHECK(std::fabs(pa.h - pb.h) < 1e-9);
}

TEST_CASE("classification: spheres, entire graphs, cylinders") {
    CHECK(integrate_canonical(WeingartenClass::constant_h(0.6), {-1, 0}).classification ==
          Classification::Sphere);
    CHECK(integrate_canonical(WeingartenClass::constant_h(0.4), {-1, 0}).classification ==
          Classification::EntireGraph);
    const CanonicalExample nil = integrate_canonical(WeingartenClass::constant_ke(1.0), {0, 1});
    CHECK(nil.classification == Classification::Sphere);

    // closed-form angle comparison along the orbit
    const SpaceParams sp{0, 1};
    double worst = 0.0;
    for (const SampleRow& r : nil.samples) {
        if (!(r.nu > 0.02) || r.rho <= 0.0) continue;
        worst = std::fmax(worst, std::fabs(r.nu - ke_angle(r.rho, 1.0, sp)));
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("round sphere profile in R^3") {
    for (double h0 : {1.0, 2.0}) {
        const CanonicalExample ex = integrate_canonical(WeingartenClass::constant_h(h0), {0, 0});
        REQUIRE(ex.classification == Classification::Sphere);
        double sup = 0.0;
        for (const SampleRow& r : ex.samples)
            sup = std::fmax(sup, std::fabs(r.rho - std::sin(h0 * r.s) / h0));
        CHECK(sup < 1e-8);
        CHECK(ex.diagnostics.total_height == doctest::Approx(2.0 / h0).epsilon(1e-9));
    }
}

TEST_CASE("negative mean curvature mirrors the sphere") {
    const CanonicalExample up = integrate_canonical(WeingartenClass::constant_h(1.0), {0, 0});
    const CanonicalExample dn = integrate_canonical(WeingartenClass::constant_h(-1.0), {0, 0});
    REQUIRE(dn.classification == Classification::Sphere);
    CHECK(dn.umbilic == -1.0);
    CHECK(dn.samples.back().h == doctest::Approx(-up.samples.back().h).epsilon(1e-10));
    CHECK(dn.samples.back().H == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("prescribed-H and prescribed-Ke classes integrate cleanly") {
    {
        // H = Phi(nu^2) bounded in [0.6, 0.7] in H^2 x R
        const CanonicalExample ex =
            integrate_canonical(WeingartenClass::prescribed_h("0.6 + 0.1*v"), {-1, 0});
        CHECK(ex.classification == Classification::Sphere);
        CHECK(ex.diagnostics.max_residual < 1e-8);
        CHECK(monotonicity_check(ex).pass);
    }
    {
        // Minkowski-type prescription Ke = 1 + 0.5 nu^2 in Nil3
        const CanonicalExample ex =
            integrate_canonical(WeingartenClass::prescribed_ke("1 + 0.5*v"), {0, 1});
        CHECK(ex.classification == Classification::Sphere);
        CHECK(ex.diagnostics.max_residual < 1e-8);
        // umbilic start carries Ke = Phi(1)
        CHECK(ex.samples.front().Ke == doctest::Approx(1.5));
    }
}

TEST_CASE("totally geodesic slice is reported, not graded") {
    const CanonicalExample slice = integrate_canonical(WeingartenClass::general_phi("0"), {4, 0});
    CHECK(slice.classification == Classification::EntireGraph);
    const MonotonicityReport rep = monotonicity_check(slice);
    CHECK(rep.excluded_totally_geodesic);
    CHECK_THROWS_AS(integrate_canonical(WeingartenClass::general_phi("0"), {0, 1}), ConfigError);
}

TEST_CASE("stall window stays unset away from the cylinder case") {
    // The cylinder-asymptotic case sits on a separatrix in the phase plane
    // (only special classes reach it), so the positive path cannot be driven
    // by a named class; check the window bookkeeping stays clean on ordinary
    // runs.
    const CanonicalExample ex = integrate_canonical(WeingartenClass::constant_ke(1.0), {0, 1});
    CHECK(std::isnan(ex.diagnostics.asymptotic_radius));
    CHECK(std::isnan(ex.diagnostics.stall_window_start));
}

TEST_CASE("max_s is reported as inconclusive, never silently classified") {
    SolveConfig cfg;
    cfg.max_s = 0.05;
    bool threw = false;
    try {
        integrate_canonical(WeingartenClass::constant_h(0.4), {-1, 0}, cfg);
    } catch (const MaxSExceeded& e) {
        threw = true;
        CHECK(e.partial.classification == Classification::Inconclusive);
        CHECK(e.partial.samples.size() > 2);
    }
    CHECK(threw);
}

TEST_CASE("ellipticity is enforced before integration") {
    CHECK_THROWS_AS(integrate_canonical(WeingartenClass::general_phi("sqrt(t)"), {0, 0}),
                    ConfigError);
}

TEST_CASE("a-posteriori residual along trajectories") {
    for (const SpaceParams sp : {SpaceParams{0, 1}, SpaceParams{-1, 0}}) {
        const CanonicalExample ex = integrate_canonical(WeingartenClass::constant_ke(1.0), sp);
        CHECK(ex.diagnostics.max_residual < 1e-8);
    }
    const CanonicalExample h6 =
        integrate_canonical(WeingartenClass::general_phi("0.6 + 0.05*(t/(1+t))"), {-1, 0});
    CHECK(h6.diagnostics.max_residual < 1e-8);
}

TEST_CASE("tolerance halving moves terminal diagnostics by less than 10x the tolerance") {
    const SpaceParams sp{0, 1};
    SolveConfig coarse, fine;
    fine.rel_tol = 0.5 * coarse.rel_tol;
    fine.abs_tol = 0.5 * coarse.abs_tol;
    const CanonicalExample a = integrate_canonical(WeingartenClass::constant_ke(1.0), sp, coarse);
    const CanonicalExample b = integrate_canonical(WeingartenClass::constant_ke(1.0), sp, fine);
    CHECK(std::fabs(a.diagnostics.turning_s - b.diagnostics.turning_s) < 10.0 * coarse.rel_tol * 10.0);
    CHECK(std::fabs(a.diagnostics.total_height - b.diagnostics.total_height) <
          10.0 * coarse.rel_tol * 10.0);
}

TEST_CASE("monotonicity check rejects constant-angle samples") {
    CanonicalExample fake;
    fake.classification = Classification::EntireGraph;
    for (double s : linspace(0.0, 1.0, 20))
        fake.samples.push_back(SampleRow{s, 0.1 + 0.5 * s, 0.5, s, 0.5, 1.0, -1.0, 0.0});
    const MonotonicityReport rep = monotonicity_check(fake);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.excluded_totally_geodesic);
}

TEST_CASE("sphere reflection symmetry against re-integration") {
    const SpaceParams sp{0, 1};
    const WeingartenClass cls = WeingartenClass::constant_ke(1.0);
    const CanonicalExample ex = integrate_canonical(cls, sp);
    CHECK(reflection_symmetry_error(ex, cls, sp) < 1e-10);
}
