#include <doctest.h>

#include <cmath>
#include <random>

#include "weingarten/closed_forms.hpp"
#include "weingarten/curvature.hpp"
#include "weingarten/errors.hpp"
#include "weingarten/numeric.hpp"
#include "weingarten/quadrature.hpp"
#include "weingarten/solver.hpp"

using namespace weingarten;

TEST_CASE("h_prime closed cases") {
    // Euclidean arclength: rho' = cos(theta) gives dh/ds = |sin(theta)|
    for (double th : {0.3, 1.0, 2.5})
        CHECK(h_prime(0.8, std::cos(th), {0, 0}) == doctest::Approx(std::fabs(std::sin(th))).epsilon(1e-14));
    // equality case of the angle bound
    const SpaceParams nil{0, 1};
    const double rho = 0.7;
    CHECK(h_prime(rho, 1.0 / std::sqrt(1.0 + rho * rho), nil) == doctest::Approx(0.0));
    CHECK(h_prime(1.0, 0.5, {-1, 0}) == doctest::Approx(4.0 * std::sqrt(0.75) / 3.0).epsilon(1e-14));
    CHECK_THROWS_AS(h_prime(1.0, 1.1, {0, 0}), DomainError);
}

TEST_CASE("unit sigma-speed holds after solving for h'") {
    std::mt19937_64 rng(5u);
    for (const SpaceParams sp : {SpaceParams{0, 0}, SpaceParams{0, 1}, SpaceParams{-1, 0}, SpaceParams{4, 0.1}}) {
        for (int i = 0; i < 100; ++i) {
            const double rho = 0.05 + 1.5 * u64_to_unit(rng());
            if (sp.kappa < 0 && rho >= sp.rho_max() * 0.95) continue;
            const double bound = 1.0 / std::sqrt(1.0 + sq(sp.tau * rho));
            const double drho = (2.0 * u64_to_unit(rng()) - 1.0) * 0.99 * bound;
            const double hp = h_prime(rho, drho, sp);
            const double speed = (1.0 + sq(sp.tau * rho)) * drho * drho +
                                 sq(4.0 + sp.kappa * rho * rho) / 16.0 * hp * hp;
            CHECK(speed == doctest::Approx(1.0).epsilon(1e-13));
        }
    }
}

TEST_CASE("mean curvature: round sphere oracle") {
    CHECK(mean_curvature_s(1.0, 0.0, -1.0, {0, 0}) == doctest::Approx(1.0).epsilon(1e-14));
    for (double r : {0.5, 1.0, 2.0})
        for (double th : {0.4, 1.0, 1.4}) {
            const double H = mean_curvature_s(r * std::sin(th), std::cos(th), -std::sin(th) / r, {0, 0});
            CHECK(H == doctest::Approx(1.0 / r).epsilon(1e-12));
        }
    CHECK_THROWS_AS(mean_curvature_s(1e-9, 0.5, 0.0, {0, 0}), SingularAxis);
}

TEST_CASE("cone mean curvature is strictly decreasing in rho") {
    const double beta = 0.6;
    double prev = 1e300;
    for (double rho : linspace(0.2, 2.0, 12)) {
        // straight cone in R^3: rho' = beta, rho'' = 0
        const double H = mean_curvature_s(rho, beta, 0.0, {0, 0});
        CHECK(H == doctest::Approx(std::sqrt(1.0 - beta * beta) / (2.0 * rho)).epsilon(1e-13));
        CHECK(H < prev);
        prev = H;
    }
}

TEST_CASE("extrinsic curvature closed cases") {
    CHECK(extrinsic_curvature_s(0.8, 0.0, {0.3, 1.5}) == doctest::Approx(-2.25)); // cones: -tau^2
    CHECK(extrinsic_curvature_s(1.0, -1.0, {0, 0}) == doctest::Approx(1.0));      // unit sphere
    CHECK(extrinsic_curvature_s(1.0, -0.5, {0, 1}) == doctest::Approx(0.5));
}

TEST_CASE("sigma norm squared") {
    CHECK(sigma_norm_sq(1.0, 1.0) == doctest::Approx(2.0));
    CHECK(sigma_norm_sq(0.0, -1.0) == doctest::Approx(2.0)); // cylinder at tau = 1
    CHECK(sigma_norm_sq(1.5, 2.0) == doctest::Approx(5.0));  // k1 = 1, k2 = 2
    CHECK_THROWS_AS(sigma_norm_sq(0.0, 1.0), DomainError);
}

TEST_CASE("graph curvatures: cone in Nil3 and round sphere") {
    {
        const SpaceParams sp{0, 1};
        const ConeSpec cone{0.5, 0.0};
        const double du = 0.0025, u0 = 0.3;
        const std::size_t n = 201;
        std::vector<double> rho(n), h(n);
        for (std::size_t i = 0; i < n; ++i) {
            rho[i] = u0 + du * static_cast<double>(i);
            h[i] = cone_height(rho[i], cone, sp);
        }
        for (const GraphCurvature& g : graph_curvatures_u(rho, h, u0, du, sp)) {
            CHECK(std::fabs(g.nu - 0.5) < 1e-6);
            CHECK(std::fabs(g.Ke + 1.0) < 1e-6);
        }
    }
    {
        // unit-radius sphere of radius r in R^3, parametrized by polar angle
        const SpaceParams sp{0, 0};
        const double r = 1.3;
        const double du = 0.005, u0 = 0.4;
        const std::size_t n = 301;
        std::vector<double> rho(n), h(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double u = u0 + du * static_cast<double>(i);
            rho[i] = r * std::sin(u);
            h[i] = r * (1.0 - std::cos(u));
        }
        for (const GraphCurvature& g : graph_curvatures_u(rho, h, u0, du, sp)) {
            CHECK(std::fabs(g.H - 1.0 / r) < 1e-6);
            CHECK(std::fabs(g.Ke - 1.0 / (r * r)) < 1e-6);
        }
    }
}

TEST_CASE("graph curvatures agree with the arclength kernels on solver output") {
    const SpaceParams sp{0, 1};
    const WeingartenClass cls = WeingartenClass::constant_ke(1.0);
    SolveConfig cfg;
    const CanonicalExample ex = integrate_canonical(cls, sp, cfg);
    REQUIRE(ex.classification == Classification::Sphere);
    // resample the upper half on a uniform s-grid
    const double s_lo = 0.2 * ex.diagnostics.turning_s;
    const double ds = 0.02;
    const std::size_t n = 41;
    ProfileState st = series_init(cls, sp, cfg);
    std::vector<double> rho(n), h(n);
    std::vector<ProfileState> states(n);
    for (std::size_t i = 0; i < n; ++i) {
        st = integrate_to(cls, sp, cfg, st, s_lo + ds * static_cast<double>(i));
        states[i] = st;
        rho[i] = st.rho;
        h[i] = st.h;
    }
    const auto rows = graph_curvatures_u(rho, h, s_lo, ds, sp);
    for (std::size_t j = 0; j < rows.size(); ++j) {
        const ProfileState& q = states[j + 2];
        const double dd = solve_rho_dd(q.rho, q.drho, cls, sp, cfg);
        CHECK(std::fabs(rows[j].nu - q.drho) < 1e-6);
        CHECK(std::fabs(rows[j].H - mean_curvature_s(q.rho, q.drho, dd, sp)) < 1e-6);
        CHECK(std::fabs(rows[j].Ke - extrinsic_curvature_s(q.rho, dd, sp)) < 1e-6);
    }
}

TEST_CASE("shape-operator oracle: round sphere, cones, Ke sphere") {
    {
        const SpaceParams sp{0, 0};
        const double r = 2.0;
        const Patch sphere = [&](double u, double v) {
            return ModelPoint{r * std::sin(u) * std::cos(v), r * std::sin(u) * std::sin(v),
                              r * (1.0 - std::cos(u))};
        };
        for (double u : {0.5, 0.9, 1.3}) {
            const ShapeSample ss = fd_shape_operator(sphere, u, 0.7, sp);
            CHECK(std::fabs(ss.H - 1.0 / r) < 1e-6);
            CHECK(std::fabs(ss.Ke - 1.0 / (r * r)) < 1e-6);
        }
    }
    {
        const SpaceParams sp{0, 1};
        const ConeSpec cone{0.5, 0.0};
        const Patch patch = [&](double u, double v) {
            return ModelPoint{u * std::cos(v), u * std::sin(v), cone_height(u, cone, sp)};
        };
        for (double u : {0.4, 0.8})
            CHECK(std::fabs(fd_shape_operator(patch, u, 0.2, sp).Ke + 1.0) < 1e-5);
    }
    {
        // canonical constant-Ke example in Nil3, rebuilt from the first
        // integral (independent of the solver path):
        // dh/drho = 4 sqrt(1 - delta (1 + tau^2 rho^2)) / ((4 + kappa rho^2) sqrt(delta))
        const SpaceParams sp{0, 1};
        const double c = 1.0;
        auto dh_drho = [&](double t) {
            const double d = ke_delta(t, c, sp);
            const double rad = std::fmax(1.0 - d * (1.0 + sq(sp.tau * t)), 0.0);
            return 4.0 * std::sqrt(rad) / ((4.0 + sp.kappa * t * t) * std::sqrt(d));
        };
        auto height = [&](double x) { return integrate_gk(dh_drho, 0.0, x, 1e-12); };
        const double x0 = ke_x0(c, sp);
        const Patch patch = [&](double u, double v) {
            return ModelPoint{u * std::cos(v), u * std::sin(v), height(u)};
        };
        for (double u : {0.3 * x0, 0.5 * x0, 0.7 * x0})
            CHECK(std::fabs(fd_shape_operator(patch, u, 1.1, sp).Ke - c) < 1e-5);
    }
}

TEST_CASE("sigma norm identity for tau = 0 profiles") {
    // 4H^2 - 2Ke equals the explicit product-space expression
    std::mt19937_64 rng(17u);
    for (const SpaceParams sp : {SpaceParams{4, 0}, SpaceParams{-1, 0}}) {
        for (int i = 0; i < 60; ++i) {
            const double rho = 0.2 + 1.2 * u64_to_unit(rng());
            if (sp.kappa < 0 && rho > 1.8) continue;
            const double drho = -0.9 + 1.8 * u64_to_unit(rng());
            const double dd = -1.0 + 2.0 * u64_to_unit(rng());
            const double H = mean_curvature_s(rho, drho, dd, sp);
            const double Ke = extrinsic_curvature_s(rho, dd, sp);
            const double omc = (1.0 - drho) * (1.0 + drho);
            const double expected =
                (sq((4.0 - sp.kappa * rho * rho) * omc) + dd * dd * rho * rho * sq(4.0 + sp.kappa * rho * rho)) /
                (16.0 * rho * rho * omc);
            CHECK(4.0 * H * H - 2.0 * Ke == doctest::Approx(expected).epsilon(1e-10));
        }
    }
}

TEST_CASE("angle bound holds along solver output") {
    const SpaceParams sp{0, 1};
    const CanonicalExample ex = integrate_canonical(WeingartenClass::constant_ke(1.0), sp);
    for (const SampleRow& r : ex.samples)
        CHECK(r.nu * r.nu <= 1.0 / (1.0 + sq(sp.tau * r.rho)) + 1e-12);
}
