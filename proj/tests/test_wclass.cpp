#include <doctest.h>

#include <cmath>
#include <random>

#include "weingarten/errors.hpp"
#include "weingarten/numeric.hpp"
#include "weingarten/wclass.hpp"

using namespace weingarten;

TEST_CASE("eval_phi per class kind") {
    CHECK(eval_phi(WeingartenClass::constant_h(1.0), 3.0, 0.2) == 1.0);
    CHECK(eval_phi(WeingartenClass::general_phi("1+0.4*sqrt(t)"), 4.0, 0.0) == doctest::Approx(1.8));
    CHECK(eval_phi(WeingartenClass::prescribed_h("1+v"), 0.0, 0.25) == doctest::Approx(1.25));
    CHECK_THROWS_AS(eval_phi(WeingartenClass::fform("2-k2"), 0.0, 0.0), EvalError);
}

TEST_CASE("class construction guards") {
    CHECK_THROWS_AS(WeingartenClass::constant_ke(0.0), ConfigError);
    CHECK_THROWS_AS(WeingartenClass::constant_ke(-1.0), ConfigError);
    CHECK_THROWS_AS(WeingartenClass::prescribed_ke("v - 0.5"), ConfigError);
    CHECK_NOTHROW(WeingartenClass::prescribed_ke("1 + 0.5*v"));
}

TEST_CASE("ellipticity check") {
    const EllipticityReport ch = ellipticity_check(WeingartenClass::constant_h(2.0));
    CHECK(ch.pass);
    CHECK(ch.worst_value == 0.0);

    // analytic value 4t (0.1/sqrt(t))^2 = 0.04 at every t > 0
    const EllipticityReport ok = ellipticity_check(WeingartenClass::general_phi("0.2*sqrt(t)"));
    CHECK(ok.pass);
    CHECK(ok.worst_value == doctest::Approx(0.04).epsilon(1e-2));

    // borderline non-elliptic: 4t (0.5/sqrt(t))^2 = 1 at every t > 0
    const EllipticityReport bad = ellipticity_check(WeingartenClass::general_phi("sqrt(t)"));
    CHECK_FALSE(bad.pass);
    CHECK(bad.worst_value == doctest::Approx(1.0).epsilon(1e-2));
}

TEST_CASE("umbilicity constants") {
    CHECK(umbilic_constant(WeingartenClass::constant_ke(1.0)) == 1.0);
    CHECK(umbilic_constant(WeingartenClass::constant_h(0.6)) == 0.6);
    // f(x) = 3 - x has the fixed point 1.5
    CHECK(umbilic_constant(WeingartenClass::fform("2*1.5 - k2")) ==
          doctest::Approx(1.5).epsilon(1e-12));
    CHECK(umbilic_constant(WeingartenClass::prescribed_ke("4 - 3*v")) ==
          doctest::Approx(1.0)); // sqrt(Phi(1))

    // alpha^2 = c up to 1 ulp
    std::mt19937_64 rng(3u);
    for (int i = 0; i < 50; ++i) {
        const double c = 1e-3 + 10.0 * u64_to_unit(rng());
        const double a = umbilic_constant(WeingartenClass::constant_ke(c));
        CHECK(std::fabs(a * a - c) <= 2.0 * std::fabs(c) * 2.220446049250313e-16);
    }

    // normalization flip for a class whose fixed point is negative
    bool flipped = false;
    const double a = umbilic_constant(WeingartenClass::fform("-1.2 - k2"), flipped);
    CHECK(flipped);
    CHECK(a == doctest::Approx(0.6).epsilon(1e-12));

    CHECK_THROWS_AS(umbilic_constant(WeingartenClass::fform("k2 + 1")), NoFixedPoint);
}

TEST_CASE("multi-branch fform picks the upper component") {
    // phi0 + 1/(k2 - phi0) has fixed points phi0 - 1 and phi0 + 1
    const double a = umbilic_constant(WeingartenClass::fform("1.1 + 1/(k2 - 1.1)"));
    CHECK(a == doctest::Approx(2.1).epsilon(1e-10));
}

TEST_CASE("ellipticity check always passes for constant mean curvature") {
    for (double h0 : {-3.0, -0.5, 0.0, 0.5, 7.0})
        CHECK(ellipticity_check(WeingartenClass::constant_h(h0)).pass);
}
