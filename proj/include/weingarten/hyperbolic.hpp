#ifndef WEINGARTEN_HYPERBOLIC_HPP
#define WEINGARTEN_HYPERBOLIC_HPP

#include <string>
#include <vector>

#include "weingarten/solver.hpp"
#include "weingarten/wclass.hpp"

namespace weingarten {

// Profile state of a rotational surface in H^2 x R in the hyperboloid model:
// geodesic radius r(s) > 0, y = r'(s) in (-1,1), height h(s), with
// r'^2 + h'^2 = 1 on the h' >= 0 branch.
struct HyperState {
    double s = 0.0;
    double r = 0.0;
    double y = 0.0;
    double h = 0.0;
};

// Principal curvatures (k1, k2) = (-y'/sqrt(1-y^2), sqrt(1-y^2) coth r)
// given y' = dy/ds; SingularAxis for r at the axis.
std::pair<double, double> h2r_principal_curvatures(const HyperState& st, double dy);

struct H2Sample {
    double s = 0.0, x = 0.0, y = 0.0, h = 0.0;
    double k1 = 0.0, k2 = 0.0, sigma_sq = 0.0;
};

struct H2Orbit {
    Classification classification = Classification::Inconclusive;
    std::vector<H2Sample> samples;
    double turning_s = std::numeric_limits<double>::quiet_NaN();
    double blowup_x = std::numeric_limits<double>::quiet_NaN();
    double blowup_y = std::numeric_limits<double>::quiet_NaN();
    double max_sigma_sq = 0.0;
    double min_y = 1.0;
    bool reached_max_s = false; // bounded end with no event (reported, not an error)
    bool flipped = false;       // umbilic normalization f(x) -> -f(-x) applied
    double umbilic = 0.0;
};

// Integrates x' = y, y' = -sqrt(1-y^2) f(sqrt(1-y^2) coth x, y^2) from the
// axis series with the same event framework as the canonical solver. Unlike
// integrate_canonical, hitting max_s is reported in the orbit (the
// boundedness statements need exactly that outcome).
H2Orbit h2r_orbit(const WeingartenClass& fform, const SolveConfig& config = SolveConfig{});

// Barrier curves x = Gamma(y) = artanh(sqrt(1-y^2)/a) and Gamma0 with alpha0
// in place of a; the blowup barrier argument keeps orbits strictly left of
// Gamma0.
struct BarrierCurves {
    double a = 0.0;
    double alpha0 = 0.0;

    double gamma(double y) const;
    double gamma0(double y) const;
    // |curvature| of Gamma0 at (0,1) by central differences of
    // y(x) = sqrt(1 - alpha0^2 tanh^2 x); analytically alpha0^2.
    double gamma0_curvature_fd(double step = 1e-3) const;
    bool orbit_stays_left(const H2Orbit& orbit) const;
};

BarrierCurves barrier_curves(double a, double alpha0);

struct Popu0Certificate {
    double eps = 0.0;
    double x_eps = 0.0, y_eps = 0.0;
    double x_star = 0.0, y_star = 0.0;
    bool y_star_in_window = false;     // y* in (y_eps/2, y_eps)
    double blend_lo = 0.0, blend_hi = 0.0, blend_delta = 0.0;
    double cond2_lhs = 0.0;            // phi((y_eps)^2/4)
    double cond2_rhs_printed = 0.0;    // tanh(x_eps)/sqrt(1-(y_eps)^2/4)
    double cond2_rhs_barrier = 0.0;    // sqrt(1-(y_eps)^2/4)*coth(x_eps)
    bool base_no_blowup_in_window = false;
};

struct Popu0Result {
    WeingartenClass cls;   // the blended class, still a plain expression
    WeingartenClass base;  // the phi0 class
    Popu0Certificate cert;
};

// Non-complete counterexample generator: from a base profile function phi0
// (positive, phi0(v) > sqrt(1-v)), blends a new phi that coincides with phi0
// on [(y_eps)^2, 1], exceeds it below (cubic Hermite ramp on
// [(y_eps)^2/8, (y_eps)^2]), and pushes the barrier behind the orbit so the
// second fundamental form blows up at some y* in (y_eps/2, y_eps).
Popu0Result popu0_class(const Expr& phi0, double eps, const SolveConfig& config = SolveConfig{});

struct S2RReport {
    bool cond_axis = false;       // h(0) = h'(0) = 0, h''(0) > 0
    bool cond_convex = false;     // h'' > 0 on (0, pi)
    bool cond_opposite = false;   // k1' k2' < 0 on (0, pi)
    bool cond_limit = false;      // lim k1'/k2' = -1 at the axis (Richardson, tol 1e-3)
    double limit_ratio = 0.0;
    double worst_convex = 0.0;
    double worst_product = 0.0;
    bool all() const { return cond_axis && cond_convex && cond_opposite && cond_limit; }
};

// The S^2 x R singular example h(rho) = (R/2) rho^2 + ((R+delta)^3/8) rho^4
// with principal curvatures k1 = h''/(1+h'^2)^{3/2}, k2 = h' cot(rho)/sqrt(1+h'^2).
S2RReport s2r_example(double R, double delta);

// delta making the axis limit of k1'/k2' equal -1.
double s2r_matched_delta(double R);

} // namespace weingarten

#endif
