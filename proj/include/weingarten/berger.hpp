#ifndef WEINGARTEN_BERGER_HPP
#define WEINGARTEN_BERGER_HPP

#include <array>
#include <complex>
#include <vector>

#include "weingarten/solver.hpp"
#include "weingarten/space.hpp"

namespace weingarten {

// Point of S^3 = {(z,w) in C^2 : |z|^2 + |w|^2 = 1}; identified with R^4 via
// (x1,x2,x3,x4) = (Re z, Im z, Re w, Im w).
struct BergerPoint {
    std::complex<double> z, w;
};

struct StereoPoint {
    double y1 = 0.0, y2 = 0.0, y3 = 0.0;
};

using Vec4 = std::array<double, 4>;

Vec4 to_vec4(const BergerPoint& p);
BergerPoint from_vec4(const Vec4& v);

// The constant-length vertical field (iz, iw) at p, as a real 4-vector.
Vec4 vertical_field(const BergerPoint& p);

// Berger metric g(X,Y) = (4/kappa)(<X,Y> + (4 tau^2/kappa - 1)<X,xi><Y,xi>)
// on tangent vectors of S^3 (TangencyError beyond 1e-10). Requires kappa > 0
// and tau != 0.
double berger_metric(const BergerPoint& p, const Vec4& X, const Vec4& Y,
                     const SpaceParams& params);

// Hopf fibration onto the sphere of curvature kappa (radius 1/sqrt(kappa)):
// pi(z,w) = (2/sqrt(kappa)) (z conj(w), (|z|^2 - |w|^2)/2).
std::array<double, 3> hopf_project(const BergerPoint& p, const SpaceParams& params);

// Isometric chart immersion of the coordinate model into the Berger sphere:
// Psi(x1,x2,x3) = sqrt(lambda)((sqrt(kappa)/2)(x1+ix2)e^{i sg x3}, e^{i sg x3}),
// sg = kappa/(4 tau). Fibers repeat with x3-period 8 pi tau / kappa.
BergerPoint chart_immersion(const ModelPoint& p, const SpaceParams& params);

double fiber_period(const SpaceParams& params); // 8 pi tau / kappa

// Numeric pullback of the Berger metric through the chart embedding composed
// with the vertical mirror x3 -> -x3 (the mirror makes the pullback match
// the model metric's cross-term sign convention). Finite differences with
// step fd_step; agrees with metric_at to O(fd_step^2).
Metric3 chart_pullback_metric(const ModelPoint& p, const SpaceParams& params,
                              double fd_step = 1e-5);

// Stereographic projection of S^3 from p_N = (0,0,0,1); PoleError at p_N.
StereoPoint stereo_project(const BergerPoint& p);

// Closed form for stereo_project(chart_immersion(...)) on a profile point
// (rho, h) rotated by theta.
StereoPoint profile_to_stereo(double rho, double h, double theta, const SpaceParams& params);

struct EmbeddednessReport {
    bool embedded = false;
    double height = 0.0;
    double threshold = 0.0; // 8 pi tau / kappa
};

// A closed rotational sphere in the chart is embedded in the Berger sphere
// iff its total x3-extent stays below the fiber period.
EmbeddednessReport embeddedness_check(const CanonicalExample& example, const SpaceParams& params);

struct AntipodalReport {
    bool convergent = false;
    bool pass = false;            // the two limit tangents are opposite
    double a_limit = 0.0;         // extrapolated lim h(rho)
    double opposition_error = 0.0;
    std::array<double, 2> tangent{};      // numeric limit tangent of gamma
    std::array<double, 2> tangent_star{}; // numeric limit tangent of gamma*
    std::array<double, 2> expected{};     // closed form (-sin(a/tau), -cos(a/tau))
};

// Antipodal-closure tangent check for a chart-level entire graph with
// bounded height: estimates a = lim h(rho) (Shanks acceleration on the last
// decade of samples), transports the profile and its 180-degree rotation
// h* = -h + pi tau + 2a through the stereographic chart, and compares their
// incoming unit tangents at (1,0). Inputs with kappa != 4 are rescaled to
// the kappa = 4 normalization first.
AntipodalReport antipodal_closure_check(const std::vector<double>& rho,
                                        const std::vector<double>& h,
                                        const SpaceParams& params,
                                        double tol = 1e-3);

} // namespace weingarten

#endif
