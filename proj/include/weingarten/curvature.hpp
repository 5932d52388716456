#ifndef WEINGARTEN_CURVATURE_HPP
#define WEINGARTEN_CURVATURE_HPP

#include <functional>
#include <vector>

#include "weingarten/space.hpp"

namespace weingarten {

// Profile-curve state in the sigma-arclength parameter s, in which the angle
// function is nu = rho'(s) and (1 + tau^2 rho^2) rho'^2 <= 1.
struct ProfileState {
    double s = 0.0;
    double rho = 0.0;
    double drho = 0.0;
    double h = 0.0;
};

// Fixed finite-difference constants so every oracle is reproducible.
struct FdConfig {
    double shape_step = 1e-4;    // patch/metric differencing for the shape-operator oracle
    double metric_step = 1e-4;   // Christoffel differencing
    double graph_step = 0.02;    // uniform grid spacing for sampled-graph stencils
    double axis_threshold = 1e-8;
    double radicand_tol = 1e-12;
};

// dh/ds >= 0 branch from unit sigma-speed:
//   4 sqrt(1 - (1 + tau^2 rho^2) rho'^2) / (4 + kappa rho^2).
double h_prime(double rho, double drho, const SpaceParams& params);
double h_prime(const ProfileState& st, const SpaceParams& params);

// Mean curvature of the rotational surface in the s-parametrization.
double mean_curvature_s(double rho, double drho, double ddrho, const SpaceParams& params);

// Extrinsic curvature in the s-parametrization:
//   K_e = -tau^2 + (rho''/(16 rho)) (4 + kappa rho^2)(-4 + (kappa - 8 tau^2) rho^2).
double extrinsic_curvature_s(double rho, double ddrho, const SpaceParams& params);

// |sigma|^2 = 4H^2 - 2K_e = k1^2 + k2^2; requires H^2 >= K_e.
double sigma_norm_sq(double H, double Ke);

struct GraphCurvature {
    double u = 0.0;
    double nu = 0.0;
    double H = 0.0;
    double Ke = 0.0;
};

// Curvatures of a rotational surface given as sampled (rho(u), h(u)) on a
// uniform grid; derivatives from 4th-order central stencils, interior points
// only (two samples trimmed at each end).
std::vector<GraphCurvature> graph_curvatures_u(const std::vector<double>& rho,
                                               const std::vector<double>& h,
                                               double u0, double du,
                                               const SpaceParams& params,
                                               const FdConfig& fd = FdConfig{});

using Patch = std::function<ModelPoint(double, double)>;

struct ShapeSample {
    double H = 0.0;
    double Ke = 0.0;
    double nu = 0.0;
};

// Independent oracle: numeric shape operator of an immersed parametrized
// patch, assembled from metric_at alone (finite-difference Christoffel
// symbols, g-cross-product normal). Accuracy O(shape_step^2).
ShapeSample fd_shape_operator(const Patch& patch, double u, double v,
                              const SpaceParams& params, const FdConfig& fd = FdConfig{});

// Intrinsic Gauss curvature of a rotational surface from the Brioschi
// formula applied to the numerically induced first fundamental form, sampled
// on a uniform s-grid. Returns K at interior indices [2, n-3].
struct InducedGauss {
    std::vector<std::size_t> index;
    std::vector<double> K;
};
InducedGauss induced_gauss_curvature(const std::vector<ProfileState>& states,
                                     double ds, const SpaceParams& params);

} // namespace weingarten

#endif
