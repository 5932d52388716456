#ifndef WEINGARTEN_SPACE_HPP
#define WEINGARTEN_SPACE_HPP

#include <array>
#include <cmath>

namespace weingarten {

// The ambient homogeneous space E3(kappa,tau) in its coordinate model:
// R^3 when kappa >= 0, the solid cylinder D(2/sqrt(-kappa)) x R when
// kappa < 0, with metric
//   ds^2 = lambda^2 (dx1^2 + dx2^2) + (tau lambda (x2 dx1 - x1 dx2) + dx3)^2,
//   lambda = 1 / (1 + (kappa/4)(x1^2 + x2^2)).
// kappa = 4 tau^2 (round sphere / Euclidean space) is allowed everywhere.
struct SpaceParams {
    double kappa = 0.0;
    double tau = 0.0;

    // Radius of the model disk; +inf for kappa >= 0.
    double rho_max() const {
        return kappa < 0.0 ? 2.0 / std::sqrt(-kappa) : std::numeric_limits<double>::infinity();
    }
    bool product_space() const { return tau == 0.0; }
};

struct ModelPoint {
    double x1 = 0.0, x2 = 0.0, x3 = 0.0;
};

using Metric3 = std::array<std::array<double, 3>, 3>;

// lambda = 1/(1 + (kappa/4) rho^2); DomainError at or beyond the model disk
// boundary (strict guard with 1e-12 relative margin, the metric pole).
double lambda_factor(double rho, const SpaceParams& params);

// Coefficient array of the ambient metric at p in the (x1,x2,x3) basis.
// Exactly symmetric; positive definite on the model domain.
Metric3 metric_at(const ModelPoint& p, const SpaceParams& params);

// Gauss equation: K = K_e + tau^2 + (kappa - 4 tau^2) nu^2.
double gauss_from_extrinsic(double ke, double nu, const SpaceParams& params);

// Geodesic distance from the axis to radial coordinate rho,
// i.e. the integral of lambda from 0 to rho, in closed form.
double geodesic_radius(double rho, const SpaceParams& params);

} // namespace weingarten

#endif
