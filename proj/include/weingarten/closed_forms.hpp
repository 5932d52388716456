#ifndef WEINGARTEN_CLOSED_FORMS_HPP
#define WEINGARTEN_CLOSED_FORMS_HPP

#include "weingarten/space.hpp"
#include "weingarten/wclass.hpp"

namespace weingarten {

// Cone-type surface of constant angle function beta, given as the radial
// graph x3 = h(rho) with
//   h(rho) = (4/beta) * int_0^rho sqrt(1 - beta^2 (1 + tau^2 t^2)) / (4 + kappa t^2) dt + c.
struct ConeSpec {
    double beta = 0.5; // in (-1,1) \ {0}
    double c = 0.0;    // integration constant
};

// Largest radius at which the cone graph is defined (model boundary for
// kappa < 0, radicand zero when tau != 0, +inf otherwise).
double cone_rho_bound(const ConeSpec& spec, const SpaceParams& params);

// Adaptive Gauss-Kronrod evaluation of the height integral to 1e-12.
double cone_height(double rho, const ConeSpec& spec, const SpaceParams& params);

// First integral of the constant-K_e profile: delta(x) = nu(x)^2 with
// delta(0) = 1. For kappa = 4 tau^2 the log form degenerates and the limit
// delta(x) = 1 - (c + tau^2) x^2 / (1 + tau^2 x^2) is used.
double ke_delta(double x, double c, const SpaceParams& params);

// nu(x) = sqrt(delta(x)); DomainError where delta < 0.
double ke_angle(double x, double c, const SpaceParams& params);

// Equatorial radius of the constant-K_e sphere: the root of delta on
// [0, x*), where x* = 2/sqrt(-kappa) (kappa<0), 2/sqrt(kappa-8tau^2)
// (kappa>8tau^2), +inf otherwise. Bisection to 1e-12.
double ke_x0(double c, const SpaceParams& params);

// Right side of the prescribed-K_e phase equation y' = G(x,y):
//   16 x (Phi(y^2) + tau^2) / ((4 + kappa x^2)(-4 + (kappa - 8 tau^2) x^2)).
double minkowski_rhs(double x, double y, const WeingartenClass& cls, const SpaceParams& params);

// Vertical cylinders x1^2 + x2^2 = R^2 have constant extrinsic curvature.
double cylinder_ke(const SpaceParams& params);

} // namespace weingarten

#endif
