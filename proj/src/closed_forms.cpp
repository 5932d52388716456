#include "weingarten/closed_forms.hpp"

#include <cmath>
#include <limits>

#include "weingarten/errors.hpp"
#include "weingarten/numeric.hpp"
#include "weingarten/quadrature.hpp"
#include "weingarten/rootfind.hpp"

namespace weingarten {

double cone_rho_bound(const ConeSpec& spec, const SpaceParams& params) {
    double bound = std::numeric_limits<double>::infinity();
    if (params.kappa < 0.0) bound = params.rho_max();
    if (params.tau != 0.0) {
        const double b = std::sqrt(1.0 - spec.beta * spec.beta) /
                         std::fabs(spec.beta * params.tau);
        bound = std::fmin(bound, b);
    }
    return bound;
}

double cone_height(double rho, const ConeSpec& spec, const SpaceParams& params) {
    if (!(std::fabs(spec.beta) > 0.0 && std::fabs(spec.beta) < 1.0))
        throw DomainError("cone_height: beta must lie in (-1,1) and be nonzero");
    if (rho < 0.0) throw DomainError("cone_height: rho must be nonnegative");
    if (rho >= cone_rho_bound(spec, params))
        throw DomainError("cone_height: rho outside the cone's domain of definition");
    const double beta = spec.beta, k = params.kappa, t2 = sq(params.tau);
    auto integrand = [&](double t) {
        const double rad = 1.0 - beta * beta * (1.0 + t2 * t * t);
        return std::sqrt(std::fmax(rad, 0.0)) / (4.0 + k * t * t);
    };
    return 4.0 / beta * integrate_gk(integrand, 0.0, rho, 1e-12) + spec.c;
}

namespace {

bool degenerate_round(const SpaceParams& p) {
    // kappa = 4 tau^2 collapses the log form to a 0/0 limit
    return std::fabs(p.kappa - 4.0 * p.tau * p.tau) < 1e-14 * std::fmax(1.0, std::fabs(p.kappa));
}

} // namespace

double ke_delta(double x, double c, const SpaceParams& params) {
    if (x < 0.0) throw DomainError("ke_delta: x must be nonnegative");
    const double k = params.kappa, t2 = sq(params.tau);
    if (degenerate_round(params))
        return 1.0 - (c + t2) * x * x / (1.0 + t2 * x * x);
    const double denom = 4.0 + k * x * x;
    const double numer = 4.0 - (k - 8.0 * t2) * x * x;
    if (!(denom > 0.0) || !(numer > 0.0))
        throw DomainError("ke_delta: x outside the log-argument domain");
    return 1.0 + 2.0 * (c + t2) / (k - 4.0 * t2) * std::log(numer / denom);
}

double ke_angle(double x, double c, const SpaceParams& params) {
    const double d = ke_delta(x, c, params);
    if (d < 0.0) throw DomainError("ke_angle: delta(x) < 0, beyond the equatorial radius");
    return std::sqrt(d);
}

double ke_x0(double c, const SpaceParams& params) {
    if (!(c > 0.0)) throw DomainError("ke_x0: c must be positive");
    const double k = params.kappa, t2 = sq(params.tau);
    double xstar;
    if (degenerate_round(params)) {
        // delta = 1 - (c + t2) x^2 / (1 + t2 x^2) vanishes at x^2 = 1/c
        return 1.0 / std::sqrt(c);
    }
    if (k < 0.0)
        xstar = params.rho_max();
    else if (k > 8.0 * t2)
        xstar = 2.0 / std::sqrt(k - 8.0 * t2);
    else
        xstar = std::numeric_limits<double>::infinity();

    auto f = [&](double x) { return ke_delta(x, c, params); };
    // expand towards x* until delta goes negative
    double lo = 0.0, hi = std::isfinite(xstar) ? 0.5 * xstar : 1.0;
    double fhi = f(hi);
    int guard = 0;
    while (fhi > 0.0) {
        lo = hi;
        hi = std::isfinite(xstar) ? 0.5 * (hi + xstar) : hi * 2.0;
        if (++guard > 2000 || !(hi > lo))
            throw NoRoot("ke_x0: no sign change of delta located before x*");
        fhi = f(hi);
    }
    if (fhi == 0.0) return hi;
    return bisect(f, lo, hi, 1e-15, 1e-12);
}

double minkowski_rhs(double x, double y, const WeingartenClass& cls, const SpaceParams& params) {
    if (!(cls.is_ke_form()))
        throw DomainError("minkowski_rhs: class must prescribe the extrinsic curvature");
    if (!(x > 0.0)) throw DomainError("minkowski_rhs: x must be positive");
    const double k = params.kappa, t2 = sq(params.tau);
    const double d1 = 4.0 + k * x * x;
    const double d2 = -4.0 + (k - 8.0 * t2) * x * x;
    if (d1 == 0.0 || d2 == 0.0) throw DomainError("minkowski_rhs: denominator zero");
    return 16.0 * x * (eval_phi(cls, 0.0, y * y) + t2) / (d1 * d2);
}

double cylinder_ke(const SpaceParams& params) {
    return -sq(params.tau);
}

} // namespace weingarten
