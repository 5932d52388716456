#include "weingarten/space.hpp"

#include <limits>

#include "weingarten/errors.hpp"
#include "weingarten/numeric.hpp"

namespace weingarten {

double lambda_factor(double rho, const SpaceParams& params) {
    if (rho < 0.0) throw DomainError("lambda_factor: rho must be nonnegative");
    if (params.kappa < 0.0) {
        const double rmax = params.rho_max();
        if (rho >= rmax * (1.0 - 1e-12))
            throw DomainError("lambda_factor: rho at or beyond the model disk boundary");
    }
    return 1.0 / (1.0 + 0.25 * params.kappa * rho * rho);
}

Metric3 metric_at(const ModelPoint& p, const SpaceParams& params) {
    const double rho = std::sqrt(p.x1 * p.x1 + p.x2 * p.x2);
    const double lam = lambda_factor(rho, params);
    const double tl = params.tau * lam;
    // ds^2 = lam^2(dx1^2+dx2^2) + (tl(x2 dx1 - x1 dx2) + dx3)^2
    Metric3 g{};
    g[0][0] = lam * lam + sq(tl * p.x2);
    g[1][1] = lam * lam + sq(tl * p.x1);
    g[2][2] = 1.0;
    g[0][1] = g[1][0] = -tl * tl * p.x1 * p.x2;
    g[0][2] = g[2][0] = tl * p.x2;
    g[1][2] = g[2][1] = -tl * p.x1;
    return g;
}

double gauss_from_extrinsic(double ke, double nu, const SpaceParams& params) {
    return ke + params.tau * params.tau + (params.kappa - 4.0 * params.tau * params.tau) * nu * nu;
}

double geodesic_radius(double rho, const SpaceParams& params) {
    if (rho < 0.0) throw DomainError("geodesic_radius: rho must be nonnegative");
    const double k = params.kappa;
    if (k == 0.0) return rho;
    if (k > 0.0) {
        const double sk = std::sqrt(k);
        return (2.0 / sk) * std::atan(sk * rho / 2.0);
    }
    const double rmax = params.rho_max();
    if (rho >= rmax * (1.0 - 1e-12))
        throw DomainError("geodesic_radius: rho at or beyond the model disk boundary");
    const double sk = std::sqrt(-k);
    return (2.0 / sk) * std::atanh(sk * rho / 2.0);
}

} // namespace weingarten
