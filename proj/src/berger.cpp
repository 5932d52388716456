#include "weingarten/berger.hpp"

#include <cmath>

#include "weingarten/errors.hpp"
#include "weingarten/numeric.hpp"

namespace weingarten {

namespace {
constexpr double kPi = 3.14159265358979323846;

void require_berger(const SpaceParams& p, const char* who) {
    if (!(p.kappa > 0.0) || p.tau == 0.0)
        throw DomainError(std::string(who) + ": needs kappa > 0 and tau != 0");
}

double dot4(const Vec4& a, const Vec4& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}
} // namespace

Vec4 to_vec4(const BergerPoint& p) {
    return {p.z.real(), p.z.imag(), p.w.real(), p.w.imag()};
}

BergerPoint from_vec4(const Vec4& v) {
    return {{v[0], v[1]}, {v[2], v[3]}};
}

Vec4 vertical_field(const BergerPoint& p) {
    const std::complex<double> iz = std::complex<double>(0.0, 1.0) * p.z;
    const std::complex<double> iw = std::complex<double>(0.0, 1.0) * p.w;
    return {iz.real(), iz.imag(), iw.real(), iw.imag()};
}

double berger_metric(const BergerPoint& p, const Vec4& X, const Vec4& Y,
                     const SpaceParams& params) {
    require_berger(params, "berger_metric");
    const Vec4 pos = to_vec4(p);
    if (std::fabs(dot4(X, pos)) > 1e-10 || std::fabs(dot4(Y, pos)) > 1e-10)
        throw TangencyError("berger_metric: vectors must be tangent to S^3");
    const Vec4 xi = vertical_field(p);
    const double k = params.kappa;
    return 4.0 / k * (dot4(X, Y) + (4.0 * sq(params.tau) / k - 1.0) * dot4(X, xi) * dot4(Y, xi));
}

std::array<double, 3> hopf_project(const BergerPoint& p, const SpaceParams& params) {
    if (!(params.kappa > 0.0)) throw DomainError("hopf_project: needs kappa > 0");
    const std::complex<double> zw = p.z * std::conj(p.w);
    const double scale = 2.0 / std::sqrt(params.kappa);
    return {scale * zw.real(), scale * zw.imag(),
            scale * 0.5 * (std::norm(p.z) - std::norm(p.w))};
}

BergerPoint chart_immersion(const ModelPoint& p, const SpaceParams& params) {
    require_berger(params, "chart_immersion");
    const double rho = std::sqrt(p.x1 * p.x1 + p.x2 * p.x2);
    const double sl = std::sqrt(lambda_factor(rho, params));
    const double sg = params.kappa / (4.0 * params.tau);
    const std::complex<double> phase(std::cos(sg * p.x3), std::sin(sg * p.x3));
    const std::complex<double> xy(p.x1, p.x2);
    return {sl * (std::sqrt(params.kappa) / 2.0) * xy * phase, sl * phase};
}

double fiber_period(const SpaceParams& params) {
    require_berger(params, "fiber_period");
    return 8.0 * kPi * params.tau / params.kappa;
}

Metric3 chart_pullback_metric(const ModelPoint& p, const SpaceParams& params, double fd_step) {
    const ModelPoint q{p.x1, p.x2, -p.x3};
    const Vec4 pos = to_vec4(chart_immersion(q, params));
    Vec4 d[3];
    for (int k = 0; k < 3; ++k) {
        ModelPoint pp = p, pm = p;
        (k == 0 ? pp.x1 : k == 1 ? pp.x2 : pp.x3) += fd_step;
        (k == 0 ? pm.x1 : k == 1 ? pm.x2 : pm.x3) -= fd_step;
        const Vec4 a = to_vec4(chart_immersion({pp.x1, pp.x2, -pp.x3}, params));
        const Vec4 b = to_vec4(chart_immersion({pm.x1, pm.x2, -pm.x3}, params));
        for (int j = 0; j < 4; ++j) d[k][j] = (a[j] - b[j]) / (2.0 * fd_step);
        // exact tangency before metric evaluation
        double dp = 0.0;
        for (int j = 0; j < 4; ++j) dp += d[k][j] * pos[j];
        for (int j = 0; j < 4; ++j) d[k][j] -= dp * pos[j];
    }
    const BergerPoint bp = from_vec4(pos);
    Metric3 g{};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) g[a][b] = berger_metric(bp, d[a], d[b], params);
    return g;
}

StereoPoint stereo_project(const BergerPoint& p) {
    const Vec4 v = to_vec4(p);
    const double denom = 1.0 - v[3];
    if (std::fabs(denom) < 1e-14)
        throw PoleError("stereo_project: point at the projection pole (0,0,0,1)");
    return {v[0] / denom, v[1] / denom, v[2] / denom};
}

StereoPoint profile_to_stereo(double rho, double h, double theta, const SpaceParams& params) {
    require_berger(params, "profile_to_stereo");
    const double sg = params.kappa / (4.0 * params.tau);
    const double sk2 = std::sqrt(params.kappa) / 2.0;
    const double denom = std::sqrt(1.0 + 0.25 * params.kappa * rho * rho) - std::sin(sg * h);
    if (std::fabs(denom) < 1e-14)
        throw PoleError("profile_to_stereo: profile point maps to the projection pole");
    return {sk2 * rho * std::cos(theta + sg * h) / denom,
            sk2 * rho * std::sin(theta + sg * h) / denom,
            std::cos(sg * h) / denom};
}

EmbeddednessReport embeddedness_check(const CanonicalExample& example, const SpaceParams& params) {
    require_berger(params, "embeddedness_check");
    if (example.classification != Classification::Sphere)
        throw DomainError("embeddedness_check: needs a Sphere classification");
    EmbeddednessReport rep;
    rep.height = example.diagnostics.total_height;
    rep.threshold = fiber_period(params);
    rep.embedded = rep.height < rep.threshold;
    return rep;
}

namespace {

// Shanks acceleration of the tail of a sequence; returns the last transform
// that is numerically defined.
double shanks_limit(const std::vector<double>& v) {
    std::vector<double> cur = v;
    double best = cur.back();
    for (int round = 0; round < 3 && cur.size() >= 3; ++round) {
        std::vector<double> next;
        for (std::size_t i = 1; i + 1 < cur.size(); ++i) {
            const double den = cur[i + 1] + cur[i - 1] - 2.0 * cur[i];
            if (std::fabs(den) < 1e-14 * (std::fabs(cur[i + 1]) + std::fabs(cur[i - 1]) + 1e-30)) {
                next.push_back(cur[i + 1]);
            } else {
                next.push_back((cur[i + 1] * cur[i - 1] - cur[i] * cur[i]) / den);
            }
        }
        if (next.empty()) break;
        cur = next;
        best = cur.back();
    }
    return best;
}

std::array<double, 2> gamma_point(double rho, double hval, double tau) {
    // kappa = 4 normalization: gamma(rho) = (rho, cos(h/tau)) / (sqrt(1+rho^2) - sin(h/tau))
    const double denom = std::sqrt(1.0 + rho * rho) - std::sin(hval / tau);
    return {rho / denom, std::cos(hval / tau) / denom};
}

std::array<double, 2> secant_at(const std::vector<double>& rho, const std::vector<double>& h,
                                double tau, std::size_t i) {
    const auto p1 = gamma_point(rho[i - 1], h[i - 1], tau);
    const auto p2 = gamma_point(rho[i], h[i], tau);
    const double dx = p2[0] - p1[0], dy = p2[1] - p1[1];
    const double len = std::hypot(dx, dy);
    if (!(len > 0.0)) throw NonConvergent("antipodal check: degenerate tail secant");
    return {dx / len, dy / len};
}

// The secant direction approaches the limit tangent like c1/rho + c2/rho^2;
// Richardson extrapolation over a dyadic rho ladder removes the leading
// orders.
std::array<double, 2> tail_tangent(const std::vector<double>& rho, const std::vector<double>& h,
                                   double tau) {
    const double rho_hi = rho.back();
    std::array<double, 2> t[4];
    int levels = 0;
    for (int k = 0; k < 4; ++k) {
        const double target = rho_hi / static_cast<double>(1 << k);
        std::size_t idx = rho.size() - 1;
        while (idx > 1 && rho[idx - 1] > target) --idx;
        if (rho[idx] < 0.25 * target) break;
        t[k] = secant_at(rho, h, tau, idx);
        ++levels;
    }
    if (levels == 0) throw NonConvergent("antipodal check: no usable tail samples");
    // eliminate the 1/rho term between consecutive levels, then 1/rho^2
    std::array<double, 2> cur[4];
    for (int k = 0; k < levels; ++k) cur[k] = t[k];
    int m = levels;
    double weight = 2.0;
    while (m > 1) {
        for (int k = 0; k + 1 < m; ++k)
            for (int c = 0; c < 2; ++c)
                cur[k][c] = (weight * cur[k][c] - cur[k + 1][c]) / (weight - 1.0);
        --m;
        weight *= 2.0;
    }
    const double len = std::hypot(cur[0][0], cur[0][1]);
    if (!(len > 0.0)) throw NonConvergent("antipodal check: tangent extrapolation degenerated");
    return {cur[0][0] / len, cur[0][1] / len};
}

} // namespace

AntipodalReport antipodal_closure_check(const std::vector<double>& rho_in,
                                        const std::vector<double>& h_in,
                                        const SpaceParams& params, double tol) {
    require_berger(params, "antipodal_closure_check");
    if (rho_in.size() != h_in.size() || rho_in.size() < 8)
        throw DomainError("antipodal_closure_check: need matching sample arrays of length >= 8");

    // rescale to the kappa = 4 normalization: lengths scale by c = sqrt(kappa)/2
    const double c = std::sqrt(params.kappa) / 2.0;
    const double tau = params.tau / c; // bundle curvature scales like 1/length
    std::vector<double> rho(rho_in), h(h_in);
    if (c != 1.0) {
        for (double& r : rho) r *= c;
        for (double& x : h) x *= c;
    }

    AntipodalReport rep;

    // bounded-height test on the last decade of samples
    const double rho_hi = rho.back();
    std::vector<double> tail_h;
    for (std::size_t i = 0; i < rho.size(); ++i)
        if (rho[i] >= 0.1 * rho_hi) tail_h.push_back(h[i]);
    if (tail_h.size() < 4)
        throw DomainError("antipodal_closure_check: too few samples in the last decade");
    double tmin = tail_h[0], tmax = tail_h[0];
    for (double x : tail_h) {
        tmin = std::fmin(tmin, x);
        tmax = std::fmax(tmax, x);
    }
    double hmax_abs = 0.0;
    for (double x : h) hmax_abs = std::fmax(hmax_abs, std::fabs(x));
    if (tmax - tmin > 0.1 * (hmax_abs + 1.0)) {
        rep.convergent = false;
        throw NonConvergent("antipodal_closure_check: h does not settle on the sampled range");
    }
    rep.convergent = true;
    rep.a_limit = shanks_limit(tail_h);

    rep.tangent = tail_tangent(rho, h, tau);
    std::vector<double> h_star(h.size());
    for (std::size_t i = 0; i < h.size(); ++i)
        h_star[i] = -h[i] + kPi * tau + 2.0 * rep.a_limit;
    rep.tangent_star = tail_tangent(rho, h_star, tau);

    rep.expected = {-std::sin(rep.a_limit / tau), -std::cos(rep.a_limit / tau)};
    rep.opposition_error = std::hypot(rep.tangent[0] + rep.tangent_star[0],
                                      rep.tangent[1] + rep.tangent_star[1]);
    rep.pass = rep.opposition_error <= tol;
    return rep;
}

} // namespace weingarten
