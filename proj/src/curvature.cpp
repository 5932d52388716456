#include "weingarten/curvature.hpp"

#include <cmath>

#include "weingarten/errors.hpp"
#include "weingarten/numeric.hpp"

namespace weingarten {

// 1 - drho^2 (1 + tau^2 rho^2), with 1 - drho^2 factored as
// (1 - drho)(1 + drho) to stay exact near the axis where drho -> 1.
static double sigma_radicand(double rho, double drho, const SpaceParams& params) {
    const double omc = (1.0 - drho) * (1.0 + drho);
    return omc - drho * drho * sq(params.tau * rho);
}

double h_prime(double rho, double drho, const SpaceParams& params) {
    const double rad = sigma_radicand(rho, drho, params);
    if (rad < -1e-12) throw DomainError("h_prime: negative radicand, state violates unit sigma-speed");
    return 4.0 * std::sqrt(std::fmax(rad, 0.0)) / (4.0 + params.kappa * rho * rho);
}

double h_prime(const ProfileState& st, const SpaceParams& params) {
    return h_prime(st.rho, st.drho, params);
}

double mean_curvature_s(double rho, double drho, double ddrho, const SpaceParams& params) {
    const double k = params.kappa, t2 = params.tau * params.tau;
    if (rho <= 1e-8) throw SingularAxis("mean_curvature_s: rho at the rotation axis");
    const double rad = sigma_radicand(rho, drho, params);
    if (rad <= 0.0) throw DomainError("mean_curvature_s: nonpositive radicand");
    // numerator grouped around 1 - drho^2 so the umbilic limit at the axis
    // does not cancel
    const double omc = (1.0 - drho) * (1.0 + drho);
    const double num = omc * (4.0 - k * rho * rho) - 8.0 * t2 * rho * rho * drho * drho -
                       rho * ddrho * (4.0 + k * rho * rho) * (1.0 + t2 * rho * rho);
    return num / (8.0 * rho * std::sqrt(rad));
}

double extrinsic_curvature_s(double rho, double ddrho, const SpaceParams& params) {
    const double k = params.kappa, t2 = params.tau * params.tau;
    if (rho <= 1e-8) throw SingularAxis("extrinsic_curvature_s: rho at the rotation axis");
    return -t2 + ddrho / (16.0 * rho) * (4.0 + k * rho * rho) * (-4.0 + (k - 8.0 * t2) * rho * rho);
}

double sigma_norm_sq(double H, double Ke) {
    if (H * H < Ke - 1e-12) throw DomainError("sigma_norm_sq: H^2 < K_e, complex principal curvatures");
    return 4.0 * H * H - 2.0 * Ke;
}

namespace {

// 4th-order central stencils on a uniform grid
double d1(const std::vector<double>& f, std::size_t i, double h) {
    return (-f[i + 2] + 8.0 * f[i + 1] - 8.0 * f[i - 1] + f[i - 2]) / (12.0 * h);
}
double d2(const std::vector<double>& f, std::size_t i, double h) {
    return (-f[i + 2] + 16.0 * f[i + 1] - 30.0 * f[i] + 16.0 * f[i - 1] - f[i - 2]) / (12.0 * h * h);
}

} // namespace

std::vector<GraphCurvature> graph_curvatures_u(const std::vector<double>& rho,
                                               const std::vector<double>& h,
                                               double u0, double du,
                                               const SpaceParams& params,
                                               const FdConfig&) {
    if (rho.size() != h.size() || rho.size() < 5)
        throw DomainError("graph_curvatures_u: need matching sample arrays of length >= 5");
    const double k = params.kappa, tau = params.tau, t2 = tau * tau;
    std::vector<GraphCurvature> out;
    out.reserve(rho.size() - 4);
    for (std::size_t i = 2; i + 2 < rho.size(); ++i) {
        const double r = rho[i];
        if (r <= 0.0) throw DomainError("graph_curvatures_u: rho must be positive away from the axis");
        if (params.kappa < 0.0 && r >= params.rho_max() * (1.0 - 1e-12))
            throw DomainError("graph_curvatures_u: sample at the model boundary");
        const double rp = d1(rho, i, du), rpp = d2(rho, i, du);
        const double hp = d1(h, i, du), hpp = d2(h, i, du);
        const double Q = 4.0 + k * r * r;
        if (rp == 0.0 && hp == 0.0)
            throw DomainError("graph_curvatures_u: singular parametrization sample");
        const double D = hp * hp * Q * Q + 16.0 * rp * rp * (1.0 + t2 * r * r);

        GraphCurvature g;
        g.u = u0 + du * static_cast<double>(i);
        g.nu = 4.0 * rp / std::sqrt(D);

        const double numH = -hp * hp * hp * k * k * r * r * r * r +
                            16.0 * hp * (hp * hp - r * rpp + rp * rp) +
                            16.0 * r * r * r * t2 * (hpp * rp - hp * rpp) +
                            16.0 * hpp * r * rp;
        g.H = Q * Q * numH / (8.0 * r * std::pow(D, 1.5));

        const double first = hp * Q * Q * (4.0 - r * r * (k - 8.0 * t2)) *
                             (hpp * rp * Q - hp * (rpp * Q - 2.0 * r * rp * rp * (k - 4.0 * t2))) /
                             (r * D * D);
        const double second = t2 * sq(hp * hp * Q * Q + 4.0 * r * r * rp * rp * (k - 4.0 * t2)) / (D * D);
        g.Ke = first - second;
        out.push_back(g);
    }
    return out;
}

namespace {

using Vec3 = std::array<double, 3>;

Vec3 point_diff(const Patch& f, double u, double v, int du, int dv, double h) {
    const ModelPoint a = f(u + du * h, v + dv * h);
    const ModelPoint b = f(u - du * h, v - dv * h);
    return {(a.x1 - b.x1) / (2 * h), (a.x2 - b.x2) / (2 * h), (a.x3 - b.x3) / (2 * h)};
}

Vec3 second_diff(const Patch& f, double u, double v, bool uu, bool vv, double h) {
    if (uu && vv) {
        const ModelPoint pp = f(u + h, v + h), pm = f(u + h, v - h);
        const ModelPoint mp = f(u - h, v + h), mm = f(u - h, v - h);
        return {(pp.x1 - pm.x1 - mp.x1 + mm.x1) / (4 * h * h),
                (pp.x2 - pm.x2 - mp.x2 + mm.x2) / (4 * h * h),
                (pp.x3 - pm.x3 - mp.x3 + mm.x3) / (4 * h * h)};
    }
    const ModelPoint c = f(u, v);
    const ModelPoint p = uu ? f(u + h, v) : f(u, v + h);
    const ModelPoint m = uu ? f(u - h, v) : f(u, v - h);
    return {(p.x1 - 2 * c.x1 + m.x1) / (h * h), (p.x2 - 2 * c.x2 + m.x2) / (h * h),
            (p.x3 - 2 * c.x3 + m.x3) / (h * h)};
}

Metric3 invert3(const Metric3& g, double& det) {
    det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
          g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
          g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
    if (det <= 0.0) throw DomainError("fd_shape_operator: metric not positive definite here");
    Metric3 inv{};
    inv[0][0] = (g[1][1] * g[2][2] - g[1][2] * g[2][1]) / det;
    inv[0][1] = (g[0][2] * g[2][1] - g[0][1] * g[2][2]) / det;
    inv[0][2] = (g[0][1] * g[1][2] - g[0][2] * g[1][1]) / det;
    inv[1][0] = inv[0][1];
    inv[1][1] = (g[0][0] * g[2][2] - g[0][2] * g[2][0]) / det;
    inv[1][2] = (g[0][2] * g[1][0] - g[0][0] * g[1][2]) / det;
    inv[2][0] = inv[0][2];
    inv[2][1] = inv[1][2];
    inv[2][2] = (g[0][0] * g[1][1] - g[0][1] * g[1][0]) / det;
    return inv;
}

double dot_g(const Metric3& g, const Vec3& a, const Vec3& b) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += g[i][j] * a[i] * b[j];
    return s;
}

} // namespace

ShapeSample fd_shape_operator(const Patch& patch, double u, double v,
                              const SpaceParams& params, const FdConfig& fd) {
    const double h = fd.shape_step;
    const ModelPoint p = patch(u, v);
    if (params.kappa < 0.0) {
        const double r = std::sqrt(p.x1 * p.x1 + p.x2 * p.x2);
        if (r >= params.rho_max() * (1.0 - 10.0 * h))
            throw DomainError("fd_shape_operator: patch too close to the model boundary");
    }

    const Vec3 Xu = point_diff(patch, u, v, 1, 0, h);
    const Vec3 Xv = point_diff(patch, u, v, 0, 1, h);
    const Vec3 Xuu = second_diff(patch, u, v, true, false, h);
    const Vec3 Xvv = second_diff(patch, u, v, false, true, h);
    const Vec3 Xuv = second_diff(patch, u, v, true, true, h);

    const Metric3 g = metric_at(p, params);
    double detg = 0.0;
    const Metric3 ginv = invert3(g, detg);

    // Christoffel symbols from central differences of the metric
    const double hm = fd.metric_step;
    Metric3 dg[3];
    const ModelPoint shifts[3][2] = {
        {{p.x1 + hm, p.x2, p.x3}, {p.x1 - hm, p.x2, p.x3}},
        {{p.x1, p.x2 + hm, p.x3}, {p.x1, p.x2 - hm, p.x3}},
        {{p.x1, p.x2, p.x3 + hm}, {p.x1, p.x2, p.x3 - hm}}};
    for (int kdir = 0; kdir < 3; ++kdir) {
        const Metric3 gp = metric_at(shifts[kdir][0], params);
        const Metric3 gm = metric_at(shifts[kdir][1], params);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) dg[kdir][i][j] = (gp[i][j] - gm[i][j]) / (2.0 * hm);
    }
    double gamma[3][3][3]; // gamma[l][m][n] = Gamma^l_{mn}
    for (int l = 0; l < 3; ++l)
        for (int m = 0; m < 3; ++m)
            for (int n = 0; n < 3; ++n) {
                double s = 0.0;
                for (int kk = 0; kk < 3; ++kk)
                    s += ginv[l][kk] * (dg[m][n][kk] + dg[n][m][kk] - dg[kk][m][n]);
                gamma[l][m][n] = 0.5 * s;
            }

    // unit normal via the g-cross product of Xu, Xv
    const double sqrtg = std::sqrt(detg);
    const Vec3 cross_cov = {sqrtg * (Xu[1] * Xv[2] - Xu[2] * Xv[1]),
                            sqrtg * (Xu[2] * Xv[0] - Xu[0] * Xv[2]),
                            sqrtg * (Xu[0] * Xv[1] - Xu[1] * Xv[0])};
    Vec3 N{};
    for (int l = 0; l < 3; ++l)
        N[l] = ginv[l][0] * cross_cov[0] + ginv[l][1] * cross_cov[1] + ginv[l][2] * cross_cov[2];
    const double nn = dot_g(g, N, N);
    if (!(nn > 0.0)) throw DomainError("fd_shape_operator: degenerate tangent plane");
    for (double& c : N) c /= std::sqrt(nn);

    auto covariant_second = [&](const Vec3& A, const Vec3& B, const Vec3& Dab) {
        Vec3 full = Dab;
        for (int l = 0; l < 3; ++l)
            for (int m = 0; m < 3; ++m)
                for (int n = 0; n < 3; ++n) full[l] += gamma[l][m][n] * A[m] * B[n];
        return dot_g(g, full, N);
    };

    const double E = dot_g(g, Xu, Xu), F = dot_g(g, Xu, Xv), G = dot_g(g, Xv, Xv);
    const double L = covariant_second(Xu, Xu, Xuu);
    const double M = covariant_second(Xu, Xv, Xuv);
    const double Nc = covariant_second(Xv, Xv, Xvv);
    const double det1 = E * G - F * F;
    if (!(det1 > 0.0)) throw DomainError("fd_shape_operator: degenerate first fundamental form");

    ShapeSample out;
    out.H = (E * Nc - 2.0 * F * M + G * L) / (2.0 * det1);
    out.Ke = (L * Nc - M * M) / det1;
    out.nu = g[0][2] * N[0] + g[1][2] * N[1] + g[2][2] * N[2]; // g(N, d/dx3)
    return out;
}

InducedGauss induced_gauss_curvature(const std::vector<ProfileState>& states,
                                     double ds, const SpaceParams& params) {
    const std::size_t n = states.size();
    if (n < 5) throw DomainError("induced_gauss_curvature: need at least 5 uniform samples");
    std::vector<double> E(n), F(n), G(n);
    for (std::size_t i = 0; i < n; ++i) {
        const ProfileState& st = states[i];
        const Metric3 g = metric_at({st.rho, 0.0, st.h}, params);
        const double hp = h_prime(st, params);
        E[i] = g[0][0] * st.drho * st.drho + 2.0 * g[0][2] * st.drho * hp + g[2][2] * hp * hp;
        F[i] = st.rho * (g[0][1] * st.drho + g[1][2] * hp);
        G[i] = g[1][1] * st.rho * st.rho;
    }
    InducedGauss out;
    for (std::size_t i = 2; i + 2 < n; ++i) {
        const double Eu = d1(E, i, ds), Fu = d1(F, i, ds), Gu = d1(G, i, ds);
        const double Guu = d2(G, i, ds);
        // Brioschi with all v-derivatives vanishing by rotational symmetry
        const double m1[3][3] = {{-0.5 * Guu, 0.5 * Eu, Fu},
                                 {-0.5 * Gu, E[i], F[i]},
                                 {0.0, F[i], G[i]}};
        const double m2[3][3] = {{0.0, 0.0, 0.5 * Gu},
                                 {0.0, E[i], F[i]},
                                 {0.5 * Gu, F[i], G[i]}};
        auto det3 = [](const double m[3][3]) {
            return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        };
        const double den = sq(E[i] * G[i] - F[i] * F[i]);
        out.index.push_back(i);
        out.K.push_back((det3(m1) - det3(m2)) / den);
    }
    return out;
}

} // namespace weingarten
