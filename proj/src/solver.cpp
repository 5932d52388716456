#include "weingarten/solver.hpp"

#include <cmath>

#include "weingarten/numeric.hpp"
#include "weingarten/rk.hpp"
#include "weingarten/rootfind.hpp"

namespace weingarten {

std::string classification_name(Classification c) {
    switch (c) {
        case Classification::Sphere: return "Sphere";
        case Classification::EntireGraph: return "EntireGraph";
        case Classification::CylinderAsymptotic: return "CylinderAsymptotic";
        case Classification::SecondFormBlowup: return "SecondFormBlowup";
        case Classification::Inconclusive: return "Inconclusive";
    }
    return "?";
}

namespace {

struct AffineParts {
    double A, B, C, rad; // H = A - B rho'', Ke = -tau^2 + C rho''
};

AffineParts affine_parts(double rho, double drho, const SpaceParams& p, const SolveConfig& cfg) {
    if (rho <= cfg.axis_threshold)
        throw SingularAxis("solve_rho_dd: state at the rotation axis");
    const double k = p.kappa, t2 = sq(p.tau);
    const double omc = (1.0 - drho) * (1.0 + drho); // exact near the axis
    const double rad2 = omc - drho * drho * t2 * rho * rho;
    if (rad2 <= 1e-12)
        throw DomainError("solve_rho_dd: radicand at or below tolerance (degenerate tangent plane)");
    const double rad = std::sqrt(rad2);
    AffineParts ap{};
    ap.rad = rad;
    ap.A = (omc * (4.0 - k * rho * rho) - 8.0 * t2 * rho * rho * drho * drho) / (8.0 * rho * rad);
    ap.B = (4.0 + k * rho * rho) * (1.0 + t2 * rho * rho) / (8.0 * rad);
    ap.C = (4.0 + k * rho * rho) * (-4.0 + (k - 8.0 * t2) * rho * rho) / (16.0 * rho);
    return ap;
}

} // namespace

double solve_rho_dd(double rho, double drho, const WeingartenClass& cls,
                    const SpaceParams& params, const SolveConfig& config) {
    const double t2 = sq(params.tau);
    const double v = drho * drho;

    if (cls.is_ke_form()) {
        if (rho <= config.axis_threshold)
            throw SingularAxis("solve_rho_dd: state at the rotation axis");
        const double k = params.kappa;
        const double d1 = 4.0 + k * rho * rho;
        const double d2 = -4.0 + (k - 8.0 * t2) * rho * rho;
        if (d1 == 0.0 || d2 == 0.0) throw DomainError("solve_rho_dd: denominator zero");
        return 16.0 * rho * (eval_phi(cls, 0.0, v) + t2) / (d1 * d2);
    }
    if (!cls.is_h_form())
        throw ConfigError("solve_rho_dd: f-form classes are integrated in the hyperbolic phase module");

    const AffineParts ap = affine_parts(rho, drho, params, config);

    if (cls.kind == WeingartenClass::Kind::ConstantH ||
        cls.kind == WeingartenClass::Kind::PrescribedH) {
        // Phi independent of t: the residual is exactly linear in rho''
        return (ap.A - eval_phi(cls, 0.0, v)) / ap.B;
    }

    // residual at trial rho'' = b; Phi extended by t -> max(t,0) so bracket
    // scans stay inside its domain (t >= 0 at any true root)
    auto residual = [&](double b) {
        const double H = ap.A - ap.B * b;
        const double Ke = -t2 + ap.C * b;
        const double t = std::fmax(H * H - Ke, 0.0);
        return H - eval_phi(cls, t, v);
    };

    double bracket = 1e3;
    while (bracket <= config.blowup_threshold) {
        const int n = 65;
        double bs[n], rs[n];
        bool ok[n];
        for (int i = 0; i < n; ++i) {
            bs[i] = -bracket + 2.0 * bracket * i / (n - 1);
            try {
                rs[i] = residual(bs[i]);
                ok[i] = std::isfinite(rs[i]);
            } catch (const EvalError&) {
                ok[i] = false;
            }
        }
        int sign_changes = 0, lo = -1;
        for (int i = 0; i + 1 < n; ++i) {
            if (!ok[i] || !ok[i + 1]) continue;
            if (rs[i] == 0.0) return bs[i];
            if ((rs[i] > 0) != (rs[i + 1] > 0)) {
                ++sign_changes;
                if (lo < 0) lo = i;
            }
        }
        if (sign_changes > 1)
            throw NoRoot("solve_rho_dd: several sign changes of the residual in [" +
                         format_double(-bracket) + ", " + format_double(bracket) +
                         "], ellipticity violated at rho=" + format_double(rho));
        if (sign_changes == 1) return newton_bisect(residual, bs[lo], bs[lo + 1], 1e-13);
        bracket *= 2.0;
    }
    throw NoRoot("solve_rho_dd: no residual sign change up to the blowup threshold at rho=" +
                 format_double(rho));
}

namespace {

double series_r3_closed_form(const WeingartenClass& cls, const SpaceParams& params) {
    const double t2 = sq(params.tau);
    return -(eval_phi(cls, 0.0, 1.0) + t2) / 6.0;
}

// residual of the series ansatz at s0 as a function of r3
double series_residual(double r3, double s0, const WeingartenClass& cls,
                       const SpaceParams& params) {
    const double rho = s0 + r3 * s0 * s0 * s0;
    const double drho = 1.0 + 3.0 * r3 * s0 * s0;
    const double ddrho = 6.0 * r3 * s0;
    const double H = mean_curvature_s(rho, drho, ddrho, params);
    const double Ke = extrinsic_curvature_s(rho, ddrho, params);
    const double t = std::fmax(H * H - Ke, 0.0);
    return H - eval_phi(cls, t, drho * drho);
}

} // namespace

ProfileState series_init(const WeingartenClass& cls, const SpaceParams& params,
                         const SolveConfig& config) {
    if (cls.kind == WeingartenClass::Kind::FForm)
        throw ConfigError("series_init: f-form classes are integrated in the hyperbolic phase module");
    double alpha = umbilic_constant(cls);
    const double s0 = config.s0;

    if (cls.is_h_form() && alpha < 0.0) {
        // mirror class: same profile radius with height reflected
        ProfileState st = series_init(negated_h_form(cls), params, config);
        st.h = -st.h;
        return st;
    }

    double r3;
    if (cls.is_ke_form()) {
        r3 = series_r3_closed_form(cls, params);
    } else {
        if (alpha == 0.0)
            throw ConfigError("series_init: umbilicity constant 0 (totally geodesic or degenerate axis start)");
        auto f = [&](double x) { return series_residual(x, s0, cls, params); };
        // The residual is ~ m - Phi with m = sqrt(-6 r3 - tau^2); it tends to
        // -alpha as r3 approaches the upper validity bound -tau^2/6 and grows
        // without bound as r3 decreases, so scan a geometric ladder downward
        // from that bound for the first sign change.
        const double u_max = -sq(params.tau) / 6.0;
        const double scale = alpha * alpha / 6.0;
        double prev_r = 0.0, prev_f = 0.0;
        bool have_prev = false, bracketed = false;
        double lo = 0.0, hi = 0.0;
        for (double m : logspace(1e-3, 1e9, 260)) {
            const double r = u_max - scale * m;
            if (r < -1e6) break;
            double val;
            try {
                val = f(r);
            } catch (const Error&) {
                have_prev = false;
                continue;
            }
            if (!std::isfinite(val)) {
                have_prev = false;
                continue;
            }
            if (val == 0.0) return ProfileState{s0, s0 + r * s0 * s0 * s0,
                                                1.0 + 3.0 * r * s0 * s0, 0.5 * alpha * s0 * s0};
            if (have_prev && (prev_f > 0) != (val > 0)) {
                lo = prev_r;
                hi = r;
                bracketed = true;
                break;
            }
            prev_r = r;
            prev_f = val;
            have_prev = true;
        }
        if (!bracketed)
            throw NoRoot("series_init: no residual sign change for r3 in [-1e6, 1e6]");
        r3 = bisect(f, lo, hi, 1e-14);
    }
    ProfileState st;
    st.s = s0;
    st.rho = s0 + r3 * s0 * s0 * s0;
    st.drho = 1.0 + 3.0 * r3 * s0 * s0;
    st.h = 0.5 * alpha * s0 * s0;
    return st;
}

namespace {

using State3 = std::array<double, 3>;

struct ProfileRhs {
    const WeingartenClass& cls;
    const SpaceParams& params;
    const SolveConfig& config;
    int h_sign;

    State3 operator()(double, const State3& y) const {
        const double ddrho = solve_rho_dd(y[0], y[1], cls, params, config);
        return {y[1], ddrho, h_sign * h_prime(y[0], y[1], params)};
    }
};

SampleRow make_row(double s, const State3& y, const WeingartenClass& cls,
                   const SpaceParams& params, const SolveConfig& config, double* residual_out) {
    SampleRow r;
    r.s = s;
    r.rho = y[0];
    r.drho = y[1];
    r.h = y[2];
    r.nu = y[1];
    const double ddrho = solve_rho_dd(y[0], y[1], cls, params, config);
    r.H = mean_curvature_s(y[0], y[1], ddrho, params);
    r.Ke = extrinsic_curvature_s(y[0], ddrho, params);
    r.sigma_sq = sigma_norm_sq(r.H, r.Ke);
    if (residual_out) {
        if (cls.is_ke_form())
            *residual_out = std::fabs(r.Ke - eval_phi(cls, 0.0, r.nu * r.nu));
        else
            *residual_out = std::fabs(r.H - eval_phi(cls, std::fmax(r.H * r.H - r.Ke, 0.0), r.nu * r.nu));
    }
    return r;
}

SampleRow axis_row(double s, double h, double nu_sign, double alpha,
                   const WeingartenClass& cls) {
    SampleRow r;
    r.s = s;
    r.rho = 0.0;
    r.drho = nu_sign;
    r.nu = nu_sign;
    r.h = h;
    r.H = alpha;
    r.Ke = cls.is_ke_form() ? eval_phi(cls, 0.0, 1.0) : alpha * alpha;
    r.sigma_sq = 4.0 * r.H * r.H - 2.0 * r.Ke;
    return r;
}

} // namespace

ProfileState integrate_to(const WeingartenClass& cls, const SpaceParams& params,
                          const SolveConfig& config, ProfileState from, double s_target,
                          int h_branch_sign) {
    ProfileRhs rhs{cls, params, config, h_branch_sign};
    RKRhs<3> f = [&rhs](double s, const State3& y) { return rhs(s, y); };
    double s = from.s;
    State3 y = {from.rho, from.drho, from.h};
    double hstep = std::fmin(config.max_ds, 1e-3);
    const int dir = s_target >= s ? +1 : -1;
    while (dir * (s_target - s) > 1e-15 * std::fmax(1.0, std::fabs(s_target))) {
        hstep = std::fmin(hstep, std::fabs(s_target - s));
        RKStep<3> st;
        bool failed = false;
        try {
            st = dopri5_step<3>(f, s, y, dir * hstep, config.rel_tol, config.abs_tol);
        } catch (const Error&) {
            failed = true; // stage excursion past an invariant boundary
        }
        if (failed || st.err_norm > 1.0) {
            hstep = failed ? 0.25 * hstep : std::fabs(rk_next_h(hstep, st.err_norm));
            if (hstep < 1e-14) throw NonConvergent("integrate_to: step size underflow");
            continue;
        }
        s += dir * hstep;
        y = st.y;
        hstep = std::fmin(rk_next_h(hstep, st.err_norm), config.max_ds);
    }
    return ProfileState{s_target, y[0], y[1], y[2]};
}

namespace {

// alpha > 0 main path; integrate_canonical wraps the degenerate and mirrored
// cases around it.
CanonicalExample integrate_core(const WeingartenClass& cls, const SpaceParams& params,
                                const SolveConfig& config) {
    const double alpha = umbilic_constant(cls);
    const int h_sign = +1;
    const ProfileState init = series_init(cls, params, config);

    CanonicalExample ex;
    ex.umbilic = alpha;
    ex.samples.push_back(axis_row(0.0, 0.0, +1.0, alpha, cls));
    ex.diagnostics.nu_min = 1.0;

    ProfileRhs rhs{cls, params, config, h_sign};
    RKRhs<3> f = [&rhs](double s, const State3& y) { return rhs(s, y); };

    auto record = [&](double s, const State3& y) {
        double res = 0.0;
        ex.samples.push_back(make_row(s, y, cls, params, config, &res));
        ex.diagnostics.max_residual = std::fmax(ex.diagnostics.max_residual, res);
        ex.diagnostics.max_sigma_sq = std::fmax(ex.diagnostics.max_sigma_sq, ex.samples.back().sigma_sq);
        ex.diagnostics.nu_min = std::fmin(ex.diagnostics.nu_min, y[1]);
    };

    double s = init.s;
    State3 y = {init.rho, init.drho, init.h};
    record(s, y);

    const double rho_boundary = params.kappa < 0.0
                                    ? params.rho_max() * (1.0 - config.boundary_margin)
                                    : config.rho_horizon;

    // bisection inside one accepted step: state after a partial step u
    auto partial = [&](double s0, const State3& y0, double u) -> State3 {
        if (u <= 0.0) return y0;
        return dopri5_step<3>(f, s0, y0, u, config.rel_tol, config.abs_tol).y;
    };
    auto locate = [&](double s0, const State3& y0, double h, auto&& crossed) -> double {
        double lo = 0.0, hi = h;
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            bool c = true; // a throwing probe counts as past the event
            try {
                c = crossed(partial(s0, y0, mid));
            } catch (const Error&) {
            }
            if (c)
                hi = mid;
            else
                lo = mid;
        }
        return lo;
    };

    auto close_sphere = [&](double s_star, const State3& y_star) {
        ex.classification = Classification::Sphere;
        ex.diagnostics.turning_s = s_star;
        ex.diagnostics.total_height = std::fabs(2.0 * y_star[2]);
        const double h_star = y_star[2];
        // turning row: curvatures from the axis-free kernels at drho = 0
        State3 yt = {y_star[0], 0.0, h_star};
        record(s_star, yt);
        // mirrored branch by reflection: rho(s*+u) = rho(s*-u),
        // h(s*+u) = 2 h* - h(s*-u)
        const std::size_t upper = ex.samples.size() - 1;
        for (std::size_t i = upper; i-- > 0;) {
            const SampleRow& src = ex.samples[i];
            SampleRow m = src;
            m.s = 2.0 * s_star - src.s;
            m.drho = -src.drho;
            m.nu = -src.nu;
            m.h = 2.0 * h_star - src.h;
            ex.samples.push_back(m);
            ex.diagnostics.nu_min = std::fmin(ex.diagnostics.nu_min, m.nu);
        }
    };

    double hstep = std::fmin(config.max_ds, 1e-3);
    double stall_start = std::numeric_limits<double>::quiet_NaN();

    for (;;) {
        hstep = std::fmin(hstep, config.max_ds);
        if (s + hstep > config.max_s) hstep = config.max_s - s;

        RKStep<3> st;
        bool failed = false;
        try {
            st = dopri5_step<3>(f, s, y, hstep, config.rel_tol, config.abs_tol);
        } catch (const Error&) {
            failed = true;
        }
        if (failed || st.err_norm > 1.0) {
            hstep = failed ? 0.25 * hstep : rk_next_h(hstep, st.err_norm);
            if (hstep < 1e-13 * std::fmax(1.0, s)) {
                // the step collapsed onto a singular point: decide which one
                if (params.kappa < 0.0 && y[0] >= params.rho_max() * (1.0 - 1e-4)) {
                    ex.classification = Classification::EntireGraph;
                    ex.diagnostics.nu_at_exit = y[1];
                    return ex;
                }
                // remaining stoppage modes (degenerate radicand, NoRoot) blow
                // up the second fundamental form
                ex.classification = Classification::SecondFormBlowup;
                ex.diagnostics.blowup_rho = y[0];
                return ex;
            }
            continue;
        }

        const double s_new = s + hstep;
        const State3& y_new = st.y;

        // (a) turning point: rho' crosses zero at finite s
        if (y[1] > 0.0 && y_new[1] <= 0.0) {
            const double u = locate(s, y, hstep, [](const State3& q) { return q[1] <= 0.0; });
            const State3 y_star = partial(s, y, u);
            close_sphere(s + u, y_star);
            return ex;
        }

        // (d) blowup: |rho''| past the cap or the radicand degenerating
        bool blowup = false;
        double ddrho_new = 0.0;
        try {
            ddrho_new = solve_rho_dd(y_new[0], y_new[1], cls, params, config);
        } catch (const Error&) {
            blowup = true;
        }
        const double rad_new = (1.0 - y_new[1]) * (1.0 + y_new[1]) -
                               y_new[1] * y_new[1] * sq(params.tau * y_new[0]);
        if (blowup || std::fabs(ddrho_new) > config.blowup_threshold || rad_new < 1e-10) {
            ex.classification = Classification::SecondFormBlowup;
            ex.diagnostics.blowup_rho = y_new[0];
            if (!blowup) record(s_new, y_new);
            return ex;
        }

        // (c) cylinder stall sustained over the window
        if (std::fabs(y_new[1]) < config.cyl_eps_drho && std::fabs(ddrho_new) < config.cyl_eps_ddrho) {
            if (std::isnan(stall_start)) stall_start = s_new;
            if (s_new - stall_start >= config.cyl_span) {
                record(s_new, y_new);
                ex.classification = Classification::CylinderAsymptotic;
                ex.diagnostics.asymptotic_radius = y_new[0];
                ex.diagnostics.stall_window_start = stall_start;
                return ex;
            }
        } else {
            stall_start = std::numeric_limits<double>::quiet_NaN();
        }

        // (b) model boundary (kappa < 0) or the configured horizon
        if (y_new[0] >= rho_boundary) {
            const double u =
                locate(s, y, hstep, [&](const State3& q) { return q[0] >= rho_boundary; });
            const State3 y_exit = partial(s, y, u);
            record(s + u, y_exit);
            ex.classification = Classification::EntireGraph;
            ex.diagnostics.nu_at_exit = y_exit[1];
            return ex;
        }

        s = s_new;
        y = y_new;
        record(s, y);
        hstep = rk_next_h(hstep, st.err_norm);

        if (s >= config.max_s) {
            ex.classification = Classification::Inconclusive;
            throw MaxSExceeded("integrate_canonical: no event before max_s = " +
                                   format_double(config.max_s),
                               ex);
        }
    }
}

// Phi == 0 with tau == 0: the canonical example is the totally geodesic
// slice/plane rho(s) = s, h = 0, which the arclength kernels cannot grade
// (degenerate radicand); emitted directly.
CanonicalExample totally_geodesic_example(const SpaceParams& params, const SolveConfig& config) {
    CanonicalExample ex;
    ex.classification = Classification::EntireGraph;
    ex.umbilic = 0.0;
    const double rho_hi = params.kappa < 0.0
                              ? params.rho_max() * (1.0 - config.boundary_margin)
                              : config.rho_horizon;
    for (double s : linspace(0.0, rho_hi, 257))
        ex.samples.push_back(SampleRow{s, s, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0});
    ex.diagnostics.nu_min = 1.0;
    ex.diagnostics.nu_at_exit = 1.0;
    ex.diagnostics.max_sigma_sq = 0.0;
    return ex;
}

} // namespace

CanonicalExample integrate_canonical(const WeingartenClass& cls, const SpaceParams& params,
                                     const SolveConfig& config) {
    if (cls.kind == WeingartenClass::Kind::FForm)
        throw ConfigError("integrate_canonical: f-form classes are integrated in the hyperbolic phase module");
    if (cls.is_h_form()) {
        const EllipticityReport rep = ellipticity_check(cls);
        if (!rep.pass)
            throw ConfigError("integrate_canonical: class fails the sampled ellipticity condition, worst 4t(dPhi/dt)^2 = " +
                              format_double(rep.worst_value) + " at t=" + format_double(rep.worst_t));
        const double alpha = umbilic_constant(cls);
        if (alpha == 0.0) {
            if (params.tau == 0.0) return totally_geodesic_example(params, config);
            throw ConfigError("integrate_canonical: umbilicity constant 0 with tau != 0 gives a "
                              "degenerate axis start beyond the series ansatz");
        }
        if (alpha < 0.0) {
            CanonicalExample ex = integrate_core(negated_h_form(cls), params, config);
            for (SampleRow& r : ex.samples) {
                r.h = -r.h;
                r.H = -r.H;
            }
            ex.umbilic = alpha;
            return ex;
        }
    }
    return integrate_core(cls, params, config);
}

MonotonicityReport monotonicity_check(const CanonicalExample& example) {
    MonotonicityReport rep;
    const auto& rows = example.samples;
    if (rows.size() < 3) {
        rep.note = "too few samples";
        return rep;
    }

    bool constant_one = true;
    for (const SampleRow& r : rows)
        if (std::fabs(r.nu - 1.0) > 1e-12) {
            constant_one = false;
            break;
        }
    if (constant_one) {
        rep.excluded_totally_geodesic = true;
        rep.note = "constant angle function 1: totally geodesic slice, excluded from the monotonicity statement";
        return rep;
    }

    rep.worst_step = -1.0;
    bool strict = true;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        if (!(rows[i].nu > 0.0)) continue; // upper half only
        const double d = rows[i + 1].nu - rows[i].nu;
        rep.worst_step = std::fmax(rep.worst_step, d);
        if (!(d < 0.0)) strict = false;
    }
    rep.pass = strict;

    if (example.classification == Classification::Sphere) {
        const bool ends = std::fabs(rows.front().nu - 1.0) == 0.0 && std::fabs(rows.back().nu + 1.0) == 0.0;
        bool all_strict = true;
        for (std::size_t i = 0; i + 1 < rows.size(); ++i)
            if (!(rows[i + 1].nu < rows[i].nu)) all_strict = false;
        rep.nu_surjective = ends && all_strict;
        rep.pass = rep.pass && rep.nu_surjective;
    }
    return rep;
}

double reflection_symmetry_error(const CanonicalExample& example, const WeingartenClass& cls,
                                 const SpaceParams& params, const SolveConfig& config) {
    if (example.classification != Classification::Sphere)
        throw DomainError("reflection_symmetry_error: only sphere outputs carry the reflection symmetry");
    const double s_star = example.diagnostics.turning_s;

    // locate the turning row and keep the strictly increasing upper half
    std::size_t turn = 0;
    for (std::size_t i = 0; i < example.samples.size(); ++i)
        if (example.samples[i].s == s_star && example.samples[i].drho == 0.0) turn = i;
    if (turn == 0) throw DomainError("reflection_symmetry_error: turning sample not found");

    SolveConfig tight = config;
    tight.rel_tol = std::fmin(config.rel_tol, 1e-12);
    tight.abs_tol = std::fmin(config.abs_tol, 1e-14);

    const SampleRow& tr = example.samples[turn];
    ProfileState cur{tr.s, tr.rho, tr.drho, tr.h};
    // the (rho, rho') subsystem is autonomous, so the mirrored class serves
    // for negative umbilic constants without touching h
    const WeingartenClass cls_eff =
        (cls.is_h_form() && example.umbilic < 0) ? negated_h_form(cls) : cls;
    double worst = 0.0;
    // continue the integration through the turning point, landing exactly on
    // the mirrored sample parameters
    for (std::size_t i = turn; i-- > 1;) {
        const SampleRow& src = example.samples[i];
        const double u = s_star - src.s;
        if (u > 0.9 * s_star) break;
        cur = integrate_to(cls_eff, params, tight, cur, s_star + u, +1);
        worst = std::fmax(worst, std::fabs(cur.rho - src.rho));
    }
    return worst;
}

} // namespace weingarten
