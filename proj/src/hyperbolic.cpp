#include "weingarten/hyperbolic.hpp"

#include <cmath>

#include "weingarten/numeric.hpp"
#include "weingarten/rk.hpp"
#include "weingarten/rootfind.hpp"

namespace weingarten {

std::pair<double, double> h2r_principal_curvatures(const HyperState& st, double dy) {
    if (st.r <= 1e-8) throw SingularAxis("h2r_principal_curvatures: r at the rotation axis");
    const double rad = 1.0 - st.y * st.y;
    if (rad <= 0.0) throw DomainError("h2r_principal_curvatures: |r'| must be < 1");
    const double sq_rad = std::sqrt(rad);
    return {-dy / sq_rad, sq_rad / std::tanh(st.r)};
}

namespace {

using State3 = std::array<double, 3>; // (x, y, h)

struct H2Rhs {
    const WeingartenClass& cls;
    bool flipped;

    double f_eval(double u1, double u2) const {
        return flipped ? -eval_f(cls, -u1, u2) : eval_f(cls, u1, u2);
    }
    double yprime(double x, double y) const {
        const double rad = (1.0 - y) * (1.0 + y);
        if (x <= 0.0)
            throw DomainError("h2r rhs: x must be positive (x=" + format_double(x) + ")");
        if (rad <= 0.0)
            throw DomainError("h2r rhs: |y| must be < 1 (x=" + format_double(x) +
                              ", y=" + format_double(y) + ")");
        const double sr = std::sqrt(rad);
        return -sr * f_eval(sr / std::tanh(x), y * y);
    }
    State3 operator()(double, const State3& q) const {
        return {q[1], yprime(q[0], q[1]), std::sqrt(std::fmax(1.0 - q[1] * q[1], 0.0))};
    }
};

HyperState h2r_series_init(const H2Rhs& rhs, double alpha, const SolveConfig& config) {
    const double s0 = config.s0;
    if (alpha <= 0.0)
        throw ConfigError("h2r series: umbilicity constant must be positive for the axis start");
    auto residual = [&](double r3) {
        const double x = s0 + r3 * s0 * s0 * s0;
        const double y = 1.0 + 3.0 * r3 * s0 * s0;
        return 6.0 * r3 * s0 - rhs.yprime(x, y);
    };
    // The residual vanishes at m = sqrt(-6 r3) = alpha, but f may cover
    // several branches with spurious fixed points elsewhere, so expand a
    // bracket symmetrically around the known umbilicity constant.
    auto r_of_m = [](double m) { return -m * m / 6.0; };
    bool bracketed = false;
    double lo = 0.0, hi = 0.0;
    for (double d : logspace(1e-6, 1e6, 150)) {
        const double m_lo = alpha / (1.0 + d), m_hi = alpha * (1.0 + d);
        double f_lo, f_hi;
        try {
            f_lo = residual(r_of_m(m_lo));
            f_hi = residual(r_of_m(m_hi));
        } catch (const Error&) {
            continue;
        }
        if (!std::isfinite(f_lo) || !std::isfinite(f_hi)) continue;
        if (f_lo == 0.0) {
            lo = hi = r_of_m(m_lo);
            bracketed = true;
            break;
        }
        if (f_hi == 0.0) {
            lo = hi = r_of_m(m_hi);
            bracketed = true;
            break;
        }
        if ((f_lo > 0) != (f_hi > 0)) {
            lo = r_of_m(m_lo);
            hi = r_of_m(m_hi);
            bracketed = true;
            break;
        }
    }
    if (!bracketed) throw NoRoot("h2r series: no residual sign change around the umbilic start");
    const double r3 = hi == lo ? hi : bisect([&](double x) { return residual(x); }, lo, hi, 1e-14);
    HyperState st;
    st.s = s0;
    st.r = s0 + r3 * s0 * s0 * s0;
    st.y = 1.0 + 3.0 * r3 * s0 * s0;
    st.h = 0.5 * alpha * s0 * s0;
    return st;
}

H2Sample make_h2_sample(double s, const State3& q, const H2Rhs& rhs) {
    H2Sample row;
    row.s = s;
    row.x = q[0];
    row.y = q[1];
    row.h = q[2];
    const double dy = rhs.yprime(q[0], q[1]);
    const auto [k1, k2] = h2r_principal_curvatures(HyperState{s, q[0], q[1], q[2]}, dy);
    row.k1 = k1;
    row.k2 = k2;
    row.sigma_sq = k1 * k1 + k2 * k2;
    return row;
}

} // namespace

H2Orbit h2r_orbit(const WeingartenClass& fform, const SolveConfig& config) {
    if (fform.kind != WeingartenClass::Kind::FForm)
        throw ConfigError("h2r_orbit: class must be in the k1 = f(k2, v) normal form");

    H2Orbit orbit;
    double alpha = umbilic_constant(fform, orbit.flipped);
    orbit.umbilic = alpha;
    H2Rhs rhs{fform, orbit.flipped};
    RKRhs<3> f = [&rhs](double s, const State3& q) { return rhs(s, q); };

    const HyperState init = h2r_series_init(rhs, alpha, config);
    double s = init.s;
    State3 q = {init.r, init.y, init.h};

    auto record = [&](double sv, const State3& qv) {
        orbit.samples.push_back(make_h2_sample(sv, qv, rhs));
        orbit.max_sigma_sq = std::fmax(orbit.max_sigma_sq, orbit.samples.back().sigma_sq);
        orbit.min_y = std::fmin(orbit.min_y, qv[1]);
    };
    record(s, q);

    auto partial = [&](double s0, const State3& q0, double u) -> State3 {
        if (u <= 0.0) return q0;
        return dopri5_step<3>(f, s0, q0, u, config.rel_tol, config.abs_tol).y;
    };

    auto close_sphere = [&](double s_star, const State3& q_star) {
        orbit.classification = Classification::Sphere;
        orbit.turning_s = s_star;
        const double h_star = q_star[2];
        State3 qt = {q_star[0], 0.0, h_star};
        record(s_star, qt);
        const std::size_t upper = orbit.samples.size() - 1;
        for (std::size_t i = upper; i-- > 0;) {
            H2Sample m = orbit.samples[i];
            m.s = 2.0 * s_star - m.s;
            m.y = -m.y;
            m.h = 2.0 * h_star - m.h;
            orbit.samples.push_back(m);
            orbit.min_y = std::fmin(orbit.min_y, m.y);
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
            st = dopri5_step<3>(f, s, q, hstep, config.rel_tol, config.abs_tol);
        } catch (const Error&) {
            failed = true;
        }
        if (failed || st.err_norm > 1.0) {
            hstep = failed ? 0.25 * hstep : rk_next_h(hstep, st.err_norm);
            if (hstep < 1e-13 * std::fmax(1.0, s)) {
                orbit.classification = Classification::SecondFormBlowup;
                orbit.blowup_x = q[0];
                orbit.blowup_y = q[1];
                return orbit;
            }
            continue;
        }

        const State3& qn = st.y;
        // (a) turning point
        if (q[1] > 0.0 && qn[1] <= 0.0) {
            double lo = 0.0, hi = hstep;
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo + hi);
                bool crossed = true;
                try {
                    crossed = partial(s, q, mid)[1] <= 0.0;
                } catch (const Error&) {
                }
                if (crossed)
                    hi = mid;
                else
                    lo = mid;
            }
            close_sphere(s + lo, partial(s, q, lo));
            return orbit;
        }
        // (d) blowup: k1 = -y'/sqrt(1-y^2) past the cap, or f undefined
        bool blown = false;
        double dy = 0.0;
        try {
            dy = rhs.yprime(qn[0], qn[1]);
        } catch (const Error&) {
            blown = true;
        }
        if (blown || std::fabs(dy) / std::sqrt(std::fmax(1.0 - qn[1] * qn[1], 1e-300)) >
                         config.blowup_threshold) {
            orbit.classification = Classification::SecondFormBlowup;
            orbit.blowup_x = qn[0];
            orbit.blowup_y = qn[1];
            if (!blown) record(s + hstep, qn);
            return orbit;
        }
        // (c) stall
        if (std::fabs(qn[1]) < config.cyl_eps_drho && std::fabs(dy) < config.cyl_eps_ddrho) {
            if (std::isnan(stall_start)) stall_start = s + hstep;
            if (s + hstep - stall_start >= config.cyl_span) {
                record(s + hstep, qn);
                orbit.classification = Classification::CylinderAsymptotic;
                return orbit;
            }
        } else {
            stall_start = std::numeric_limits<double>::quiet_NaN();
        }
        // (b) horizon
        if (qn[0] >= config.rho_horizon) {
            record(s + hstep, qn);
            orbit.classification = Classification::EntireGraph;
            return orbit;
        }

        s += hstep;
        q = qn;
        record(s, q);
        hstep = rk_next_h(hstep, st.err_norm);

        if (s >= config.max_s) {
            orbit.reached_max_s = true;
            orbit.classification = Classification::Inconclusive;
            return orbit;
        }
    }
}

BarrierCurves barrier_curves(double a, double alpha0) {
    if (!(0.0 < a && a < alpha0))
        throw DomainError("barrier_curves: need 0 < a < alpha0");
    return BarrierCurves{a, alpha0};
}

namespace {
double barrier_eval(double y, double denom) {
    const double arg = std::sqrt(std::fmax(1.0 - y * y, 0.0)) / denom;
    if (arg >= 1.0) throw DomainError("barrier curve: artanh argument >= 1");
    return std::atanh(arg);
}
} // namespace

double BarrierCurves::gamma(double y) const { return barrier_eval(y, a); }
double BarrierCurves::gamma0(double y) const { return barrier_eval(y, alpha0); }

double BarrierCurves::gamma0_curvature_fd(double step) const {
    auto yx = [&](double x) {
        const double t = alpha0 * std::tanh(x);
        return std::sqrt(1.0 - t * t);
    };
    // graph y(x) near (0,1): curvature |y''| since y'(0) = 0
    return std::fabs((yx(step) - 2.0 * yx(0.0) + yx(-step)) / (step * step));
}

bool BarrierCurves::orbit_stays_left(const H2Orbit& orbit) const {
    for (const H2Sample& row : orbit.samples) {
        if (!(row.y > 0.0 && row.y < 1.0)) continue;
        const double arg = std::sqrt(1.0 - row.y * row.y) / alpha0;
        if (arg >= 1.0) continue; // beyond the barrier's reach in y
        if (!(row.x < std::atanh(arg))) return false;
    }
    return true;
}

namespace {

// B(v): cubic Hermite ramp, 1 for v <= v0, 0 for v >= v1, built from the
// grammar's own operations so the blended class stays a plain expression:
//   u  = (v - v0)/(v1 - v0)
//   t  = (u + abs(u))/2            = max(0, u)
//   tc = (t + 1 - abs(t - 1))/2    = min(1, t)
//   B  = 1 - tc^2 (3 - 2 tc)
int build_ramp(Expr& e, double v0, double v1) {
    using Op = Expr::Op;
    auto num = [&](double x) { return e.add_node({Op::Num, x, -1, -1}); };
    auto bin = [&](Op op, int a, int b) { return e.add_node({op, 0.0, a, b}); };
    auto un = [&](Op op, int a) { return e.add_node({op, 0.0, a, -1}); };

    const int v = e.add_node({Op::VarV, 0.0, -1, -1});
    const int u = bin(Op::Div, bin(Op::Sub, v, num(v0)), num(v1 - v0));
    const int t = bin(Op::Div, bin(Op::Add, u, un(Op::Abs, u)), num(2.0));
    const int tc = bin(Op::Div,
                       bin(Op::Sub, bin(Op::Add, t, num(1.0)), un(Op::Abs, bin(Op::Sub, t, num(1.0)))),
                       num(2.0));
    const int smooth = bin(Op::Mul, bin(Op::Mul, tc, tc), bin(Op::Sub, num(3.0), bin(Op::Mul, num(2.0), tc)));
    return bin(Op::Sub, num(1.0), smooth);
}

// f(k2, v) = phi(v) + 1/(k2 - phi(v)) on the branch k2 > phi(v). The extra
// 0*log(k2 - phi) term contributes nothing on the branch but raises EvalError
// on the other side, so the integrator cannot silently hop across the pole.
int build_fform(Expr& e, int phi_node) {
    using Op = Expr::Op;
    const int k2 = e.add_node({Op::VarT, 0.0, -1, -1});
    const int one = e.add_node({Op::Num, 1.0, -1, -1});
    const int zero = e.add_node({Op::Num, 0.0, -1, -1});
    const int diff = e.add_node({Op::Sub, 0.0, k2, phi_node});
    const int inv = e.add_node({Op::Div, 0.0, one, diff});
    const int guard = e.add_node({Op::Mul, 0.0, zero, e.add_node({Op::Log, 0.0, diff, -1})});
    const int sum = e.add_node({Op::Add, 0.0, phi_node, inv});
    return e.add_node({Op::Add, 0.0, sum, guard});
}

HyperState h2r_advance_to(const H2Rhs& rhs, HyperState from, double s_target,
                          const SolveConfig& config) {
    RKRhs<3> f = [&rhs](double s, const State3& q) { return rhs(s, q); };
    double s = from.s;
    State3 q = {from.r, from.y, from.h};
    double hstep = std::fmin(config.max_ds, 1e-3);
    while (s_target - s > 1e-15 * std::fmax(1.0, s_target)) {
        hstep = std::fmin(hstep, s_target - s);
        RKStep<3> st;
        bool failed = false;
        try {
            st = dopri5_step<3>(f, s, q, hstep, config.rel_tol, config.abs_tol);
        } catch (const Error&) {
            failed = true; // stage excursion past an invariant boundary
        }
        if (failed || st.err_norm > 1.0) {
            hstep = failed ? 0.25 * hstep : rk_next_h(hstep, st.err_norm);
            if (hstep < 1e-14) throw NonConvergent("h2r_advance_to: step size underflow");
            continue;
        }
        s += hstep;
        q = st.y;
        hstep = std::fmin(rk_next_h(hstep, st.err_norm), config.max_ds);
    }
    return HyperState{s_target, q[0], q[1], q[2]};
}

} // namespace

Popu0Result popu0_class(const Expr& phi0, double eps, const SolveConfig& config) {
    if (!(eps > config.s0))
        throw ConstructionError("popu0_class: eps must exceed the series handoff parameter");
    for (double v : linspace(0.0, 1.0, 201)) {
        const double p = phi0.eval(0.0, v);
        if (!(p > 0.0) || !(p > std::sqrt(1.0 - v)))
            throw ConfigError("popu0_class: base profile must satisfy phi0(v) > sqrt(1-v) > 0");
    }

    // base class f0 = phi0(v) + 1/(k2 - phi0(v))
    Expr base_expr;
    const int phi0_node = base_expr.graft(phi0);
    base_expr.set_root(build_fform(base_expr, phi0_node));
    WeingartenClass base = WeingartenClass::fform_expr(base_expr);

    Popu0Result out{base, base, Popu0Certificate{}};
    out.cert.eps = eps;

    bool flipped = false;
    const double alpha = umbilic_constant(base, flipped);
    H2Rhs rhs{base, flipped};
    HyperState st = h2r_series_init(rhs, alpha, config);
    st = h2r_advance_to(rhs, st, eps, config);
    const double x_eps = st.r, y_eps = st.y;
    out.cert.x_eps = x_eps;
    out.cert.y_eps = y_eps;
    if (!(y_eps > 0.0 && y_eps < 1.0))
        throw ConstructionError("popu0_class: base orbit left (0,1) before eps");

    const double v1 = y_eps * y_eps;
    const double v0 = v1 / 8.0;
    const double vm = v1 / 4.0;
    out.cert.blend_lo = v0;
    out.cert.blend_hi = v1;

    // barrier form of condition (2): the wall at height y_eps/2 must sit at
    // or left of x_eps
    const double target = std::sqrt(1.0 - vm) / std::tanh(x_eps) + 0.5;
    const double ramp_at_vm = 1.0 - sq(1.0 / 7.0) * (3.0 - 2.0 / 7.0); // u(vm) = 1/7
    const double delta = std::fmax(0.0, (target - phi0.eval(0.0, vm)) / ramp_at_vm);
    out.cert.blend_delta = delta;

    // phi(v) = phi0(v) + delta * ramp(v)
    Expr phi_expr;
    {
        using Op = Expr::Op;
        const int p0 = phi_expr.graft(phi0);
        const int ramp = build_ramp(phi_expr, v0, v1);
        const int dnode = phi_expr.add_node({Op::Num, delta, -1, -1});
        const int scaled = phi_expr.add_node({Op::Mul, 0.0, dnode, ramp});
        phi_expr.set_root(phi_expr.add_node({Op::Add, 0.0, p0, scaled}));
    }

    out.cert.cond2_lhs = phi_expr.eval(0.0, vm);
    out.cert.cond2_rhs_printed = std::tanh(x_eps) / std::sqrt(1.0 - vm);
    out.cert.cond2_rhs_barrier = std::sqrt(1.0 - vm) / std::tanh(x_eps);
    if (!(out.cert.cond2_lhs > out.cert.cond2_rhs_barrier))
        throw ConstructionError("popu0_class: blend fails the barrier inequality at (y_eps)^2/4");

    Expr blended_expr;
    const int phi_node = blended_expr.graft(phi_expr);
    blended_expr.set_root(build_fform(blended_expr, phi_node));
    out.cls = WeingartenClass::fform_expr(blended_expr);

    // certificate: the blended orbit blows up inside (y_eps/2, y_eps)
    H2Orbit blown = h2r_orbit(out.cls, config);
    if (blown.classification != Classification::SecondFormBlowup)
        throw ConstructionError("popu0_class: blended orbit did not blow up (classified " +
                                classification_name(blown.classification) + ")");
    out.cert.x_star = blown.blowup_x;
    out.cert.y_star = blown.blowup_y;
    out.cert.y_star_in_window = blown.blowup_y > 0.5 * y_eps && blown.blowup_y < y_eps;

    // control: the base orbit passes through the same window without blowup
    H2Orbit ctrl = h2r_orbit(base, config);
    out.cert.base_no_blowup_in_window =
        !(ctrl.classification == Classification::SecondFormBlowup &&
          ctrl.blowup_y >= 0.5 * y_eps && ctrl.blowup_y <= y_eps);

    return out;
}

double s2r_matched_delta(double R) {
    return -R + std::cbrt(R / 6.0 + R * R * R);
}

S2RReport s2r_example(double R, double delta) {
    const double a4 = std::pow(R + delta, 3.0) / 8.0; // quartic coefficient
    auto hp = [&](double r) { return R * r + 4.0 * a4 * r * r * r; };
    auto hpp = [&](double r) { return R + 12.0 * a4 * r * r; };
    auto hppp = [&](double r) { return 24.0 * a4 * r; };
    auto k1p = [&](double r) {
        const double p = hp(r), q = hpp(r);
        return (hppp(r) * (1.0 + p * p) - 3.0 * p * q * q) / std::pow(1.0 + p * p, 2.5);
    };
    auto k2p = [&](double r) {
        const double p = hp(r), q = hpp(r);
        const double cot = std::cos(r) / std::sin(r);
        return ((q * cot - p / sq(std::sin(r))) * (1.0 + p * p) - p * p * q * cot) /
               std::pow(1.0 + p * p, 1.5);
    };

    S2RReport rep;
    rep.cond_axis = hpp(0.0) > 0.0; // h(0) = h'(0) = 0 identically for this family

    const double pi = 3.14159265358979323846;
    rep.worst_convex = std::numeric_limits<double>::infinity();
    rep.worst_product = -std::numeric_limits<double>::infinity();
    bool convex = true, opposite = true;
    for (double r : linspace(1e-3, pi - 1e-3, 4001)) {
        const double c = hpp(r);
        rep.worst_convex = std::fmin(rep.worst_convex, c);
        if (!(c > 0.0)) convex = false;
        const double prod = k1p(r) * k2p(r);
        rep.worst_product = std::fmax(rep.worst_product, prod);
        if (!(prod < 0.0)) opposite = false;
    }
    rep.cond_convex = convex;
    rep.cond_opposite = opposite;

    // axis limit of k1'/k2' by Richardson extrapolation in rho^2
    const double r1 = k1p(1e-2) / k2p(1e-2);
    const double r2 = k1p(1e-3) / k2p(1e-3);
    const double r3 = k1p(1e-4) / k2p(1e-4);
    const double e1 = (100.0 * r2 - r1) / 99.0;
    const double e2 = (100.0 * r3 - r2) / 99.0;
    rep.limit_ratio = (100.0 * e2 - e1) / 99.0;
    rep.cond_limit = std::fabs(rep.limit_ratio + 1.0) <= 1e-3;
    return rep;
}

} // namespace weingarten
