#include "weingarten/verify.hpp"

#include <chrono>
#include <cmath>
#include <random>

#include "weingarten/berger.hpp"
#include "weingarten/closed_forms.hpp"
#include "weingarten/curvature.hpp"
#include "weingarten/hyperbolic.hpp"
#include "weingarten/numeric.hpp"
#include "weingarten/solver.hpp"

namespace weingarten {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// nu as a function of rho over the upper half of a canonical example,
// cubic-Hermite interpolated with the exact slope dnu/drho = rho''/rho'.
HermiteCurve nu_of_rho(const CanonicalExample& ex, const WeingartenClass& cls,
                       const SpaceParams& params, double nu_floor = 0.02) {
    HermiteCurve c;
    for (const SampleRow& r : ex.samples) {
        if (r.nu < nu_floor) break;
        c.x.push_back(r.rho);
        c.y.push_back(r.nu);
        if (r.rho == 0.0) {
            c.dydx.push_back(0.0); // axis: rho'' -> 0 by symmetry
        } else {
            c.dydx.push_back(solve_rho_dd(r.rho, r.drho, cls, params) / r.drho);
        }
    }
    return c;
}

std::vector<ProfileState> uniform_states(const WeingartenClass& cls, const SpaceParams& params,
                                         const SolveConfig& config, double s_lo, double s_hi,
                                         std::size_t n) {
    std::vector<ProfileState> out;
    out.reserve(n);
    ProfileState st = series_init(cls, params, config);
    const int sign = umbilic_constant(cls) < 0 ? -1 : +1;
    for (std::size_t i = 0; i < n; ++i) {
        const double s = s_lo + (s_hi - s_lo) * static_cast<double>(i) / static_cast<double>(n - 1);
        st = integrate_to(cls, params, config, st, s, sign);
        out.push_back(st);
    }
    return out;
}

std::string fmt(double v) { return format_double(v); }

CheckResult make_result(const std::string& name, bool pass, const std::string& detail,
                        const std::string& info = "") {
    return CheckResult{name, pass, detail, info};
}

// ---------------------------------------------------------------- criterion 1
CheckResult c1_ke_oracle() {
    struct Tuple {
        double kappa, tau, c;
    };
    const Tuple tuples[] = {{0, 1, 1}, {-1, 0, 1}, {4, 0, 1}, {4, 0.1, 1}};
    bool pass = true;
    std::string detail, info;
    for (const Tuple& t : tuples) {
        const SpaceParams sp{t.kappa, t.tau};
        const auto t0 = Clock::now();
        const WeingartenClass cls = WeingartenClass::constant_ke(t.c);
        const CanonicalExample ex = integrate_canonical(cls, sp);
        const double elapsed = seconds_since(t0);
        const double x0 = ke_x0(t.c, sp);
        const HermiteCurve nu = nu_of_rho(ex, cls, sp);
        double sup = 0.0;
        for (double x : linspace(0.0, 0.95 * x0, 512))
            sup = std::fmax(sup, std::fabs(nu.eval(x) - ke_angle(x, t.c, sp)));
        const bool ok =
            ex.classification == Classification::Sphere && sup <= 1e-6 && elapsed < 5.0;
        pass = pass && ok;
        detail += "(kappa=" + fmt(t.kappa) + ",tau=" + fmt(t.tau) + ",c=" + fmt(t.c) +
                  "): class=" + classification_name(ex.classification) + " sup|nu-closed|=" +
                  fmt(sup) + "; ";
        info += "run " + fmt(elapsed) + "s; ";
    }
    return make_result("constant-Ke closed-form oracle (4 tuples, sup <= 1e-6)", pass, detail, info);
}

// ---------------------------------------------------------------- criterion 2
CheckResult c2_round_spheres() {
    bool pass = true;
    std::string detail;
    {
        const SpaceParams sp{0, 0};
        const CanonicalExample ex = integrate_canonical(WeingartenClass::constant_h(1.0), sp);
        double sup = 0.0;
        for (const SampleRow& r : ex.samples) sup = std::fmax(sup, std::fabs(r.rho - std::sin(r.s)));
        pass = pass && ex.classification == Classification::Sphere && sup < 1e-8;
        detail += "H=1 in R^3: sup|rho-sin s|=" + fmt(sup) + "; ";
    }
    {
        const SpaceParams sp{0, 0};
        const CanonicalExample ex = integrate_canonical(WeingartenClass::constant_ke(1.0), sp);
        double sup = 0.0;
        for (const SampleRow& r : ex.samples) sup = std::fmax(sup, std::fabs(r.rho - std::sin(r.s)));
        pass = pass && ex.classification == Classification::Sphere && sup < 1e-8;
        detail += "Ke=1 in R^3: sup|rho-sin s|=" + fmt(sup) + "; ";
    }
    {
        const SpaceParams sp{4, 1}; // kappa = 4 tau^2: the round three-sphere
        const WeingartenClass cls = WeingartenClass::constant_ke(1.0);
        const CanonicalExample ex = integrate_canonical(cls, sp);
        const double x0 = ke_x0(1.0, sp);
        const HermiteCurve nu = nu_of_rho(ex, cls, sp);
        double sup = 0.0;
        for (double x : linspace(0.0, 0.95 * x0, 512))
            sup = std::fmax(sup, std::fabs(nu.eval(x) - ke_angle(x, 1.0, sp)));
        pass = pass && ex.classification == Classification::Sphere && sup < 1e-8;
        detail += "Ke=1 at kappa=4tau^2=4: class=" + classification_name(ex.classification) +
                  " sup|nu-limit-form|=" + fmt(sup) + "; ";
    }
    return make_result("round-sphere degenerations (kappa=tau=0 and kappa=4tau^2)", pass, detail);
}

// ---------------------------------------------------------------- criterion 3
CheckResult c3_denominator_regression() {
    struct Tuple {
        double kappa, tau, c;
    };
    const Tuple tuples[] = {{0, 1, 1}, {-1, 0, 1}};
    bool pass = true;
    std::string detail;
    for (const Tuple& t : tuples) {
        const SpaceParams sp{t.kappa, t.tau};
        const double k = t.kappa, t2 = t.tau * t.tau, c = t.c;
        const double x0 = ke_x0(c, sp);
        double worst_single = 0.0, best_rel_gap = 0.0;
        for (double x : linspace(0.05 * x0, 0.95 * x0, 101)) {
            const double h = 1e-6;
            const double yp = (ke_angle(x + h, c, sp) - ke_angle(x - h, c, sp)) / (2.0 * h);
            const double lhs = ke_angle(x, c, sp) * yp;
            const double single = 16.0 * x * (c + t2) / ((4.0 + k * x * x) * (-4.0 + (k - 8.0 * t2) * x * x));
            const double squared = single / (4.0 + k * x * x);
            worst_single = std::fmax(worst_single, std::fabs(lhs - single));
            best_rel_gap = std::fmax(best_rel_gap, std::fabs(squared - single) / std::fabs(single));
        }
        pass = pass && worst_single <= 1e-7 && best_rel_gap > 0.10;
        detail += "(kappa=" + fmt(t.kappa) + ",tau=" + fmt(t.tau) + "): |y y' - single|=" +
                  fmt(worst_single) + ", squared-form gap=" + fmt(best_rel_gap) + "; ";
    }
    return make_result("first-integral derivative fixes the single-power denominator", pass, detail);
}

// ---------------------------------------------------------------- criterion 4
CheckResult c4_cones() {
    struct Tuple {
        double kappa, tau, beta;
    };
    const Tuple tuples[] = {{0, 1, 0.5}, {-1, 0, 0.7}, {4, 0.1, 0.3}};
    bool pass = true;
    std::string detail;
    for (const Tuple& t : tuples) {
        const SpaceParams sp{t.kappa, t.tau};
        const ConeSpec cone{t.beta, 0.0};
        const double du = 0.0025;
        const double u_lo = 0.2;
        const std::size_t n = 321;
        std::vector<double> rho(n), h(n);
        for (std::size_t i = 0; i < n; ++i) {
            rho[i] = u_lo + du * static_cast<double>(i);
            h[i] = cone_height(rho[i], cone, sp);
        }
        const auto rows = graph_curvatures_u(rho, h, u_lo, du, sp);
        double nu_err = 0.0, ke_err = 0.0, worst_dH = -1e300;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            nu_err = std::fmax(nu_err, std::fabs(rows[i].nu - std::fabs(t.beta)));
            ke_err = std::fmax(ke_err, std::fabs(rows[i].Ke - cylinder_ke(sp)));
            if (i) worst_dH = std::fmax(worst_dH, rows[i].H - rows[i - 1].H);
        }
        // independent shape-operator oracle on the same cone
        const Patch patch = [&](double u, double v) {
            return ModelPoint{u * std::cos(v), u * std::sin(v), cone_height(u, cone, sp)};
        };
        double oracle_err = 0.0;
        for (double u : {0.3, 0.5, 0.7}) {
            const ShapeSample ss = fd_shape_operator(patch, u, 0.3, sp);
            oracle_err = std::fmax(oracle_err, std::fabs(ss.Ke - cylinder_ke(sp)));
        }
        const bool ok = nu_err <= 1e-8 && ke_err <= 1e-6 && oracle_err <= 1e-6 && worst_dH < 0.0;
        pass = pass && ok;
        detail += "(kappa=" + fmt(t.kappa) + ",tau=" + fmt(t.tau) + ",beta=" + fmt(t.beta) +
                  "): |nu-beta|=" + fmt(nu_err) + " |Ke+tau^2|=" + fmt(ke_err) + " oracle=" +
                  fmt(oracle_err) + " maxdH=" + fmt(worst_dH) + "; ";
    }
    return make_result("cone suite: constant angle, Ke=-tau^2 (graph + oracle), monotone H", pass,
                       detail);
}

// ---------------------------------------------------------------- criterion 5
CheckResult c5_cmc_dichotomy() {
    const SpaceParams sp{-1, 0};
    bool pass = true;
    std::string detail;
    const CanonicalExample hi = integrate_canonical(WeingartenClass::constant_h(0.6), sp);
    pass = pass && hi.classification == Classification::Sphere;
    detail += "H=0.6: " + classification_name(hi.classification) + "; ";

    const CanonicalExample lo = integrate_canonical(WeingartenClass::constant_h(0.4), sp);
    pass = pass && lo.classification == Classification::EntireGraph && lo.diagnostics.nu_min >= 0.05;
    detail += "H=0.4: " + classification_name(lo.classification) +
              " nu_min=" + fmt(lo.diagnostics.nu_min) + "; ";

    const CanonicalExample a = integrate_canonical(WeingartenClass::constant_h(0.45), sp);
    const CanonicalExample b = integrate_canonical(WeingartenClass::constant_h(0.55), sp);
    const bool flip = a.classification == Classification::EntireGraph &&
                      b.classification == Classification::Sphere;
    pass = pass && flip;
    detail += "flip in (0.45,0.55): H=0.45 " + classification_name(a.classification) +
              ", H=0.55 " + classification_name(b.classification) + "; ";
    return make_result("CMC dichotomy in H^2 x R (sphere above 1/2, entire graph below)", pass,
                       detail);
}

// ---------------------------------------------------------------- criterion 6
CheckResult c6_gauss_identity() {
    bool pass = true;
    std::string detail;
    const double ds = 0.01;

    auto check_solver_surface = [&](const char* label, const WeingartenClass& cls,
                                    const SpaceParams& sp) {
        const CanonicalExample ex = integrate_canonical(cls, sp);
        const double s_end = ex.classification == Classification::Sphere
                                 ? ex.diagnostics.turning_s
                                 : ex.samples.back().s;
        const std::size_t n = 61;
        const double span = std::fmin(0.3, 0.6 * s_end);
        const double grid_ds = span / static_cast<double>(n - 1);
        const double s_lo = 0.15 * s_end;
        SolveConfig tight;
        tight.rel_tol = 1e-12;
        tight.abs_tol = 1e-14;
        const auto states = uniform_states(cls, sp, tight, s_lo, s_lo + span, n);
        const InducedGauss ig = induced_gauss_curvature(states, grid_ds, sp);
        double worst = 0.0;
        for (std::size_t j = 0; j < ig.index.size(); ++j) {
            const ProfileState& st = states[ig.index[j]];
            const double dd = solve_rho_dd(st.rho, st.drho, cls, sp);
            const double ke = extrinsic_curvature_s(st.rho, dd, sp);
            worst = std::fmax(worst, std::fabs(ig.K[j] - gauss_from_extrinsic(ke, st.drho, sp)));
        }
        pass = pass && worst < 1e-5;
        detail += std::string(label) + ": max|K_brioschi-K_gauss|=" + fmt(worst) + "; ";
    };

    check_solver_surface("Ke=1 Nil3", WeingartenClass::constant_ke(1.0), SpaceParams{0, 1});
    check_solver_surface("Ke=1 Berger(4,0.1)", WeingartenClass::constant_ke(1.0), SpaceParams{4, 0.1});
    check_solver_surface("H=0.6 H2xR", WeingartenClass::constant_h(0.6), SpaceParams{-1, 0});
    check_solver_surface("H=1 R^3", WeingartenClass::constant_h(1.0), SpaceParams{0, 0});

    // cone in Nil3 from the closed form
    {
        const SpaceParams sp{0, 1};
        const ConeSpec cone{0.5, 0.0};
        const std::size_t n = 61;
        std::vector<ProfileState> states(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double s = static_cast<double>(i) * ds;
            const double rho = 0.4 + cone.beta * s;
            states[i] = ProfileState{s, rho, cone.beta, cone_height(rho, cone, sp)};
        }
        const InducedGauss ig = induced_gauss_curvature(states, ds, sp);
        double worst = 0.0;
        for (std::size_t j = 0; j < ig.index.size(); ++j) {
            const ProfileState& st = states[ig.index[j]];
            worst = std::fmax(worst,
                              std::fabs(ig.K[j] - gauss_from_extrinsic(cylinder_ke(sp), st.drho, sp)));
        }
        pass = pass && worst < 1e-5;
        detail += "cone Nil3: max|K_brioschi-K_gauss|=" + fmt(worst) + "; ";
    }
    return make_result("Gauss equation K = Ke + tau^2 + (kappa-4tau^2) nu^2 on shipped surfaces",
                       pass, detail);
}

// ---------------------------------------------------------------- criterion 7
CheckResult c7_monotonicity() {
    struct Case {
        const char* label;
        WeingartenClass cls;
        SpaceParams sp;
    };
    const Case cases[] = {
        {"Ke=1 Nil3", WeingartenClass::constant_ke(1.0), SpaceParams{0, 1}},
        {"Ke=1 Berger(4,0.1)", WeingartenClass::constant_ke(1.0), SpaceParams{4, 0.1}},
        {"H=0.6 H2xR", WeingartenClass::constant_h(0.6), SpaceParams{-1, 0}},
        {"H=1 R^3", WeingartenClass::constant_h(1.0), SpaceParams{0, 0}},
    };
    bool pass = true;
    std::string detail;
    for (const Case& c : cases) {
        const CanonicalExample ex = integrate_canonical(c.cls, c.sp);
        const MonotonicityReport rep = monotonicity_check(ex);
        double sym = std::numeric_limits<double>::infinity();
        if (ex.classification == Classification::Sphere)
            sym = reflection_symmetry_error(ex, c.cls, c.sp);
        const bool ok = rep.pass && rep.nu_surjective && sym < 1e-10;
        pass = pass && ok;
        detail += std::string(c.label) + ": strict=" + (rep.pass ? "yes" : "no") +
                  " surjective=" + (rep.nu_surjective ? "yes" : "no") + " sym_err=" + fmt(sym) + "; ";
    }
    return make_result("angle monotonicity, nu surjective onto [-1,1], reflection symmetry < 1e-10",
                       pass, detail);
}

// ---------------------------------------------------------------- criterion 8
CheckResult c8_h2r_boundedness() {
    const SpaceParams sp{-1, 0};
    std::mt19937_64 rng(20250808ull);
    auto unit = [&]() { return u64_to_unit(rng()); };
    bool pass = true;
    std::string detail;
    for (int i = 0; i < 10; ++i) {
        const double a = 0.1 + 1.9 * unit();
        const double b = a + (5.0 - a) * (0.1 + 0.8 * unit());
        const double span = b - a;
        std::string g;
        switch (i % 3) {
            case 0: {
                const double c = 1.0 + span * span;
                g = "(t/(" + fmt(c) + "+t))";
                break;
            }
            case 1: {
                const double c = 1.0 / (1.0 + span * span);
                g = "(1/(1+" + fmt(c) + "*t))";
                break;
            }
            default: {
                const double c = 0.4 / (1.0 + span * span);
                g = "exp(-" + fmt(c) + "*t)";
                break;
            }
        }
        const std::string phi = fmt(a) + "+" + fmt(span) + "*" + g;
        const WeingartenClass cls = WeingartenClass::general_phi(phi);
        Classification cl = Classification::Inconclusive;
        double max_sigma = 0.0;
        bool bounded_end = false;
        try {
            const CanonicalExample ex = integrate_canonical(cls, sp);
            cl = ex.classification;
            max_sigma = ex.diagnostics.max_sigma_sq;
            bounded_end = cl == Classification::Sphere || cl == Classification::EntireGraph;
        } catch (const MaxSExceeded& e) {
            cl = Classification::Inconclusive;
            max_sigma = e.partial.diagnostics.max_sigma_sq;
            bounded_end = true; // bounded max_s state
        }
        const bool ok = bounded_end && cl != Classification::SecondFormBlowup && max_sigma < 1e6;
        pass = pass && ok;
        detail += "phi[" + std::to_string(i) + "]=" + phi + ": " + classification_name(cl) +
                  " max|sigma|^2=" + fmt(max_sigma) + "; ";
    }
    return make_result("H^2 x R boundedness: 10 random bounded elliptic classes, no blowup", pass,
                       detail);
}

// ---------------------------------------------------------------- criterion 9
CheckResult c9_popu0() {
    const Expr phi0 = parse_expr("1.1");
    const Popu0Result res = popu0_class(phi0, 0.1);
    const bool pass = res.cert.y_star_in_window && res.cert.base_no_blowup_in_window;
    std::string detail = "y_eps=" + fmt(res.cert.y_eps) + " x_eps=" + fmt(res.cert.x_eps) +
                         " y*=" + fmt(res.cert.y_star) + " x*=" + fmt(res.cert.x_star) +
                         " window=(" + fmt(0.5 * res.cert.y_eps) + "," + fmt(res.cert.y_eps) +
                         ") in_window=" + (res.cert.y_star_in_window ? "yes" : "no") +
                         " base_clean=" + (res.cert.base_no_blowup_in_window ? "yes" : "no") +
                         " delta=" + fmt(res.cert.blend_delta);
    return make_result("counterexample class blows up with certified y*; base class does not", pass,
                       detail);
}

// --------------------------------------------------------------- criterion 10
CheckResult c10_s2r_example() {
    const double R = 1.0 / 20.0;
    const double delta = s2r_matched_delta(R);
    const S2RReport good = s2r_example(R, delta);
    const S2RReport bad = s2r_example(R, 0.0);
    const bool pass = good.all() && std::fabs(good.limit_ratio + 1.0) <= 1e-3 && !bad.all();
    std::string detail = "delta=" + fmt(delta) + " conds=[" + (good.cond_axis ? "1" : "0") +
                         (good.cond_convex ? "1" : "0") + (good.cond_opposite ? "1" : "0") +
                         (good.cond_limit ? "1" : "0") + "] limit=" + fmt(good.limit_ratio) +
                         " control(delta=0) all=" + (bad.all() ? "yes" : "no") +
                         " control_limit=" + fmt(bad.limit_ratio);
    return make_result("S^2 x R singular example at R=1/20 passes conditions (1)-(4)", pass, detail);
}

// --------------------------------------------------------------- criterion 11
CheckResult c11_berger() {
    const SpaceParams sp{4, 0.1};
    bool pass = true;
    std::string detail;
    std::mt19937_64 rng(424242ull);
    auto unit = [&]() { return u64_to_unit(rng()); };

    double unit_err = 0.0, period_err = 0.0;
    const double period = fiber_period(sp);
    for (int i = 0; i < 200; ++i) {
        const double rho = 5.0 * unit();
        const double th = 6.283185307179586 * unit();
        const ModelPoint p{rho * std::cos(th), rho * std::sin(th), -10.0 + 20.0 * unit()};
        const BergerPoint q = chart_immersion(p, sp);
        unit_err = std::fmax(unit_err, std::fabs(std::norm(q.z) + std::norm(q.w) - 1.0));
        const BergerPoint q2 = chart_immersion({p.x1, p.x2, p.x3 + period}, sp);
        period_err = std::fmax(period_err, std::abs(q.z - q2.z) + std::abs(q.w - q2.w));
    }
    pass = pass && unit_err <= 1e-12 && period_err <= 1e-12;
    detail += "| |Psi|-1 |=" + fmt(unit_err) + " period_err=" + fmt(period_err) + "; ";

    // pullback isometry through finite differences of the chart embedding
    double pull_err = 0.0;
    for (int i = 0; i < 40; ++i) {
        const double th = 6.283185307179586 * unit();
        const double rho = 0.2 + 2.8 * unit();
        const ModelPoint p{rho * std::cos(th), rho * std::sin(th), -3.0 + 6.0 * unit()};
        const Metric3 g = metric_at(p, sp);
        const Metric3 gp = chart_pullback_metric(p, sp);
        for (int a = 0; a < 3; ++a)
            for (int b = a; b < 3; ++b)
                pull_err = std::fmax(pull_err, std::fabs(gp[a][b] - g[a][b]));
    }
    pass = pass && pull_err <= 1e-6;
    detail += "pullback_err=" + fmt(pull_err) + "; ";

    // closed-form stereographic transport against the composed path
    double af_err = 0.0, hopf_err = 0.0;
    int checked = 0;
    while (checked < 1000) {
        const double rho = 3.0 * unit();
        const double h = -2.0 + 4.0 * unit();
        const double th = 6.283185307179586 * unit();
        const double sg = sp.kappa / (4.0 * sp.tau);
        if (std::fabs(std::sqrt(1.0 + 0.25 * sp.kappa * rho * rho) - std::sin(sg * h)) < 0.05)
            continue; // too close to the projection pole for a 1e-10 comparison
        const ModelPoint p{rho * std::cos(th), rho * std::sin(th), h};
        const BergerPoint q = chart_immersion(p, sp);
        const StereoPoint a = stereo_project(q);
        const StereoPoint b = profile_to_stereo(rho, h, th, sp);
        af_err = std::fmax(af_err, std::fabs(a.y1 - b.y1));
        af_err = std::fmax(af_err, std::fabs(a.y2 - b.y2));
        af_err = std::fmax(af_err, std::fabs(a.y3 - b.y3));
        // Hopf projection commutes with the inverse stereographic parametrization
        const auto proj = hopf_project(q, sp);
        const double lam = lambda_factor(rho, sp);
        hopf_err = std::fmax(hopf_err, std::fabs(proj[0] - lam * p.x1));
        hopf_err = std::fmax(hopf_err, std::fabs(proj[1] - lam * p.x2));
        hopf_err = std::fmax(hopf_err, std::fabs(proj[2] - (1.0 - 2.0 * lam) / std::sqrt(sp.kappa)));
        ++checked;
    }
    pass = pass && af_err <= 1e-10 && hopf_err <= 1e-10;
    detail += "af2_err=" + fmt(af_err) + " hopf_err=" + fmt(hopf_err) + "; ";

    // height-vs-c sweep across the embeddedness threshold
    int embedded = 0, non_embedded = 0;
    double first_height = 0.0, last_height = 0.0;
    const auto cs = logspace(0.1, 10.0, 25);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const CanonicalExample ex = integrate_canonical(WeingartenClass::constant_ke(cs[i]), sp);
        if (ex.classification != Classification::Sphere) {
            pass = false;
            continue;
        }
        const EmbeddednessReport rep = embeddedness_check(ex, sp);
        if (rep.embedded)
            ++embedded;
        else
            ++non_embedded;
        if (i == 0) first_height = rep.height;
        if (i + 1 == cs.size()) last_height = rep.height;
    }
    pass = pass && embedded >= 1 && non_embedded >= 1;
    detail += "sweep c in [0.1,10]: " + std::to_string(non_embedded) + " non-embedded, " +
              std::to_string(embedded) + " embedded, heights " + fmt(first_height) + " -> " +
              fmt(last_height) + ", threshold=" + fmt(fiber_period(sp));
    return make_result("Berger chart: |Psi|=1, fiber period, pullback isometry, stereographic "
                       "transport, embeddedness sweep",
                       pass, detail);
}

} // namespace

CheckResult acceptance_criterion(int k) {
    switch (k) {
        case 1: return c1_ke_oracle();
        case 2: return c2_round_spheres();
        case 3: return c3_denominator_regression();
        case 4: return c4_cones();
        case 5: return c5_cmc_dichotomy();
        case 6: return c6_gauss_identity();
        case 7: return c7_monotonicity();
        case 8: return c8_h2r_boundedness();
        case 9: return c9_popu0();
        case 10: return c10_s2r_example();
        case 11: return c11_berger();
        default: throw ConfigError("acceptance_criterion: index out of range");
    }
}

std::vector<CheckResult> acceptance_all() {
    std::vector<CheckResult> out;
    for (int k = 1; k <= 11; ++k) out.push_back(acceptance_criterion(k));
    return out;
}

std::vector<std::string> verify_suite_names() {
    return {"gauss", "cones", "ke-closed-form", "monotonicity",
            "h2r-bound", "popu0", "s2r-example", "berger"};
}

std::vector<CheckResult> run_suite(const std::string& name) {
    std::vector<CheckResult> out;
    if (name == "gauss") {
        out.push_back(acceptance_criterion(6));
    } else if (name == "cones") {
        out.push_back(acceptance_criterion(4));
    } else if (name == "ke-closed-form") {
        out.push_back(acceptance_criterion(1));
        out.push_back(acceptance_criterion(2));
        out.push_back(acceptance_criterion(3));
    } else if (name == "monotonicity") {
        out.push_back(acceptance_criterion(7));
    } else if (name == "h2r-bound") {
        out.push_back(acceptance_criterion(5));
        out.push_back(acceptance_criterion(8));
    } else if (name == "popu0") {
        out.push_back(acceptance_criterion(9));
    } else if (name == "s2r-example") {
        out.push_back(acceptance_criterion(10));
    } else if (name == "berger") {
        out.push_back(acceptance_criterion(11));
    } else {
        throw ConfigError("unknown verify suite '" + name + "'");
    }
    return out;
}

} // namespace weingarten
