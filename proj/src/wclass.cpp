#include "weingarten/wclass.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "weingarten/errors.hpp"
#include "weingarten/numeric.hpp"
#include "weingarten/rootfind.hpp"

namespace weingarten {

WeingartenClass WeingartenClass::constant_h(double h0) {
    WeingartenClass c;
    c.kind = Kind::ConstantH;
    c.constant = h0;
    return c;
}

WeingartenClass WeingartenClass::prescribed_h(const std::string& expr_in_v) {
    WeingartenClass c;
    c.kind = Kind::PrescribedH;
    c.expr = parse_expr(expr_in_v);
    return c;
}

WeingartenClass WeingartenClass::constant_ke(double cval) {
    if (!(cval > 0.0)) throw ConfigError("constant extrinsic curvature must be positive");
    WeingartenClass c;
    c.kind = Kind::ConstantKe;
    c.constant = cval;
    return c;
}

WeingartenClass WeingartenClass::prescribed_ke(const std::string& expr_in_v) {
    WeingartenClass c;
    c.kind = Kind::PrescribedKe;
    c.expr = parse_expr(expr_in_v);
    for (double v : linspace(0.0, 1.0, 101)) {
        if (!(c.expr.eval(0.0, v) > 0.0))
            throw ConfigError("prescribed extrinsic curvature must be positive on [0,1]");
    }
    return c;
}

WeingartenClass WeingartenClass::general_phi(const std::string& expr_in_t_v) {
    WeingartenClass c;
    c.kind = Kind::GeneralPhi;
    c.expr = parse_expr(expr_in_t_v);
    return c;
}

WeingartenClass WeingartenClass::fform(const std::string& expr_in_k2_v) {
    WeingartenClass c;
    c.kind = Kind::FForm;
    c.expr = parse_expr(expr_in_k2_v);
    return c;
}

WeingartenClass WeingartenClass::fform_expr(Expr f) {
    WeingartenClass c;
    c.kind = Kind::FForm;
    c.expr = std::move(f);
    return c;
}

std::string WeingartenClass::describe() const {
    switch (kind) {
        case Kind::ConstantH: return "H = " + format_double(constant);
        case Kind::PrescribedH: return "H = " + expr.to_string();
        case Kind::ConstantKe: return "Ke = " + format_double(constant);
        case Kind::PrescribedKe: return "Ke = " + expr.to_string();
        case Kind::GeneralPhi: return "H = Phi(t,v), Phi = " + expr.to_string();
        case Kind::FForm: return "k1 = f(k2,v), f = " + expr.to_string();
    }
    return "?";
}

double eval_phi(const WeingartenClass& cls, double t, double v) {
    switch (cls.kind) {
        case WeingartenClass::Kind::ConstantH:
        case WeingartenClass::Kind::ConstantKe:
            return cls.constant;
        case WeingartenClass::Kind::PrescribedH:
        case WeingartenClass::Kind::PrescribedKe:
            return cls.expr.eval(0.0, v);
        case WeingartenClass::Kind::GeneralPhi:
            return cls.expr.eval(t, v);
        case WeingartenClass::Kind::FForm:
            throw EvalError("eval_phi: f-form classes carry no Phi");
    }
    throw EvalError("eval_phi: corrupt class");
}

double eval_f(const WeingartenClass& cls, double k2, double v) {
    if (cls.kind != WeingartenClass::Kind::FForm)
        throw EvalError("eval_f: not an f-form class");
    return cls.expr.eval(k2, v);
}

EllipticityReport ellipticity_check(const WeingartenClass& cls, const SamplingSpec& grid) {
    if (!cls.is_h_form())
        throw EvalError("ellipticity_check: only H-form classes carry the 4t(dPhi/dt)^2 condition");

    // lower grid end sits two decades above the differencing step so the
    // estimate is not dominated by stencil error
    std::vector<double> ts;
    ts.push_back(0.0);
    for (double t : logspace(1e-4, grid.t_max, grid.nt)) ts.push_back(t);
    const std::vector<double> vs = linspace(0.0, 1.0, grid.nv);

    const std::size_t n = ts.size() * vs.size();
    std::vector<double> values(n);
    std::vector<std::string> errs(n);

    parallel_for(n, [&](std::size_t i) {
        const double t = ts[i / vs.size()];
        const double v = vs[i % vs.size()];
        const double h = std::fmax(1e-6, 1e-6 * t);
        try {
            double d;
            if (t - h >= 0.0)
                d = (eval_phi(cls, t + h, v) - eval_phi(cls, t - h, v)) / (2.0 * h);
            else
                d = (eval_phi(cls, t + h, v) - eval_phi(cls, t, v)) / h;
            values[i] = 4.0 * t * d * d;
        } catch (const EvalError& e) {
            errs[i] = e.what();
        }
    });

    for (std::size_t i = 0; i < n; ++i)
        if (!errs[i].empty()) throw EvalError(errs[i]);

    EllipticityReport rep;
    rep.pass = true;
    rep.worst_value = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (values[i] > rep.worst_value) {
            rep.worst_value = values[i];
            rep.worst_t = ts[i / vs.size()];
            rep.worst_v = vs[i % vs.size()];
        }
    }
    if (!(rep.worst_value < 1.0 - grid.margin)) rep.pass = false;
    return rep;
}

namespace {

// All fixed points f(x,1) = x on [-1e6, 1e6], skipping poles (sign changes of
// g(x) = f(x)-x where g does not actually vanish).
std::vector<double> fform_fixed_points(const Expr& f) {
    auto g = [&](double x) { return f.eval(x, 1.0) - x; };

    std::vector<double> xs;
    for (double x : logspace(1e-8, 1e6, 240)) xs.push_back(-x);
    xs.push_back(0.0);
    for (double x : logspace(1e-8, 1e6, 240)) xs.push_back(x);
    std::sort(xs.begin(), xs.end());

    std::vector<double> gv(xs.size());
    std::vector<char> ok(xs.size(), 0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        try {
            gv[i] = g(xs[i]);
            ok[i] = std::isfinite(gv[i]) ? 1 : 0;
        } catch (const EvalError&) {
            ok[i] = 0;
        }
    }

    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        if (!ok[i] || !ok[i + 1]) continue;
        if (gv[i] == 0.0) {
            roots.push_back(xs[i]);
            continue;
        }
        if ((gv[i] > 0) == (gv[i + 1] > 0)) continue;
        double r;
        try {
            r = bisect(g, xs[i], xs[i + 1], 1e-14);
        } catch (const EvalError&) {
            continue;
        } catch (const NoRoot&) {
            continue;
        }
        // a sign change across a pole converges to the pole, not a root
        double res;
        try {
            res = g(r);
        } catch (const EvalError&) {
            continue;
        }
        if (std::fabs(res) < 1e-6 * std::fmax(1.0, std::fabs(r))) roots.push_back(r);
    }
    return roots;
}

} // namespace

double umbilic_constant(const WeingartenClass& cls, bool& flipped) {
    flipped = false;
    switch (cls.kind) {
        case WeingartenClass::Kind::ConstantH:
            return cls.constant;
        case WeingartenClass::Kind::PrescribedH:
        case WeingartenClass::Kind::GeneralPhi:
            return eval_phi(cls, 0.0, 1.0);
        case WeingartenClass::Kind::ConstantKe:
            return std::sqrt(cls.constant);
        case WeingartenClass::Kind::PrescribedKe:
            return std::sqrt(cls.expr.eval(0.0, 1.0));
        case WeingartenClass::Kind::FForm: {
            std::vector<double> roots = fform_fixed_points(cls.expr);
            if (roots.empty()) throw NoFixedPoint("umbilic_constant: no fixed point of f(.,1) in [-1e6,1e6]");
            double alpha = *std::max_element(roots.begin(), roots.end());
            if (alpha < 0.0) {
                // normalize by f(x) -> -f(-x); its fixed points are the
                // negatives of the original ones
                flipped = true;
                alpha = -*std::min_element(roots.begin(), roots.end());
            }
            return alpha;
        }
    }
    throw NoFixedPoint("umbilic_constant: corrupt class");
}

double umbilic_constant(const WeingartenClass& cls) {
    bool flipped = false;
    return umbilic_constant(cls, flipped);
}

WeingartenClass negated_h_form(const WeingartenClass& cls) {
    if (!cls.is_h_form()) throw ConfigError("negated_h_form: needs an H-form class");
    if (cls.kind == WeingartenClass::Kind::ConstantH)
        return WeingartenClass::constant_h(-cls.constant);
    WeingartenClass out = cls;
    Expr neg;
    const int inner = neg.graft(cls.expr);
    neg.set_root(neg.add_node({Expr::Op::Neg, 0.0, inner, -1}));
    out.expr = std::move(neg);
    return out;
}

} // namespace weingarten
