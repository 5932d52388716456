#ifndef WEINGARTEN_WCLASS_HPP
#define WEINGARTEN_WCLASS_HPP

#include <string>

#include "weingarten/expr.hpp"

namespace weingarten {

// A curvature relation in one of five canonical normal forms. H-forms
// prescribe H = Phi(H^2 - K_e, nu^2); K_e-forms prescribe the extrinsic
// curvature as a positive function of nu^2; FForm prescribes kappa1 =
// f(kappa2, nu^2) and is consumed by the hyperbolic phase-plane machinery.
struct WeingartenClass {
    enum class Kind { ConstantH, PrescribedH, ConstantKe, PrescribedKe, GeneralPhi, FForm };

    Kind kind = Kind::ConstantH;
    double constant = 0.0; // ConstantH / ConstantKe
    Expr expr;             // the other kinds

    static WeingartenClass constant_h(double h0);
    static WeingartenClass prescribed_h(const std::string& expr_in_v);
    static WeingartenClass constant_ke(double c); // requires c > 0
    static WeingartenClass prescribed_ke(const std::string& expr_in_v); // positive on [0,1]
    static WeingartenClass general_phi(const std::string& expr_in_t_v);
    static WeingartenClass fform(const std::string& expr_in_k2_v);
    static WeingartenClass fform_expr(Expr f);

    bool is_h_form() const {
        return kind == Kind::ConstantH || kind == Kind::PrescribedH || kind == Kind::GeneralPhi;
    }
    bool is_ke_form() const { return kind == Kind::ConstantKe || kind == Kind::PrescribedKe; }

    std::string describe() const;
};

// Phi(t, v) for H-forms; for K_e-forms returns the prescribed K_e(v).
double eval_phi(const WeingartenClass& cls, double t, double v);

// f(k2, v) for FForm classes.
double eval_f(const WeingartenClass& cls, double k2, double v);

struct SamplingSpec {
    double t_max = 1e4;
    std::size_t nt = 80;       // logarithmically spaced plus t = 0
    std::size_t nv = 21;
    double margin = 1e-9;      // pass iff 4 t (dPhi/dt)^2 < 1 - margin everywhere
};

struct EllipticityReport {
    bool pass = false;
    double worst_t = 0.0, worst_v = 0.0, worst_value = 0.0;
};

// Samples the ellipticity condition 4 t (dPhi/dt)^2 < 1 over the grid using
// central differences with step max(1e-6, 1e-6*t) (one-sided at t near 0).
EllipticityReport ellipticity_check(const WeingartenClass& cls,
                                    const SamplingSpec& grid = SamplingSpec{});

// The common principal curvature at an axis point: Phi(0,1) for H-forms,
// sqrt of the prescribed K_e at nu^2 = 1 for K_e-forms, and the fixed point
// f(a,1) = a for FForm (normalized to a >= 0 via f(x) -> -f(-x) if needed;
// when the expression covers several branches the largest root is taken).
double umbilic_constant(const WeingartenClass& cls);

// True when umbilic_constant applied the FForm sign-flip normalization.
double umbilic_constant(const WeingartenClass& cls, bool& flipped);

// The orientation-conjugate H-form with Phi replaced by -Phi; the canonical
// example of the original class is its mirror image in height.
WeingartenClass negated_h_form(const WeingartenClass& cls);

} // namespace weingarten

#endif
