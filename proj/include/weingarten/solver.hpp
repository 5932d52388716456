#ifndef WEINGARTEN_SOLVER_HPP
#define WEINGARTEN_SOLVER_HPP

#include <limits>
#include <string>
#include <vector>

#include "weingarten/curvature.hpp"
#include "weingarten/errors.hpp"
#include "weingarten/space.hpp"
#include "weingarten/wclass.hpp"

namespace weingarten {

struct SolveConfig {
    double s0 = 1e-4;               // series handoff parameter
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double max_s = 1e3;
    double blowup_threshold = 1e8;  // |rho''| cap
    double cyl_eps_drho = 1e-8;     // stall detection window
    double cyl_eps_ddrho = 1e-8;
    double cyl_span = 10.0;
    double axis_threshold = 1e-8;
    double rho_horizon = 1e3;       // EntireGraph horizon when kappa >= 0
    double boundary_margin = 1e-6;  // EntireGraph trigger at rho_max*(1-margin), kappa < 0
    double max_ds = 0.01;           // cap on accepted step / sample spacing
};

enum class Classification { Sphere, EntireGraph, CylinderAsymptotic, SecondFormBlowup, Inconclusive };

std::string classification_name(Classification c);

struct SampleRow {
    double s = 0.0, rho = 0.0, drho = 0.0, h = 0.0;
    double nu = 0.0, H = 0.0, Ke = 0.0, sigma_sq = 0.0;
};

struct Diagnostics {
    double turning_s = std::numeric_limits<double>::quiet_NaN();
    double asymptotic_radius = std::numeric_limits<double>::quiet_NaN();
    double blowup_rho = std::numeric_limits<double>::quiet_NaN();
    double total_height = std::numeric_limits<double>::quiet_NaN();
    double max_sigma_sq = 0.0;
    double nu_min = std::numeric_limits<double>::quiet_NaN();
    double max_residual = 0.0; // a posteriori Weingarten residual over samples
    double nu_at_exit = std::numeric_limits<double>::quiet_NaN(); // EntireGraph
    double stall_window_start = std::numeric_limits<double>::quiet_NaN();
};

struct CanonicalExample {
    Classification classification = Classification::Inconclusive;
    std::vector<SampleRow> samples;
    Diagnostics diagnostics;
    double umbilic = 0.0; // common principal curvature at the axis
};

// Integration hit max_s with no event; never silently classified.
struct MaxSExceeded : Error {
    CanonicalExample partial;
    MaxSExceeded(const std::string& what, CanonicalExample p)
        : Error(what), partial(std::move(p)) {}
};

// rho'' from the curvature relation at (rho, rho'): explicit linear solve for
// K_e-forms and for H-forms with Phi independent of t; bracketed safeguarded
// Newton-bisection for GeneralPhi (single sign change asserted, NoRoot with
// diagnostics otherwise).
double solve_rho_dd(double rho, double drho, const WeingartenClass& cls,
                    const SpaceParams& params, const SolveConfig& config = SolveConfig{});

// Axis start from the series rho(s) = s + r3 s^3, h(s) = (alpha/2) s^2, with
// r3 fixed by the residual at s = s0 (closed form for explicit-K_e classes).
ProfileState series_init(const WeingartenClass& cls, const SpaceParams& params,
                         const SolveConfig& config = SolveConfig{});

// Advance the profile system from a given state to s_target (no events); used
// by self-consistency and symmetry checks.
ProfileState integrate_to(const WeingartenClass& cls, const SpaceParams& params,
                          const SolveConfig& config, ProfileState from, double s_target,
                          int h_branch_sign = +1);

// The canonical rotational example: series start, adaptive embedded
// Runge-Kutta advance of (rho, rho', h), event detection, sphere closure by
// reflection, classification.
CanonicalExample integrate_canonical(const WeingartenClass& cls, const SpaceParams& params,
                                     const SolveConfig& config = SolveConfig{});

struct MonotonicityReport {
    bool pass = false;
    bool excluded_totally_geodesic = false; // constant nu = 1 slice
    bool nu_surjective = false;             // spheres: nu covers [-1,1]
    double worst_step = 0.0;                // most non-decreasing consecutive nu difference
    std::string note;
};

// Strict decrease of nu on the upper half; for spheres also surjectivity of
// nu onto [-1,1] at sample resolution.
MonotonicityReport monotonicity_check(const CanonicalExample& example);

// Re-integrates through the turning point and compares against the reflected
// half: sup |rho_continued(s*+u) - rho(s*-u)| over u in (0, 0.9 s*].
double reflection_symmetry_error(const CanonicalExample& example, const WeingartenClass& cls,
                                 const SpaceParams& params, const SolveConfig& config = SolveConfig{});

} // namespace weingarten

#endif
