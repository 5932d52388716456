// weingarten: rotational Weingarten surfaces in the homogeneous spaces
// E3(kappa,tau) -- canonical examples, closed-form references, phase-plane
// analysis, Berger-chart transport, verification suites.

#include <clocale>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "weingarten/berger.hpp"
#include "weingarten/closed_forms.hpp"
#include "weingarten/emit.hpp"
#include "weingarten/hyperbolic.hpp"
#include "weingarten/numeric.hpp"
#include "weingarten/solver.hpp"
#include "weingarten/sweep.hpp"
#include "weingarten/verify.hpp"

namespace {

using namespace weingarten;

struct RunConfig {
    double kappa = 0.0;
    double tau = 1.0;
    std::string class_kind = "const-ke";
    double h0 = 1.0;
    double c = 1.0;
    std::string phi;
    std::string f;
    double beta = 0.5;
    SolveConfig solve;
    std::string out_dir = "out";
    std::vector<std::string> formats = {"csv", "json"};
    std::size_t stride = 1;
};

WeingartenClass build_class(const RunConfig& rc) {
    if (rc.class_kind == "const-h") return WeingartenClass::constant_h(rc.h0);
    if (rc.class_kind == "const-ke") return WeingartenClass::constant_ke(rc.c);
    if (rc.class_kind == "prescribed-h") {
        if (rc.phi.empty()) throw ConfigError("class prescribed-h requires --phi EXPR");
        return WeingartenClass::prescribed_h(rc.phi);
    }
    if (rc.class_kind == "prescribed-ke") {
        if (rc.phi.empty()) throw ConfigError("class prescribed-ke requires --phi EXPR");
        return WeingartenClass::prescribed_ke(rc.phi);
    }
    if (rc.class_kind == "phi") {
        if (rc.phi.empty()) throw ConfigError("class phi requires --phi EXPR");
        return WeingartenClass::general_phi(rc.phi);
    }
    if (rc.class_kind == "fform") {
        if (rc.f.empty()) throw ConfigError("class fform requires --f EXPR");
        return WeingartenClass::fform(rc.f);
    }
    throw ConfigError("unknown class kind '" + rc.class_kind + "'");
}

JsonValue config_json(const RunConfig& rc) {
    JsonValue cfg = JsonValue::object();
    cfg.set("kappa", JsonValue::num(rc.kappa));
    cfg.set("tau", JsonValue::num(rc.tau));
    cfg.set("class", JsonValue::str(rc.class_kind));
    cfg.set("h0", JsonValue::num(rc.h0));
    cfg.set("c", JsonValue::num(rc.c));
    cfg.set("phi", JsonValue::str(rc.phi));
    cfg.set("f", JsonValue::str(rc.f));
    JsonValue sc = JsonValue::object();
    sc.set("s0", JsonValue::num(rc.solve.s0));
    sc.set("rel_tol", JsonValue::num(rc.solve.rel_tol));
    sc.set("abs_tol", JsonValue::num(rc.solve.abs_tol));
    sc.set("max_s", JsonValue::num(rc.solve.max_s));
    sc.set("blowup_threshold", JsonValue::num(rc.solve.blowup_threshold));
    sc.set("cyl_eps_drho", JsonValue::num(rc.solve.cyl_eps_drho));
    sc.set("cyl_eps_ddrho", JsonValue::num(rc.solve.cyl_eps_ddrho));
    sc.set("cyl_span", JsonValue::num(rc.solve.cyl_span));
    sc.set("axis_threshold", JsonValue::num(rc.solve.axis_threshold));
    sc.set("rho_horizon", JsonValue::num(rc.solve.rho_horizon));
    sc.set("boundary_margin", JsonValue::num(rc.solve.boundary_margin));
    sc.set("max_ds", JsonValue::num(rc.solve.max_ds));
    cfg.set("solve", std::move(sc));
    cfg.set("out", JsonValue::str(rc.out_dir));
    JsonValue fmts = JsonValue::array();
    for (const std::string& fm : rc.formats) fmts.push(JsonValue::str(fm));
    cfg.set("format", std::move(fmts));
    cfg.set("stride", JsonValue::integer(static_cast<long long>(rc.stride)));
    return cfg;
}

JsonValue diagnostics_json(const Diagnostics& d) {
    JsonValue out = JsonValue::object();
    out.set("turning_s", JsonValue::num(d.turning_s));
    out.set("asymptotic_radius", JsonValue::num(d.asymptotic_radius));
    out.set("blowup_rho", JsonValue::num(d.blowup_rho));
    out.set("total_height", JsonValue::num(d.total_height));
    out.set("max_sigma_sq", JsonValue::num(d.max_sigma_sq));
    out.set("nu_min", JsonValue::num(d.nu_min));
    out.set("max_residual", JsonValue::num(d.max_residual));
    out.set("nu_at_exit", JsonValue::num(d.nu_at_exit));
    out.set("stall_window_start", JsonValue::num(d.stall_window_start));
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ConfigError("cannot open output file " + path.string());
    os << content;
}

bool wants(const RunConfig& rc, const std::string& fmt) {
    for (const std::string& f : rc.formats)
        if (f == fmt) return true;
    return false;
}

int cmd_solve(const RunConfig& rc, bool classify_only) {
    const SpaceParams sp{rc.kappa, rc.tau};
    const WeingartenClass cls = build_class(rc);
    CanonicalExample ex;
    std::string error_kind;
    try {
        ex = integrate_canonical(cls, sp, rc.solve);
    } catch (const MaxSExceeded& e) {
        JsonValue rep = JsonValue::object();
        rep.set("classification", JsonValue::str("Inconclusive"));
        rep.set("error", JsonValue::str(e.what()));
        rep.set("diagnostics", diagnostics_json(e.partial.diagnostics));
        rep.set("config", config_json(rc));
        std::cout << rep.dump();
        return 3;
    }

    JsonValue rep = JsonValue::object();
    rep.set("classification", JsonValue::str(classification_name(ex.classification)));
    rep.set("umbilic_constant", JsonValue::num(ex.umbilic));
    rep.set("samples", JsonValue::integer(static_cast<long long>(ex.samples.size())));
    rep.set("diagnostics", diagnostics_json(ex.diagnostics));
    rep.set("config", config_json(rc));
    const std::string report = rep.dump();

    if (classify_only) {
        std::cout << report;
        return 0;
    }
    std::filesystem::create_directories(rc.out_dir);
    const std::filesystem::path dir(rc.out_dir);
    write_file(dir / "report.json", report);
    if (wants(rc, "csv")) write_file(dir / "profile.csv", profile_csv(ex, rc.stride));
    if (wants(rc, "svg"))
        write_file(dir / "profile.svg",
                   profile_svg(ex, sp, classification_name(ex.classification)));
    std::cout << report;
    return 0;
}

int cmd_ke_sphere(const RunConfig& rc) {
    const SpaceParams sp{rc.kappa, rc.tau};
    const double x0 = ke_x0(rc.c, sp);
    std::vector<std::vector<std::string>> rows;
    for (double x : linspace(0.0, 0.95 * x0, 257)) {
        rows.push_back({format_double(x), format_double(ke_delta(x, rc.c, sp)),
                        format_double(ke_angle(x, rc.c, sp))});
    }
    std::filesystem::create_directories(rc.out_dir);
    const std::filesystem::path dir(rc.out_dir);
    if (wants(rc, "csv")) write_file(dir / "ke_sphere.csv", csv_table({"x", "delta", "nu"}, rows));
    JsonValue rep = JsonValue::object();
    rep.set("c", JsonValue::num(rc.c));
    rep.set("x0", JsonValue::num(x0));
    rep.set("config", config_json(rc));
    write_file(dir / "ke_sphere.json", rep.dump());
    std::cout << rep.dump();
    return 0;
}

int cmd_cone(const RunConfig& rc) {
    const SpaceParams sp{rc.kappa, rc.tau};
    const ConeSpec cone{rc.beta, 0.0};
    const double bound = cone_rho_bound(cone, sp);
    const double hi = std::isfinite(bound) ? 0.9 * bound : 3.0;
    const double lo = 0.05 * hi;
    const std::size_t n = 257;
    const double du = (hi - lo) / static_cast<double>(n - 1);
    std::vector<double> rho(n), h(n);
    for (std::size_t i = 0; i < n; ++i) {
        rho[i] = lo + du * static_cast<double>(i);
        h[i] = cone_height(rho[i], cone, sp);
    }
    const auto rows = graph_curvatures_u(rho, h, lo, du, sp);
    std::vector<std::vector<std::string>> table;
    for (const GraphCurvature& g : rows) {
        table.push_back({format_double(g.u), format_double(cone_height(g.u, cone, sp)),
                         format_double(g.nu), format_double(g.H), format_double(g.Ke)});
    }
    std::filesystem::create_directories(rc.out_dir);
    write_file(std::filesystem::path(rc.out_dir) / "cone.csv",
               csv_table({"rho", "h", "nu", "H", "Ke"}, table));
    double nu_err = 0.0, ke_err = 0.0, worst_dH = -1e300;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        nu_err = std::fmax(nu_err, std::fabs(rows[i].nu - std::fabs(rc.beta)));
        ke_err = std::fmax(ke_err, std::fabs(rows[i].Ke - cylinder_ke(sp)));
        if (i) worst_dH = std::fmax(worst_dH, (rows[i].H - rows[i - 1].H) * (rc.beta > 0 ? 1.0 : -1.0));
    }
    JsonValue rep = JsonValue::object();
    rep.set("beta", JsonValue::num(rc.beta));
    rep.set("rho_bound", JsonValue::num(bound));
    rep.set("max_angle_deviation", JsonValue::num(nu_err));
    rep.set("max_ke_deviation", JsonValue::num(ke_err));
    rep.set("H_strictly_monotone", JsonValue::boolean(worst_dH < 0.0));
    rep.set("config", config_json(rc));
    write_file(std::filesystem::path(rc.out_dir) / "cone.json", rep.dump());
    std::cout << rep.dump();
    return 0;
}

int cmd_phase_h2r(const RunConfig& rc) {
    if (rc.f.empty()) throw ConfigError("phase-h2r requires --f EXPR");
    const WeingartenClass cls = WeingartenClass::fform(rc.f);
    const H2Orbit orbit = h2r_orbit(cls, rc.solve);
    std::vector<std::vector<std::string>> rows;
    const std::size_t stride = rc.stride == 0 ? 1 : rc.stride;
    for (std::size_t i = 0; i < orbit.samples.size(); i += stride) {
        const H2Sample& r = orbit.samples[i];
        rows.push_back({format_double(r.s), format_double(r.x), format_double(r.y),
                        format_double(r.h), format_double(r.k1), format_double(r.k2),
                        format_double(r.sigma_sq)});
    }
    std::filesystem::create_directories(rc.out_dir);
    if (wants(rc, "csv"))
        write_file(std::filesystem::path(rc.out_dir) / "orbit.csv",
                   csv_table({"s", "x", "y", "h", "k1", "k2", "sigma_sq"}, rows));
    JsonValue rep = JsonValue::object();
    rep.set("classification", JsonValue::str(classification_name(orbit.classification)));
    rep.set("reached_max_s", JsonValue::boolean(orbit.reached_max_s));
    rep.set("umbilic_constant", JsonValue::num(orbit.umbilic));
    rep.set("normalized_by_flip", JsonValue::boolean(orbit.flipped));
    rep.set("turning_s", JsonValue::num(orbit.turning_s));
    rep.set("blowup_x", JsonValue::num(orbit.blowup_x));
    rep.set("blowup_y", JsonValue::num(orbit.blowup_y));
    rep.set("max_sigma_sq", JsonValue::num(orbit.max_sigma_sq));
    rep.set("config", config_json(rc));
    write_file(std::filesystem::path(rc.out_dir) / "orbit.json", rep.dump());
    std::cout << rep.dump();
    return 0;
}

int cmd_berger_project(const RunConfig& rc) {
    const SpaceParams sp{rc.kappa, rc.tau};
    if (!(sp.kappa > 0.0) || sp.tau == 0.0)
        throw ConfigError("berger-project requires kappa > 0 and tau != 0");
    const WeingartenClass cls = build_class(rc);
    const CanonicalExample ex = integrate_canonical(cls, sp, rc.solve);
    std::vector<std::vector<std::string>> rows;
    for (const SampleRow& r : ex.samples) {
        try {
            const StereoPoint q = profile_to_stereo(r.rho, r.h, 0.0, sp);
            rows.push_back({format_double(r.s), format_double(r.rho), format_double(r.h),
                            format_double(q.y1), format_double(q.y3)});
        } catch (const PoleError&) {
            rows.push_back({format_double(r.s), format_double(r.rho), format_double(r.h),
                            "pole", "pole"});
        }
    }
    std::filesystem::create_directories(rc.out_dir);
    write_file(std::filesystem::path(rc.out_dir) / "stereo_profile.csv",
               csv_table({"s", "rho", "h", "y1", "y3"}, rows));
    JsonValue rep = JsonValue::object();
    rep.set("classification", JsonValue::str(classification_name(ex.classification)));
    if (ex.classification == Classification::Sphere) {
        const EmbeddednessReport er = embeddedness_check(ex, sp);
        JsonValue e = JsonValue::object();
        e.set("embedded", JsonValue::boolean(er.embedded));
        e.set("height", JsonValue::num(er.height));
        e.set("threshold", JsonValue::num(er.threshold));
        rep.set("embeddedness", std::move(e));
    }
    rep.set("fiber_period", JsonValue::num(fiber_period(sp)));
    rep.set("config", config_json(rc));
    write_file(std::filesystem::path(rc.out_dir) / "berger.json", rep.dump());
    std::cout << rep.dump();
    return 0;
}

int cmd_verify(const std::string& suite) {
    const std::vector<CheckResult> results = run_suite(suite);
    JsonValue arr = JsonValue::array();
    bool all = true;
    for (const CheckResult& r : results) {
        JsonValue v = JsonValue::object();
        v.set("name", JsonValue::str(r.name));
        v.set("pass", JsonValue::boolean(r.pass));
        v.set("detail", JsonValue::str(r.detail));
        arr.push(std::move(v));
        all = all && r.pass;
    }
    JsonValue rep = JsonValue::object();
    rep.set("suite", JsonValue::str(suite));
    rep.set("pass", JsonValue::boolean(all));
    rep.set("checks", std::move(arr));
    std::cout << rep.dump();
    return all ? 0 : 1;
}

int cmd_sweep(RunConfig rc, const std::string& param, double from, double to, std::size_t count,
              bool log_spaced) {
    if (!(count < 100000)) throw ConfigError("sweep count too large");
    if (param != "c" && param != "h0") throw ConfigError("sweep parameter must be c or h0");
    std::vector<double> values;
    if (count > 0) values = log_spaced ? logspace(from, to, count) : linspace(from, to, count);
    const SpaceParams sp{rc.kappa, rc.tau};
    const bool berger = sp.kappa > 0.0 && sp.tau != 0.0;

    auto row_fn = [&](double value) -> std::vector<std::string> {
        RunConfig local = rc;
        if (param == "c") {
            local.c = value;
            local.class_kind = rc.class_kind == "prescribed-ke" ? rc.class_kind : "const-ke";
        } else {
            local.h0 = value;
            local.class_kind = "const-h";
        }
        std::vector<std::string> row{format_double(value)};
        try {
            const WeingartenClass cls = build_class(local);
            const CanonicalExample ex = integrate_canonical(cls, sp, local.solve);
            row.push_back(classification_name(ex.classification));
            row.push_back(format_double(ex.diagnostics.turning_s));
            row.push_back(format_double(ex.diagnostics.total_height));
            row.push_back(format_double(ex.diagnostics.max_sigma_sq));
            row.push_back(format_double(ex.diagnostics.nu_min));
            if (berger) {
                if (ex.classification == Classification::Sphere) {
                    const EmbeddednessReport er = embeddedness_check(ex, sp);
                    row.push_back(er.embedded ? "true" : "false");
                } else {
                    row.push_back("");
                }
            }
            row.push_back("");
        } catch (const std::exception& e) {
            while (row.size() < (berger ? 7u : 6u)) row.push_back("");
            row.push_back(e.what());
        }
        return row;
    };

    std::vector<std::string> header{param, "classification", "turning_s", "total_height",
                                    "max_sigma_sq", "nu_min"};
    if (berger) header.push_back("embedded");
    header.push_back("error");

    const auto rows = sweep_rows(values, row_fn);
    const std::string table = csv_table(header, rows);
    std::filesystem::create_directories(rc.out_dir);
    write_file(std::filesystem::path(rc.out_dir) / "sweep.csv", table);
    std::cout << table;
    return 0;
}

void apply_seed_config(RunConfig& rc) {
    const char* path = std::getenv("WEINGARTEN_SEED_CONFIG");
    if (path == nullptr || path[0] == '\0') return;
    std::ifstream is(path);
    if (!is) throw ConfigError(std::string("WEINGARTEN_SEED_CONFIG: cannot open ") + path);
    nlohmann::json j;
    try {
        is >> j;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("WEINGARTEN_SEED_CONFIG: ") + e.what());
    }
    auto num = [&](const char* key, double& slot) {
        if (j.contains(key)) {
            if (!j[key].is_number()) throw ConfigError(std::string("seed config field '") + key + "' must be a number");
            slot = j[key].get<double>();
        }
    };
    num("kappa", rc.kappa);
    num("tau", rc.tau);
    num("h0", rc.h0);
    num("c", rc.c);
    num("s0", rc.solve.s0);
    num("max_s", rc.solve.max_s);
    if (j.contains("tol")) {
        if (!j["tol"].is_number()) throw ConfigError("seed config field 'tol' must be a number");
        rc.solve.rel_tol = j["tol"].get<double>();
        rc.solve.abs_tol = 1e-2 * rc.solve.rel_tol;
    }
    if (j.contains("class")) {
        if (!j["class"].is_string()) throw ConfigError("seed config field 'class' must be a string");
        rc.class_kind = j["class"].get<std::string>();
    }
    if (j.contains("phi")) rc.phi = j["phi"].get<std::string>();
    if (j.contains("f")) rc.f = j["f"].get<std::string>();
    if (j.contains("out")) rc.out_dir = j["out"].get<std::string>();
}

void add_common(CLI::App* cmd, RunConfig& rc, double& tol) {
    cmd->add_option("--kappa", rc.kappa, "base curvature of E3(kappa,tau)");
    cmd->add_option("--tau", rc.tau, "bundle curvature of E3(kappa,tau)");
    cmd->add_option("--class", rc.class_kind,
                    "curvature relation kind: const-h, prescribed-h, const-ke, prescribed-ke, phi, fform");
    cmd->add_option("--h0", rc.h0, "constant mean curvature (const-h)");
    cmd->add_option("--c", rc.c, "constant extrinsic curvature (const-ke)");
    cmd->add_option("--phi", rc.phi, "expression for Phi in t, v");
    cmd->add_option("--f", rc.f, "expression for f in k2, v");
    cmd->add_option("--beta", rc.beta, "cone angle constant in (-1,1)");
    cmd->add_option("--s0", rc.solve.s0, "series handoff parameter");
    cmd->add_option("--tol", tol, "relative integrator tolerance (absolute = tol/100)");
    cmd->add_option("--max-s", rc.solve.max_s, "integration cap in sigma-arclength");
    cmd->add_option("--out", rc.out_dir, "output directory");
    cmd->add_option("--format", rc.formats, "output formats: csv, json, svg");
    cmd->add_option("--stride", rc.stride, "sample stride for emitted tables");
}

} // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");
    CLI::App app{"rotational Weingarten surfaces in E3(kappa,tau)"};
    app.require_subcommand(1);

    RunConfig rc;
    double tol = 0.0;
    try {
        apply_seed_config(rc);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    CLI::App* solve = app.add_subcommand("solve", "integrate the canonical rotational example");
    add_common(solve, rc, tol);
    CLI::App* classify = app.add_subcommand("classify", "classification and diagnostics only");
    add_common(classify, rc, tol);
    CLI::App* kesphere = app.add_subcommand("ke-sphere", "closed-form constant-Ke sphere profile");
    add_common(kesphere, rc, tol);
    CLI::App* cone = app.add_subcommand("cone", "constant-angle cone surface and its curvatures");
    add_common(cone, rc, tol);
    CLI::App* phase = app.add_subcommand("phase-h2r", "H^2 x R phase-plane orbit for k1 = f(k2, v)");
    add_common(phase, rc, tol);
    CLI::App* berger = app.add_subcommand("berger-project", "stereographic transport and embeddedness");
    add_common(berger, rc, tol);

    CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string suite;
    verify->add_option("suite", suite, "one of: gauss, cones, ke-closed-form, monotonicity, h2r-bound, popu0, s2r-example, berger")
        ->required();

    CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep with one row per value");
    add_common(sweep, rc, tol);
    std::string sweep_param = "c";
    double sweep_from = 0.1, sweep_to = 10.0;
    std::size_t sweep_count = 25;
    bool sweep_log = false;
    sweep->add_option("--param", sweep_param, "swept parameter: c or h0");
    sweep->add_option("--from", sweep_from, "first value");
    sweep->add_option("--to", sweep_to, "last value");
    sweep->add_option("--count", sweep_count, "number of rows");
    sweep->add_flag("--log", sweep_log, "logarithmic spacing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (tol > 0.0) {
        rc.solve.rel_tol = tol;
        rc.solve.abs_tol = 1e-2 * tol;
    }

    try {
        if (solve->parsed()) return cmd_solve(rc, false);
        if (classify->parsed()) return cmd_solve(rc, true);
        if (kesphere->parsed()) return cmd_ke_sphere(rc);
        if (cone->parsed()) return cmd_cone(rc);
        if (phase->parsed()) return cmd_phase_h2r(rc);
        if (berger->parsed()) return cmd_berger_project(rc);
        if (verify->parsed()) return cmd_verify(suite);
        if (sweep->parsed()) return cmd_sweep(rc, sweep_param, sweep_from, sweep_to, sweep_count, sweep_log);
    } catch (const ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
