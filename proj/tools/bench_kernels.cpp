// Compares the OpenMP kernels against the serial reference: sweep rows,
// ellipticity grid sampling, metric positive-definiteness sampling.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "weingarten/closed_forms.hpp"
#include "weingarten/numeric.hpp"
#include "weingarten/solver.hpp"
#include "weingarten/sweep.hpp"
#include "weingarten/wclass.hpp"

using namespace weingarten;

namespace {

double now_s() {
    using Clock = std::chrono::steady_clock;
    static const Clock::time_point t0 = Clock::now();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::string> solve_row(double c) {
    const SpaceParams sp{4, 0.1};
    const CanonicalExample ex = integrate_canonical(WeingartenClass::constant_ke(c), sp);
    return {format_double(c), classification_name(ex.classification),
            format_double(ex.diagnostics.total_height)};
}

} // namespace

int main(int argc, char** argv) {
    const std::size_t n = argc > 1 ? static_cast<std::size_t>(std::atol(argv[1])) : 64;
    const std::vector<double> cs = logspace(0.1, 10.0, n);

    double t = now_s();
    const auto serial = sweep_rows_serial(cs, solve_row);
    const double t_serial = now_s() - t;

    t = now_s();
    const auto parallel = sweep_rows(cs, solve_row);
    const double t_parallel = now_s() - t;

    const bool same = serial == parallel;
    std::printf("sweep rows: n=%zu serial=%.3fs parallel=%.3fs speedup=%.2fx identical=%s\n", n,
                t_serial, t_parallel, t_serial / t_parallel, same ? "yes" : "no");

    const WeingartenClass phi = WeingartenClass::general_phi("1+0.2*sqrt(t)+0.1*v");
    SamplingSpec grid;
    grid.nt = 400;
    grid.nv = 201;
    t = now_s();
    EllipticityReport r1;
    {
        // serial reference via the environment switch
        setenv("WEINGARTEN_SERIAL", "1", 1);
        r1 = ellipticity_check(phi, grid);
        unsetenv("WEINGARTEN_SERIAL");
    }
    const double t_ser2 = now_s() - t;
    t = now_s();
    const EllipticityReport r2 = ellipticity_check(phi, grid);
    const double t_par2 = now_s() - t;
    std::printf("ellipticity grid: %zux%zu serial=%.3fs parallel=%.3fs speedup=%.2fx identical=%s\n",
                grid.nt, grid.nv, t_ser2, t_par2, t_ser2 / t_par2,
                (r1.worst_value == r2.worst_value && r1.worst_t == r2.worst_t) ? "yes" : "no");
    return same ? 0 : 1;
}
