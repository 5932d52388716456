#ifndef WEINGARTEN_RK_HPP
#define WEINGARTEN_RK_HPP

#include <array>
#include <cmath>
#include <functional>

namespace weingarten {

// Dormand–Prince 5(4) embedded pair. The solver owns the step-size loop and
// event localization; this header only provides one trial step plus the
// classic PI-style step-size update.
template <std::size_t N>
struct RKStep {
    std::array<double, N> y;
    double err_norm; // weighted RMS of the embedded error estimate
};

template <std::size_t N>
using RKRhs = std::function<std::array<double, N>(double, const std::array<double, N>&)>;

template <std::size_t N>
RKStep<N> dopri5_step(const RKRhs<N>& f, double s, const std::array<double, N>& y,
                      double h, double rel_tol, double abs_tol) {
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                            e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                            e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;

    std::array<double, N> k1 = f(s, y), t{};

    for (std::size_t i = 0; i < N; ++i) t[i] = y[i] + h * a21 * k1[i];
    std::array<double, N> k2 = f(s + c2 * h, t);
    for (std::size_t i = 0; i < N; ++i) t[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    std::array<double, N> k3 = f(s + c3 * h, t);
    for (std::size_t i = 0; i < N; ++i) t[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    std::array<double, N> k4 = f(s + c4 * h, t);
    for (std::size_t i = 0; i < N; ++i)
        t[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    std::array<double, N> k5 = f(s + c5 * h, t);
    for (std::size_t i = 0; i < N; ++i)
        t[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    std::array<double, N> k6 = f(s + h, t);

    RKStep<N> out{};
    for (std::size_t i = 0; i < N; ++i)
        out.y[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    std::array<double, N> k7 = f(s + h, out.y);

    double sum = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
        const double sc = abs_tol + rel_tol * std::fmax(std::fabs(y[i]), std::fabs(out.y[i]));
        sum += (e / sc) * (e / sc);
    }
    out.err_norm = std::sqrt(sum / static_cast<double>(N));
    return out;
}

inline double rk_next_h(double h, double err_norm) {
    const double safety = 0.9, order = 5.0;
    double fac = err_norm > 0 ? safety * std::pow(err_norm, -1.0 / order) : 5.0;
    fac = std::fmin(5.0, std::fmax(0.2, fac));
    return h * fac;
}

} // namespace weingarten

#endif
