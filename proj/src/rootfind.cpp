#include "weingarten/rootfind.hpp"

#include <cmath>

#include "weingarten/errors.hpp"

namespace weingarten {

double bisect(const std::function<double(double)>& f, double a, double b,
              double rel_tol, double abs_tol) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0) == (fb > 0)) throw NoRoot("bisect: endpoints do not bracket a root");
    for (int it = 0; it < 400; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm > 0) == (fa > 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
        if (std::fabs(b - a) <= rel_tol * std::fmax(1.0, std::fabs(m)) + abs_tol) break;
    }
    return 0.5 * (a + b);
}

double newton_bisect(const std::function<double(double)>& f, double a, double b,
                     double rel_tol) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0) == (fb > 0)) throw NoRoot("newton_bisect: endpoints do not bracket a root");
    double x = 0.5 * (a + b);
    double fx = f(x);
    for (int it = 0; it < 200; ++it) {
        if (fx == 0.0) return x;
        if ((fx > 0) == (fa > 0)) {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
        const double width = b - a;
        if (std::fabs(width) <= rel_tol * std::fmax(1.0, std::fabs(x))) return x;
        // secant/Newton trial from the two freshest endpoint values
        double trial;
        const double denom = fb - fa;
        if (denom != 0.0) {
            trial = a - fa * (b - a) / denom;
        } else {
            trial = 0.5 * (a + b);
        }
        const double lo = std::fmin(a, b), hi = std::fmax(a, b);
        if (!(trial > lo && trial < hi)) trial = 0.5 * (a + b);
        x = trial;
        fx = f(x);
    }
    return x;
}

} // namespace weingarten
