#include "weingarten/numeric.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace weingarten {

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> out;
    out.reserve(n);
    if (n == 0) return out;
    if (n == 1) {
        out.push_back(a);
        return out;
    }
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
    out.back() = b;
    return out;
}

std::vector<double> logspace(double a, double b, std::size_t n) {
    if (a <= 0.0 || b <= 0.0) throw std::invalid_argument("logspace endpoints must be positive");
    std::vector<double> out = linspace(std::log(a), std::log(b), n);
    for (double& v : out) v = std::exp(v);
    if (!out.empty()) {
        out.front() = a;
        out.back() = b;
    }
    return out;
}

double fd_derivative(const std::function<double(double)>& f, double x, double h, double lo) {
    if (x - h >= lo) return (f(x + h) - f(x - h)) / (2.0 * h);
    return (f(x + h) - f(x)) / h;
}

bool parallel_enabled() {
#ifdef _OPENMP
    const char* s = std::getenv("WEINGARTEN_SERIAL");
    return !(s != nullptr && s[0] == '1');
#else
    return false;
#endif
}

void serial_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
#ifdef _OPENMP
    if (parallel_enabled()) {
        const std::int64_t m = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t i = 0; i < m; ++i) fn(static_cast<std::size_t>(i));
        return;
    }
#endif
    serial_for(n, fn);
}

double HermiteCurve::eval(double xq) const {
    if (x.size() < 2) throw std::invalid_argument("HermiteCurve needs at least two samples");
    const bool inc = x.back() > x.front();
    std::size_t i = 0;
    if (inc) {
        auto it = std::upper_bound(x.begin(), x.end(), xq);
        i = static_cast<std::size_t>(std::distance(x.begin(), it));
    } else {
        auto it = std::upper_bound(x.begin(), x.end(), xq, std::greater<double>());
        i = static_cast<std::size_t>(std::distance(x.begin(), it));
    }
    if (i == 0) i = 1;
    if (i >= x.size()) i = x.size() - 1;
    const double x0 = x[i - 1], x1 = x[i];
    const double w = x1 - x0;
    const double u = (xq - x0) / w;
    const double h00 = (1 + 2 * u) * sq(1 - u);
    const double h10 = u * sq(1 - u);
    const double h01 = u * u * (3 - 2 * u);
    const double h11 = u * u * (u - 1);
    return h00 * y[i - 1] + h10 * w * dydx[i - 1] + h01 * y[i] + h11 * w * dydx[i];
}

} // namespace weingarten
