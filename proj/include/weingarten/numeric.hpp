#ifndef WEINGARTEN_NUMERIC_HPP
#define WEINGARTEN_NUMERIC_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace weingarten {

// Locale-independent float formatting with 17 significant digits; the
// emitters rely on this for byte-identical reruns.
std::string format_double(double x);

std::vector<double> linspace(double a, double b, std::size_t n);

// Logarithmically spaced nodes between a and b (both > 0).
std::vector<double> logspace(double a, double b, std::size_t n);

// Central difference with one-sided fallback at the left edge of a domain
// [lo, inf). Step h must be positive.
double fd_derivative(const std::function<double(double)>& f, double x, double h, double lo = -1e300);

inline double sq(double x) { return x * x; }

// Portable uniform double in [0,1) from a raw 64-bit generator state; the
// standard distributions are not bit-stable across implementations.
inline double u64_to_unit(std::uint64_t r) {
    return static_cast<double>(r >> 11) * 0x1.0p-53;
}

// Runs fn(i) for i in [0, n). The parallel flavour uses OpenMP when compiled
// in and not disabled via WEINGARTEN_SERIAL=1; every fn(i) must write only to
// its own output slot so both flavours produce identical bytes.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);
void serial_for(std::size_t n, const std::function<void(std::size_t)>& fn);
bool parallel_enabled();

// Cubic Hermite curve through samples (x_i, y_i, dy/dx_i); x strictly monotone.
struct HermiteCurve {
    std::vector<double> x, y, dydx;

    double eval(double xq) const;
    double min_x() const { return x.front() < x.back() ? x.front() : x.back(); }
    double max_x() const { return x.front() < x.back() ? x.back() : x.front(); }
};

} // namespace weingarten

#endif
