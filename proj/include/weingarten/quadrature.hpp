#ifndef WEINGARTEN_QUADRATURE_HPP
#define WEINGARTEN_QUADRATURE_HPP

#include <functional>

namespace weingarten {

// Adaptive Gauss–Kronrod (7,15) quadrature over [a,b] to absolute tolerance
// abs_tol; throws NonConvergent if the subdivision limit is hit first.
double integrate_gk(const std::function<double(double)>& f, double a, double b,
                    double abs_tol = 1e-12);

} // namespace weingarten

#endif
