#ifndef WEINGARTEN_ROOTFIND_HPP
#define WEINGARTEN_ROOTFIND_HPP

#include <functional>

namespace weingarten {

// Plain bisection on a bracketing interval [a,b] with f(a)*f(b) <= 0.
// Refines until the interval width is below rel_tol*max(1,|x|) + abs_tol.
double bisect(const std::function<double(double)>& f, double a, double b,
              double rel_tol = 1e-14, double abs_tol = 1e-300);

// Safeguarded Newton: Newton steps with a numeric derivative, falling back to
// bisection whenever an iterate leaves the bracket or fails to shrink it.
double newton_bisect(const std::function<double(double)>& f, double a, double b,
                     double rel_tol = 1e-13);

} // namespace weingarten

#endif
