#pragma once

#include <functional>

namespace synsq {

// Adaptive Simpson quadrature of f over [a, b]. Subintervals are bisected
// until the Richardson error estimate falls under rel_tol times the running
// magnitude of the integral. Throws NumericalError when the recursion limit
// is reached or the integrand is not finite.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-10, int max_depth = 48);

}  // namespace synsq
