#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace cutloc::quad {

/// Adaptive 15-point Gauss-Kronrod integration of f over [a, b].
template <class F>
double integrate(F&& f, double a, double b, double tol = 1e-12, unsigned max_depth = 20)
{
    if (a == b) return 0.0;
    double err = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, a, b, max_depth, tol, &err);
}

}  // namespace cutloc::quad
