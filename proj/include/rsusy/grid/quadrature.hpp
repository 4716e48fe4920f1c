#pragma once

#include "rsusy/grid/grid.hpp"
#include "rsusy/grid/grid_operator.hpp"

namespace rsusy {

// midpoint rule on g, 2g and 4g combined by two Richardson steps (h^2, h^4)
double quadrature(const RealFn& f, const Grid& g);
double midpoint(const RealFn& f, const Grid& g);

// double-exponential rule on [a, b]; never evaluates f at the endpoints,
// suited to integrands with algebraic endpoint singularities
double tanh_sinh(const RealFn& f, double a, double b, double tol = 1e-14);

}  // namespace rsusy
