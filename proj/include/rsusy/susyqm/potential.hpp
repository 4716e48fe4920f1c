#pragma once

#include "rsusy/grid/grid_operator.hpp"

#include <map>
#include <string>

namespace rsusy {

// Q = (1/sqrt2)(d/dx R + U R + V): U even, V odd
struct SusyPotential {
    RealFn U, V;
    RealFn dU, dV;
    std::map<std::string, double> params;
};

struct HParts {
    RealFn scalar;      // (U^2 + V^2)/2 + U'/2
    RealFn reflection;  // -V'/2
};

HParts generic_H_parts(const SusyPotential& p);

// max |U(-x) - U(x)| and |V(-x) + V(x)| over the nodes
double parity_defect(const SusyPotential& p, const Grid& g);

SusyPotential oscillator_potential();
SusyPotential scarf_potential(double alpha, double beta);

}  // namespace rsusy
