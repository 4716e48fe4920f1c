#pragma once

#include "rsusy/grid/grid_operator.hpp"

#include <vector>

namespace rsusy {

// Exponentially fitted, staggered discretization of the Scarf supercharge
// on the half-line (0, pi/2). Unknowns are interleaved u_0, w_1, u_1, ...,
// u_{M-1} (u at cell centres, w at interior nodes). A smooth rotation of the
// (U, V) frame switches the fitted exponent from V near 0 to U near pi/2.
struct FittedDiracProblem {
    double alpha = 0.0;
    double beta = 0.0;
};

// symmetric tridiagonal matrix of Q (size 2M-1) with M = N/2 cells
SymTridiagonal fitted_supercharge_matrix(const FittedDiracProblem& p, int N);
// k eigenvalues of Q nearest zero, ordered by magnitude
std::vector<double> fitted_supercharge_eigenvalues(const FittedDiracProblem& p, int N, int k);

// One parity sector of -kappa d^2 + W(x) on (0, pi/2), written as
// kappa B^T B + (W - sing) with B = d - w, w = G'/G, G = sin^s0 cos^s1.
struct FittedSectorProblem {
    double s0 = 0.0;
    double s1 = 0.0;
    double kappa = 1.0;
    RealFn potential;
};

SymTridiagonal fitted_sector_matrix(const FittedSectorProblem& p, int N);
std::vector<double> fitted_sector_eigenvalues(const FittedSectorProblem& p, int N, int k);

}  // namespace rsusy
