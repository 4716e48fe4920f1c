#pragma once

#include "rsusy/gegenbauer/gegenbauer.hpp"
#include "rsusy/grid/convergence.hpp"
#include "rsusy/susyqm/scarf.hpp"

namespace rsusy {

// fitted supercharge; E = q^2 for the k eigenvalues of Q nearest zero
SpectralProblem scarf_spectral_problem(const ScarfParams& p);
// -d^2/2 + x^2/2 - R/2 on (-L, L), Dirichlet, even/odd tridiagonal blocks
SpectralProblem oscillator_spectral_problem(double L = 10.0);
// H_G with corrected (or printed) potentials, fitted even and odd sectors, target -lambda_n
SpectralProblem gegenbauer_spectral_problem(const GegParams& p, Variant v = Variant::corrected);
// particle in the box (-pi/2, pi/2): n-th level (n+1)^2/2
SpectralProblem free_particle_problem();

}  // namespace rsusy
