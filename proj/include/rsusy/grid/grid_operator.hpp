#pragma once

#include "rsusy/grid/grid.hpp"
#include "rsusy/grid/kernels.hpp"

#include <functional>

namespace rsusy {

using RealFn = std::function<double(double)>;

// dirichlet: antisymmetric ghost, wall exactly at +-b; truncated: zero ghost
enum class Boundary { dirichlet, truncated };

// -kappa d^2 + W0(x) + W1(x) R in banded form: tridiagonal part plus the
// anti-diagonal reflection coefficients refl[i] at (i, N-1-i)
struct ReflectionHamiltonian {
    Grid grid;
    std::vector<double> diag;
    std::vector<double> off;
    std::vector<double> refl;
};

ReflectionHamiltonian discretize(const RealFn& scalar, const RealFn& refl_coeff, const Grid& g,
                                 Boundary bc = Boundary::dirichlet, double kappa = 0.5);

struct GridOperator {
    Grid grid;
    Matrix m;

    bool is_symmetric(double tol = 1e-12) const;
};

GridOperator to_dense(const ReflectionHamiltonian& h);
GridOperator assemble(const RealFn& scalar, const RealFn& refl_coeff, const Grid& g,
                      Boundary bc = Boundary::dirichlet, double kappa = 0.5);

Matrix reflection_matrix(const Grid& g);
// max |R A R - B|
double mirror_residual(const Matrix& A, const Matrix& B);

// Even/odd half-grid blocks (x > 0 half) and their coupling E^T H O.
struct ParityBlocks {
    Matrix even, odd, coupling;
    double coupling_norm() const;
};
ParityBlocks parity_blocks(const GridOperator& op);

struct TridiagonalParityBlocks {
    SymTridiagonal even, odd;
    std::vector<double> coupling;  // diagonal
    double coupling_norm() const;
};
TridiagonalParityBlocks parity_blocks(const ReflectionHamiltonian& h);

// spectrum through the blocks: union when uncoupled, full 2x2 block form otherwise
std::vector<double> block_spectrum(const ParityBlocks& b);

std::vector<double> eigen_lowest(const GridOperator& op, int k);
std::vector<double> eigen_lowest(const TridiagonalParityBlocks& b, int k);  // requires zero coupling

}  // namespace rsusy
