#pragma once

#include "rsusy/grid/kernels.hpp"

#include <vector>

namespace rsusy {

// number of eigenvalues strictly below x (Sturm count)
int sturm_count(const SymTridiagonal& t, double x);

// eigenvalue with 0-based ascending index k, by bisection;
// ConvergenceFailure if the bracket does not shrink within the iteration cap
double tridiagonal_eigenvalue(const SymTridiagonal& t, int k);

std::vector<double> tridiagonal_lowest(const SymTridiagonal& t, int k);
// the k eigenvalues of smallest magnitude, ordered by |value|
std::vector<double> tridiagonal_nearest_zero(const SymTridiagonal& t, int k);

// k smallest eigenvalues of a dense symmetric matrix (Householder + bisection)
std::vector<double> symmetric_lowest(const Matrix& A, int k);
// all eigenvalues, ascending
std::vector<double> symmetric_eigenvalues(const Matrix& A);

}  // namespace rsusy
