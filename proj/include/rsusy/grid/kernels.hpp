#pragma once

#include <vector>

namespace rsusy {

// Row-major dense matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, 0.0) {}

    int rows() const { return r_; }
    int cols() const { return c_; }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    double* row(int i) { return a_.data() + static_cast<std::size_t>(i) * c_; }
    const double* row(int i) const { return a_.data() + static_cast<std::size_t>(i) * c_; }
    const std::vector<double>& data() const { return a_; }

    double max_abs_diff(const Matrix& o) const;

private:
    int r_ = 0, c_ = 0;
    std::vector<double> a_;
};

struct SymTridiagonal {
    std::vector<double> d;  // diagonal, size n
    std::vector<double> e;  // off-diagonal, size n-1
};

// serial:: is the reference; parallel:: uses OpenMP over rows with the same
// per-row summation order, so both produce bitwise-identical results.
namespace kernels {
namespace serial {
std::vector<double> matvec(const Matrix& A, const std::vector<double>& x);
Matrix matmul(const Matrix& A, const Matrix& B);
SymTridiagonal tridiagonalize(Matrix A);  // Householder, symmetric A
}  // namespace serial

namespace parallel {
std::vector<double> matvec(const Matrix& A, const std::vector<double>& x);
Matrix matmul(const Matrix& A, const Matrix& B);
SymTridiagonal tridiagonalize(Matrix A);
}  // namespace parallel
}  // namespace kernels

}  // namespace rsusy
