#include "rsusy/grid/kernels.hpp"

#include "rsusy/errors.hpp"

#include <cmath>

namespace rsusy {

double Matrix::max_abs_diff(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw InvalidParams("Matrix::max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a_.size(); ++i) m = std::fmax(m, std::fabs(a_[i] - o.a_[i]));
    return m;
}

namespace {

void check_matvec(const Matrix& A, const std::vector<double>& x) {
    if (A.cols() != static_cast<int>(x.size())) throw InvalidParams("matvec: shape mismatch");
}

void check_matmul(const Matrix& A, const Matrix& B) {
    if (A.cols() != B.rows()) throw InvalidParams("matmul: shape mismatch");
}

inline double dot_row(const double* a, const double* x, int n) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += a[j] * x[j];
    return s;
}

inline void matmul_row(const Matrix& A, const Matrix& B, Matrix& C, int i) {
    double* c = C.row(i);
    const double* a = A.row(i);
    for (int k = 0; k < A.cols(); ++k) {
        const double aik = a[k];
        if (aik == 0.0) continue;
        const double* b = B.row(k);
        for (int j = 0; j < B.cols(); ++j) c[j] += aik * b[j];
    }
}

// One Householder step on the trailing block rows/cols k+1..n-1.
// Returns the subdiagonal entry; v, p are scratch of length n.
template <bool Par>
double householder_step(Matrix& A, int k, std::vector<double>& v, std::vector<double>& p) {
    const int n = A.rows();
    const int m = n - k - 1;
    double norm2 = 0.0;
    for (int i = 0; i < m; ++i) {
        v[i] = A(k + 1 + i, k);
        norm2 += v[i] * v[i];
    }
    if (norm2 == 0.0) return 0.0;
    const double norm = std::sqrt(norm2);
    const double alpha = v[0] > 0 ? -norm : norm;
    v[0] -= alpha;
    double vv = 0.0;
    for (int i = 0; i < m; ++i) vv += v[i] * v[i];
    if (vv == 0.0) return alpha;
    const double beta = 2.0 / vv;

#pragma omp parallel for schedule(static) if (Par)
    for (int i = 0; i < m; ++i) p[i] = beta * dot_row(A.row(k + 1 + i) + k + 1, v.data(), m);

    double K = 0.0;
    for (int i = 0; i < m; ++i) K += v[i] * p[i];
    K *= beta / 2;
    for (int i = 0; i < m; ++i) p[i] -= K * v[i];  // p becomes w

#pragma omp parallel for schedule(static) if (Par)
    for (int i = 0; i < m; ++i) {
        double* a = A.row(k + 1 + i) + k + 1;
        const double vi = v[i], wi = p[i];
        for (int j = 0; j < m; ++j) a[j] -= vi * p[j] + wi * v[j];
    }
    return alpha;
}

template <bool Par>
SymTridiagonal tridiagonalize_impl(Matrix A) {
    const int n = A.rows();
    if (A.cols() != n) throw InvalidParams("tridiagonalize: matrix not square");
    SymTridiagonal t;
    t.d.resize(n);
    t.e.resize(n > 0 ? n - 1 : 0);
    std::vector<double> v(n), p(n);
    for (int k = 0; k + 2 < n; ++k) {
        t.d[k] = A(k, k);
        t.e[k] = householder_step<Par>(A, k, v, p);
    }
    if (n >= 2) {
        t.d[n - 2] = A(n - 2, n - 2);
        t.e[n - 2] = A(n - 1, n - 2);
    }
    if (n >= 1) t.d[n - 1] = A(n - 1, n - 1);
    return t;
}

}  // namespace

namespace kernels {

namespace serial {

std::vector<double> matvec(const Matrix& A, const std::vector<double>& x) {
    check_matvec(A, x);
    std::vector<double> y(A.rows());
    for (int i = 0; i < A.rows(); ++i) y[i] = dot_row(A.row(i), x.data(), A.cols());
    return y;
}

Matrix matmul(const Matrix& A, const Matrix& B) {
    check_matmul(A, B);
    Matrix C(A.rows(), B.cols());
    for (int i = 0; i < A.rows(); ++i) matmul_row(A, B, C, i);
    return C;
}

SymTridiagonal tridiagonalize(Matrix A) { return tridiagonalize_impl<false>(std::move(A)); }

}  // namespace serial

namespace parallel {

std::vector<double> matvec(const Matrix& A, const std::vector<double>& x) {
    check_matvec(A, x);
    std::vector<double> y(A.rows());
#pragma omp parallel for schedule(static)
    for (int i = 0; i < A.rows(); ++i) y[i] = dot_row(A.row(i), x.data(), A.cols());
    return y;
}

Matrix matmul(const Matrix& A, const Matrix& B) {
    check_matmul(A, B);
    Matrix C(A.rows(), B.cols());
#pragma omp parallel for schedule(static)
    for (int i = 0; i < A.rows(); ++i) matmul_row(A, B, C, i);
    return C;
}

SymTridiagonal tridiagonalize(Matrix A) { return tridiagonalize_impl<true>(std::move(A)); }

}  // namespace parallel

}  // namespace kernels

}  // namespace rsusy
