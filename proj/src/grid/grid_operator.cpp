#include "rsusy/grid/grid_operator.hpp"

#include "rsusy/errors.hpp"
#include "rsusy/grid/eigen.hpp"

#include <algorithm>
#include <cmath>

namespace rsusy {

ReflectionHamiltonian discretize(const RealFn& scalar, const RealFn& refl_coeff, const Grid& g, Boundary bc,
                                 double kappa) {
    const int N = g.N();
    const double h2 = g.h() * g.h();
    ReflectionHamiltonian H{g, std::vector<double>(N), std::vector<double>(N - 1, -kappa / h2), std::vector<double>(N)};
    for (int i = 0; i < N; ++i) {
        const double x = g.x(i);
        const double w0 = scalar(x), w1 = refl_coeff(x);
        if (!std::isfinite(w0) || !std::isfinite(w1))
            throw SingularPotential("potential not finite at node x=" + std::to_string(x));
        H.diag[i] = 2 * kappa / h2 + w0;
        H.refl[i] = w1;
    }
    if (bc == Boundary::dirichlet) {
        H.diag[0] += kappa / h2;
        H.diag[N - 1] += kappa / h2;
    }
    return H;
}

bool GridOperator::is_symmetric(double tol) const {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j)
            if (std::fabs(m(i, j) - m(j, i)) > tol) return false;
    return true;
}

GridOperator to_dense(const ReflectionHamiltonian& H) {
    const int N = H.grid.N();
    GridOperator op{H.grid, Matrix(N, N)};
    for (int i = 0; i < N; ++i) {
        op.m(i, i) += H.diag[i];
        if (i + 1 < N) {
            op.m(i, i + 1) += H.off[i];
            op.m(i + 1, i) += H.off[i];
        }
        op.m(i, N - 1 - i) += H.refl[i];
    }
    return op;
}

GridOperator assemble(const RealFn& scalar, const RealFn& refl_coeff, const Grid& g, Boundary bc, double kappa) {
    return to_dense(discretize(scalar, refl_coeff, g, bc, kappa));
}

Matrix reflection_matrix(const Grid& g) {
    Matrix R(g.N(), g.N());
    for (int i = 0; i < g.N(); ++i) R(i, g.mirror(i)) = 1.0;
    return R;
}

double mirror_residual(const Matrix& A, const Matrix& B) {
    const int N = A.rows();
    double m = 0.0;
    // (R A R)_{ij} = A_{N-1-i, N-1-j}
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) m = std::fmax(m, std::fabs(A(N - 1 - i, N - 1 - j) - B(i, j)));
    return m;
}

double ParityBlocks::coupling_norm() const {
    double m = 0.0;
    for (double v : coupling.data()) m = std::fmax(m, std::fabs(v));
    return m;
}

ParityBlocks parity_blocks(const GridOperator& op) {
    const int N = op.grid.N(), M = N / 2;
    const Matrix& H = op.m;
    ParityBlocks b{Matrix(M, M), Matrix(M, M), Matrix(M, M)};
    for (int j = 0; j < M; ++j) {
        const int a = M + j, ap = M - 1 - j;
        for (int l = 0; l < M; ++l) {
            const int c = M + l, cp = M - 1 - l;
            b.even(j, l) = 0.5 * (H(a, c) + H(a, cp) + H(ap, c) + H(ap, cp));
            b.odd(j, l) = 0.5 * (H(a, c) - H(a, cp) - H(ap, c) + H(ap, cp));
            b.coupling(j, l) = 0.5 * (H(a, c) - H(a, cp) + H(ap, c) - H(ap, cp));
        }
    }
    return b;
}

double TridiagonalParityBlocks::coupling_norm() const {
    double m = 0.0;
    for (double v : coupling) m = std::fmax(m, std::fabs(v));
    return m;
}

TridiagonalParityBlocks parity_blocks(const ReflectionHamiltonian& H) {
    const int N = H.grid.N(), M = N / 2;
    TridiagonalParityBlocks b;
    b.even.d.resize(M);
    b.odd.d.resize(M);
    b.even.e.resize(M - 1);
    b.odd.e.resize(M - 1);
    b.coupling.resize(M);
    for (int j = 0; j < M; ++j) {
        const int a = M + j, ap = M - 1 - j;
        const double d = 0.5 * (H.diag[a] + H.diag[ap]);
        double r = 0.5 * (H.refl[a] + H.refl[ap]);
        if (j == 0) r += H.off[M - 1];  // the two central nodes are mirror neighbours
        b.even.d[j] = d + r;
        b.odd.d[j] = d - r;
        b.coupling[j] = 0.5 * (H.diag[a] - H.diag[ap]) + 0.5 * (H.refl[ap] - H.refl[a]);
        if (j + 1 < M) {
            const double t = 0.5 * (H.off[a] + H.off[M - 2 - j]);
            b.even.e[j] = t;
            b.odd.e[j] = t;
        }
    }
    return b;
}

std::vector<double> block_spectrum(const ParityBlocks& b) {
    const int M = b.even.rows();
    if (b.coupling_norm() == 0.0) {
        auto e = symmetric_eigenvalues(b.even);
        auto o = symmetric_eigenvalues(b.odd);
        e.insert(e.end(), o.begin(), o.end());
        std::sort(e.begin(), e.end());
        return e;
    }
    Matrix full(2 * M, 2 * M);
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < M; ++j) {
            full(i, j) = b.even(i, j);
            full(M + i, M + j) = b.odd(i, j);
            full(i, M + j) = b.coupling(i, j);
            full(M + j, i) = b.coupling(i, j);
        }
    return symmetric_eigenvalues(full);
}

std::vector<double> eigen_lowest(const GridOperator& op, int k) {
    if (k > op.m.rows()) throw InvalidParams("eigen_lowest: k exceeds N");
    return symmetric_lowest(op.m, k);
}

std::vector<double> eigen_lowest(const TridiagonalParityBlocks& b, int k) {
    if (b.coupling_norm() != 0.0) throw InvalidParams("eigen_lowest: parity blocks are coupled");
    auto e = tridiagonal_lowest(b.even, std::min<int>(k, b.even.d.size()));
    auto o = tridiagonal_lowest(b.odd, std::min<int>(k, b.odd.d.size()));
    e.insert(e.end(), o.begin(), o.end());
    std::sort(e.begin(), e.end());
    e.resize(k);
    return e;
}

}  // namespace rsusy
