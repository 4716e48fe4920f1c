#include "rsusy/opalg/ratmatrix.hpp"

#include "rsusy/errors.hpp"

namespace rsusy {

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw InvalidParams("RatMatrix product: shape mismatch");
    RatMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

std::optional<std::vector<Rational>> solve_exact(RatMatrix A, std::vector<Rational> b) {
    const int m = A.rows(), n = A.cols();
    if (static_cast<int>(b.size()) != m) throw InvalidParams("solve_exact: rhs size mismatch");
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int p = row;
        while (p < m && A(p, col).is_zero()) ++p;
        if (p == m) continue;
        if (p != row) {
            for (int j = 0; j < n; ++j) std::swap(A(p, j), A(row, j));
            std::swap(b[p], b[row]);
        }
        Rational inv = Rational(1) / A(row, col);
        for (int j = col; j < n; ++j) A(row, j) *= inv;
        b[row] *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == row || A(i, col).is_zero()) continue;
            Rational f = A(i, col);
            for (int j = col; j < n; ++j) A(i, j) -= f * A(row, j);
            b[i] -= f * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int i = row; i < m; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    if (row < n) throw InvalidParams("solve_exact: solution not unique");
    std::vector<Rational> x(n);
    for (int i = 0; i < row; ++i) x[pivot_col[i]] = b[i];
    return x;
}

}  // namespace rsusy
