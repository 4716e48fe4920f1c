#include "rsusy/opalg/construct.hpp"

#include "rsusy/errors.hpp"

namespace rsusy {

Poly monic_eigenpolynomial(const ReflOp& op, int n, const Rational& lambda) {
    return monic_eigenpolynomial(matrix_on_basis(op, n), n, lambda);
}

Poly monic_eigenpolynomial(const RatMatrix& A, int n, const Rational& lambda) {
    if (A.rows() <= n) throw InvalidParams("monic_eigenpolynomial: basis matrix too small");
    for (int j = 0; j <= n; ++j)
        for (int i = j + 1; i <= n; ++i)
            if (!A(i, j).is_zero()) throw InvalidParams("monic_eigenpolynomial: operator raises degree");
    if (A(n, n) != lambda)
        throw InvalidParams("monic_eigenpolynomial: lambda is not the degree-" + std::to_string(n) + " diagonal entry");
    std::vector<Rational> c(n + 1);
    c[n] = Rational(1);
    for (int i = n - 1; i >= 0; --i) {
        Rational s(0);
        for (int j = i + 1; j <= n; ++j)
            if (!A(i, j).is_zero() && !c[j].is_zero()) s += A(i, j) * c[j];
        Rational d = A(i, i) - lambda;
        if (d.is_zero()) {
            throw DegenerateSpectrum("eigenvalue " + lambda.str() + " at degree " + std::to_string(n) +
                                     " collides with degree " + std::to_string(i));
        }
        c[i] = -s / d;
    }
    return Poly(std::move(c));
}

Poly gram_monic(int n, const std::function<Rational(int)>& moment) {
    if (n == 0) return Poly(Rational(1));
    RatMatrix M(n, n);
    std::vector<Rational> rhs(n);
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) M(k, j) = moment(j + k);
        rhs[k] = -moment(n + k);
    }
    auto sol = solve_exact(M, rhs);
    if (!sol) throw DegenerateSpectrum("gram_monic: singular moment matrix at n=" + std::to_string(n));
    sol->push_back(Rational(1));
    return Poly(std::move(*sol));
}

Rational moment_inner(const Poly& p, const Poly& q, const std::function<Rational(int)>& moment) {
    Rational s(0);
    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) s += a[i] * b[j] * moment(static_cast<int>(i + j));
    }
    return s;
}

}  // namespace rsusy
