#include "doctest.h"

#include "rsusy/errors.hpp"
#include "rsusy/grid/convergence.hpp"
#include "rsusy/grid/eigen.hpp"
#include "rsusy/grid/fitted.hpp"
#include "rsusy/grid/grid.hpp"
#include "rsusy/grid/grid_operator.hpp"
#include "rsusy/grid/kernels.hpp"
#include "rsusy/grid/quadrature.hpp"
#include "rsusy/grid/stencil.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace rsusy;

namespace {

constexpr double kPi = std::numbers::pi;

Matrix random_symmetric(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> U(-1, 1);
    Matrix A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) A(i, j) = A(j, i) = U(rng);
    return A;
}

double scarf_scalar(double x, double a, double b) {
    const double s = std::sin(x), c = std::cos(x);
    return a * a / (8 * s * s) + (b / 4) * (b / 2 - s) / (c * c);
}
double scarf_refl(double x, double a) {
    const double s = std::sin(x);
    return -a * std::cos(x) / (4 * s * s);
}

}  // namespace

TEST_CASE("grid: nodes are mirror symmetric and avoid 0") {
    Grid g(64, kPi / 2);
    for (int i = 0; i < g.N(); ++i) {
        CHECK(g.x(g.mirror(i)) == -g.x(i));
        CHECK(g.x(i) != 0.0);
        CHECK(std::fabs(g.x(i)) < kPi / 2);
    }
    CHECK(g.h() == doctest::Approx(kPi / 64));
    CHECK_THROWS_AS(Grid(7, 1.0), InvalidParams);
}

TEST_CASE("kernels: serial and parallel agree bitwise") {
    Matrix A = random_symmetric(60, 1), B = random_symmetric(60, 2);
    std::vector<double> x(60);
    for (int i = 0; i < 60; ++i) x[i] = std::sin(i);
    CHECK(kernels::serial::matvec(A, x) == kernels::parallel::matvec(A, x));
    CHECK(kernels::serial::matmul(A, B).max_abs_diff(kernels::parallel::matmul(A, B)) == 0.0);
    auto t1 = kernels::serial::tridiagonalize(A), t2 = kernels::parallel::tridiagonalize(A);
    CHECK(t1.d == t2.d);
    CHECK(t1.e == t2.e);
}

TEST_CASE("kernels: tridiagonalization preserves spectrum invariants") {
    Matrix A = random_symmetric(40, 3);
    auto t = kernels::serial::tridiagonalize(A);
    double tr = 0, trt = 0, fro = 0, frot = 0;
    for (int i = 0; i < 40; ++i) {
        tr += A(i, i);
        trt += t.d[i];
        for (int j = 0; j < 40; ++j) fro += A(i, j) * A(i, j);
        frot += t.d[i] * t.d[i] + (i < 39 ? 2 * t.e[i] * t.e[i] : 0.0);
    }
    CHECK(trt == doctest::Approx(tr).epsilon(1e-12));
    CHECK(frot == doctest::Approx(fro).epsilon(1e-12));
}

TEST_CASE("eigen: spec examples") {
    Matrix D(3, 3);
    D(0, 0) = 1;
    D(1, 1) = 2;
    D(2, 2) = 3;
    auto e = symmetric_lowest(D, 2);
    REQUIRE(e.size() == 2);
    CHECK(e[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(e[1] == doctest::Approx(2.0).epsilon(1e-14));

    Matrix S(2, 2);
    S(0, 1) = S(1, 0) = 1;
    auto s = symmetric_eigenvalues(S);
    CHECK(s[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(s[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eigen: bisection matches known tridiagonal spectrum") {
    // -1 2 -1 Toeplitz: 2 - 2cos(k pi/(n+1))
    const int n = 50;
    SymTridiagonal t{std::vector<double>(n, 2.0), std::vector<double>(n - 1, -1.0)};
    auto ev = tridiagonal_lowest(t, 5);
    for (int k = 0; k < 5; ++k) CHECK(ev[k] == doctest::Approx(2 - 2 * std::cos((k + 1) * kPi / (n + 1))).epsilon(1e-13));
    CHECK(sturm_count(t, 0.0) == 0);
    CHECK(sturm_count(t, 4.0) == n);
    auto nz = tridiagonal_nearest_zero(SymTridiagonal{{-3, 1, 0.5, 2}, {0, 0, 0}}, 3);
    REQUIRE(nz.size() == 3);
    CHECK(nz[0] == doctest::Approx(0.5));
    CHECK(nz[1] == doctest::Approx(1.0));
    CHECK(nz[2] == doctest::Approx(2.0));
}

TEST_CASE("eigen: deterministic across runs") {
    Matrix A = random_symmetric(30, 9);
    CHECK(symmetric_eigenvalues(A) == symmetric_eigenvalues(A));
}

TEST_CASE("assemble: free particle in a box") {
    Grid g(512, kPi / 2);
    auto op = assemble([](double) { return 0.0; }, [](double) { return 0.0; }, g);
    CHECK(op.is_symmetric());
    auto e = eigen_lowest(op, 2);
    CHECK(e[0] == doctest::Approx(0.5).epsilon(1e-4));
    CHECK(e[1] == doctest::Approx(2.0).epsilon(1e-4));
}

TEST_CASE("assemble: singular potential is rejected") {
    Grid g(8, 1.0);
    CHECK_THROWS_AS(assemble([](double) { return std::nan(""); }, [](double) { return 0.0; }, g), SingularPotential);
}

TEST_CASE("oscillator with reflection: parity blocks") {
    Grid g(2000, 10.0);
    auto H = discretize([](double x) { return 0.5 * x * x; }, [](double) { return -0.5; }, g);
    auto b = parity_blocks(H);
    CHECK(b.coupling_norm() == 0.0);
    auto even = tridiagonal_lowest(b.even, 2), odd = tridiagonal_lowest(b.odd, 2);
    CHECK(std::fabs(even[0]) < 1e-4);
    CHECK(odd[0] == doctest::Approx(2.0).epsilon(1e-4));
    auto five = eigen_lowest(b, 5);
    std::vector<double> want{0, 2, 2, 4, 4};
    // raw second-order error at h = 0.01; extrapolation is tested elsewhere
    for (int i = 0; i < 5; ++i) CHECK(std::fabs(five[i] - want[i]) < 3e-4);
}

TEST_CASE("parity blocks: union equals full spectrum") {
    Grid g(80, kPi / 2);
    SUBCASE("Scarf alpha=0 beta=2") {
        auto op = assemble([](double x) { return scarf_scalar(x, 0, 2); }, [](double) { return 0.0; }, g);
        auto full = symmetric_eigenvalues(op.m);
        auto blocks = block_spectrum(parity_blocks(op));
        REQUIRE(full.size() == blocks.size());
        for (std::size_t i = 0; i < full.size(); ++i) CHECK(std::fabs(full[i] - blocks[i]) < 1e-10 * std::fmax(1.0, std::fabs(full[i])));
    }
    SUBCASE("Scarf alpha=1 beta=1/2 (coupled blocks)") {
        auto op = assemble([](double x) { return scarf_scalar(x, 1, 0.5); }, [](double x) { return scarf_refl(x, 1); }, g);
        auto pb = parity_blocks(op);
        CHECK(pb.coupling_norm() > 0.0);
        auto full = symmetric_eigenvalues(op.m);
        auto blocks = block_spectrum(pb);
        for (std::size_t i = 0; i < full.size(); ++i) CHECK(std::fabs(full[i] - blocks[i]) < 1e-10 * std::fmax(1.0, std::fabs(full[i])));
    }
    SUBCASE("zero reflection gives the standard even/odd reductions") {
        auto op = assemble([](double x) { return x * x; }, [](double) { return 0.0; }, g);
        auto pb = parity_blocks(op);
        CHECK(pb.coupling_norm() < 1e-10);
        const int M = g.N() / 2;
        CHECK(pb.even(0, 0) - pb.odd(0, 0) == doctest::Approx(2 * op.m(M, M - 1)));
    }
}

TEST_CASE("mirror symmetry: R H(a,b) R = H(a,-b)") {
    Grid g(128, kPi / 2);
    auto Hp = assemble([](double x) { return scarf_scalar(x, 1, 0.5); }, [](double x) { return scarf_refl(x, 1); }, g);
    auto Hm = assemble([](double x) { return scarf_scalar(x, 1, -0.5); }, [](double x) { return scarf_refl(x, 1); }, g);
    CHECK(mirror_residual(Hp.m, Hm.m) < 1e-12);
    Matrix R = reflection_matrix(g);
    auto lhs = kernels::serial::matmul(kernels::serial::matmul(R, Hp.m), R);
    CHECK(lhs.max_abs_diff(Hm.m) < 1e-12);
}

TEST_CASE("alpha=0 Scarf equals the scalar Scarf I matrix") {
    Grid g(256, kPi / 2);
    const double b = 1.5;
    auto H = assemble([&](double x) { return scarf_scalar(x, 0, b); }, [](double x) { return scarf_refl(x, 0); }, g);
    auto S = assemble([&](double x) { return (b / 4) * (b / 2 - std::sin(x)) / (std::cos(x) * std::cos(x)); },
                      [](double) { return 0.0; }, g);
    CHECK(H.m.max_abs_diff(S.m) < 1e-12);
}

TEST_CASE("stencil: derivative orders") {
    auto err = [](int N, int deriv, int acc) {
        Grid g(N, 3.0);
        std::vector<double> f(N);
        for (int i = 0; i < N; ++i) f[i] = std::exp(-g.x(i) * g.x(i));
        auto d = derivative(f, g.h(), deriv, acc);
        double m = 0;
        for (int i = 0; i < N; ++i) {
            const double x = g.x(i);
            const double ex = deriv == 1 ? -2 * x * f[i] : (4 * x * x - 2) * f[i];
            if (std::fabs(x) < 2.0) m = std::fmax(m, std::fabs(d[i] - ex));
        }
        return m;
    };
    for (int acc : {2, 4, 6})
        for (int deriv : {1, 2}) {
            const double p = std::log2(err(200, deriv, acc) / err(400, deriv, acc));
            CHECK(p == doctest::Approx(acc).epsilon(0.1));
        }
    CHECK_THROWS_AS(derivative({1.0, 2.0}, 0.1, 3, 2), InvalidParams);
}

TEST_CASE("DiffReflOp: apply equals to_matrix times vector") {
    Grid g(64, 2.0);
    DiffReflOp op;
    op.add([](double x) { return 1 + x; }, 1, false).add([](double x) { return x * x; }, 0, true).add([](double) { return -0.5; }, 2, true);
    std::vector<double> f(64);
    for (int i = 0; i < 64; ++i) f[i] = std::exp(-g.x(i)) * std::sin(3 * g.x(i));
    for (int acc : {2, 6}) {
        auto a = op.apply(g, f, acc);
        auto b = kernels::serial::matvec(op.to_matrix(g, acc).m, f);
        for (int i = 0; i < 64; ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12));
    }
}

TEST_CASE("Q*Q equals assembled H to O(h^2)") {
    // oscillator Q = (1/sqrt2)(d R + x); Q^2 = -1/2 d^2 + x^2/2 - 1/2 R
    auto residual = [](int N) {
        Grid g(N, 6.0);
        DiffReflOp Q;
        const double s = 1 / std::sqrt(2.0);
        Q.add([s](double) { return s; }, 1, true).add([s](double x) { return s * x; }, 0, false);
        Matrix q = Q.to_matrix(g, 2).m;
        Matrix qq = kernels::parallel::matmul(q, q);
        std::vector<double> f(N);
        for (int i = 0; i < N; ++i) f[i] = std::exp(-g.x(i) * g.x(i)) * (1 + g.x(i));
        auto lhs = kernels::serial::matvec(qq, f);
        DiffReflOp H;
        H.add([](double) { return -0.5; }, 2, false).add([](double x) { return 0.5 * x * x; }, 0, false).add([](double) { return -0.5; }, 0, true);
        auto rhs = H.apply(g, f, 6);
        double m = 0;
        for (int i = 0; i < N; ++i) m = std::fmax(m, std::fabs(lhs[i] - rhs[i]));
        return m;
    };
    const double r1 = residual(200), r2 = residual(400);
    CHECK(r2 < r1);
    CHECK(std::log2(r1 / r2) >= 1.7);
}

TEST_CASE("quadrature examples") {
    Grid g(256, kPi / 2);
    CHECK(quadrature([](double x) { return std::cos(x) * std::cos(x); }, g) == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK(std::fabs(tanh_sinh([](double x) { return 1 / std::sqrt(x); }, 0, 1) - 2) < 1e-10);
    CHECK(std::fabs(tanh_sinh([](double x) { return std::sqrt(1 - x * x); }, -1, 1) - kPi / 2) < 1e-12);
}

TEST_CASE("fitted Scarf supercharge: spectrum") {
    for (auto [a, b] : {std::pair{0.0, 2.0}, std::pair{1.0, 3.0}}) {
        FittedDiracProblem p{a, b};
        auto t = fitted_supercharge_matrix(p, 512);
        CHECK(t.d.size() == 511);
        auto q = fitted_supercharge_eigenvalues(p, 2048, 3);
        for (int n = 0; n < 3; ++n) {
            const double s = 2 * n + a + b + 1;
            CHECK(q[n] * q[n] == doctest::Approx(s * s / 8).epsilon(1e-4));
            // sign pattern of Eq. (417): negative for even n
            CHECK((q[n] < 0) == (n % 2 == 0));
        }
    }
}

TEST_CASE("fitted Gegenbauer sector: exact ground state") {
    const double mu = 0.5, al = 1.0;
    const double s0 = mu, s1 = al + 0.5;
    // W equal to the singular part: H is exactly B^T B with kernel G
    auto sing = [=](double x) {
        const double sn = std::sin(x), c = std::cos(x);
        return s0 * (s0 - 1) / (sn * sn) + s1 * (s1 - 1) / (c * c) - (s0 + s1) * (s0 + s1);
    };
    FittedSectorProblem even{s0, s1, 1.0, sing};
    auto e = fitted_sector_eigenvalues(even, 512, 2);
    CHECK(std::fabs(e[0]) < 1e-8);
    CHECK(e[1] > 1.0);
}

TEST_CASE("convergence study: synthetic problems") {
    SpectralProblem quad{"synthetic", {}, [](int N, int k) {
                             std::vector<double> v;
                             for (int n = 0; n < k; ++n) v.push_back(n + 1 + 3.0 / (double(N) * N));
                             return v;
                         },
                         [](int n) { return n + 1.0; }};
    auto r = convergence_study(quad, {64, 128, 256}, 2);
    REQUIRE(r.levels.size() == 2);
    CHECK(r.levels[0].method == Extrapolation::richardson);
    CHECK(*r.levels[0].order == doctest::Approx(2.0));
    CHECK(r.levels[0].abs_error < 1e-12);
    CHECK(r.passes(1e-10));

    SpectralProblem slow{"slow", {}, [](int N, int) { return std::vector<double>{1 + 1 / std::pow(N, 1.5)}; },
                         [](int) { return 1.0; }};
    auto s = convergence_study(slow, {64, 128, 256}, 1);
    CHECK(s.levels[0].method == Extrapolation::estimated_order);
    CHECK(s.levels[0].abs_error < 1e-12);

    SpectralProblem flat{"flat", {}, [](int, int) { return std::vector<double>{0.25}; }, [](int) { return 0.25; }};
    auto f = convergence_study(flat, {8, 16, 32}, 1);
    CHECK(f.levels[0].method == Extrapolation::exact);
    CHECK(!f.levels[0].order);

    SpectralProblem bad{"bad", {}, [](int N, int) { return std::vector<double>{1 + (N % 3) * 0.1}; },
                        [](int) { return 1.0; }};
    auto b = convergence_study(bad, {16, 32, 64}, 1);
    CHECK(b.levels[0].non_convergent);
    CHECK(!b.passes(1.0));

    CHECK_THROWS_AS(convergence_study(flat, {8, 16}, 1), InvalidParams);
    CHECK_THROWS_AS(convergence_study(flat, {16, 8, 32}, 1), InvalidParams);
}
