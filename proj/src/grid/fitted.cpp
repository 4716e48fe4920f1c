#include "rsusy/grid/fitted.hpp"

#include "rsusy/errors.hpp"
#include "rsusy/grid/eigen.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace rsusy {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kA = kPi / 8;
constexpr double kB = 3 * kPi / 8;

constexpr std::array<double, 10> kGx{-0.9739065285171717, -0.8650633666889845, -0.6794095682990244,
                                     -0.4333953941292472, -0.1488743389816312, 0.1488743389816312,
                                     0.4333953941292472,  0.6794095682990244,  0.8650633666889845,
                                     0.9739065285171717};
constexpr std::array<double, 10> kGw{0.0666713443086881, 0.1494513491505806, 0.2190863625159820,
                                     0.2692667193099963, 0.2955242247147529, 0.2955242247147529,
                                     0.2692667193099963, 0.2190863625159820, 0.1494513491505806,
                                     0.0666713443086881};

double smooth_step(double t) {
    if (t <= 0) return 0.0;
    if (t >= 1) return 1.0;
    return t * t * t * (10 - 15 * t + 6 * t * t);
}

double smooth_step_deriv(double t) {
    if (t <= 0 || t >= 1) return 0.0;
    return 30 * t * t * (1 - t) * (1 - t);
}

double theta(double x) { return kPi / 4 * smooth_step((x - kA) / (kB - kA)); }
double dtheta(double x) { return kPi / 4 * smooth_step_deriv((x - kA) / (kB - kA)) / (kB - kA); }

struct Frame {
    double alpha, beta;

    double U(double x) const { return -beta / (2 * std::cos(x)); }
    double V(double x) const { return -alpha / (2 * std::sin(x)); }
    double F(double x) const {
        const double t = 2 * theta(x);
        return V(x) * std::cos(t) - U(x) * std::sin(t);
    }
    double D(double x) const {
        const double t = 2 * theta(x);
        return U(x) * std::cos(t) + V(x) * std::sin(t);
    }
    // antiderivatives of V and U
    double IV(double x) const { return -alpha / 2 * std::log(std::tan(x / 2)); }
    double IU(double x) const { return beta / 2 * std::log(1 / std::cos(x) + std::tan(x)); }

    double gauss(double u, double v) const {
        const double xm = 0.5 * (u + v), hr = 0.5 * (v - u);
        double s = 0.0;
        for (std::size_t i = 0; i < kGx.size(); ++i) s += kGw[i] * F(xm + hr * kGx[i]);
        return hr * s;
    }

    // integral of F over [p, q], p < q
    double integral(double p, double q) const {
        double pts[4];
        int n = 0;
        pts[n++] = p;
        if (p < kA && kA < q) pts[n++] = kA;
        if (p < kB && kB < q) pts[n++] = kB;
        pts[n++] = q;
        double tot = 0.0;
        for (int i = 0; i + 1 < n; ++i) {
            const double u = pts[i], v = pts[i + 1];
            if (v <= kA)
                tot += IV(v) - IV(u);
            else if (u >= kB)
                tot += IU(v) - IU(u);
            else
                tot += gauss(u, v);
        }
        return tot;
    }
};

void check_N(int N) {
    if (N < 4 || N % 2 != 0) throw InvalidParams("fitted scheme: N must be even and >= 4");
}

}  // namespace

SymTridiagonal fitted_supercharge_matrix(const FittedDiracProblem& p, int N) {
    check_N(N);
    const int M = N / 2;
    const double h = (kPi / 2) / M;
    const double s = 1 / std::sqrt(2.0);
    const Frame fr{p.alpha, p.beta};
    SymTridiagonal t;
    t.d.resize(2 * M - 1);
    t.e.resize(2 * M - 2);
    auto xc = [h](int j) { return (j + 0.5) * h; };
    auto xn = [h](int j) { return j * h; };
    for (int j = 0; j < M; ++j) t.d[2 * j] = s * (fr.D(xc(j)) - dtheta(xc(j)));
    for (int j = 1; j < M; ++j) {
        t.d[2 * j - 1] = s * (-fr.D(xn(j)) - dtheta(xn(j)));
        t.e[2 * j - 2] = -s * std::exp(-fr.integral(xc(j - 1), xn(j))) / h;
        t.e[2 * j - 1] = s * std::exp(fr.integral(xn(j), xc(j))) / h;
    }
    for (double v : t.d)
        if (!std::isfinite(v)) throw SingularPotential("fitted supercharge: non-finite diagonal");
    for (double v : t.e)
        if (!std::isfinite(v)) throw SingularPotential("fitted supercharge: non-finite coupling");
    return t;
}

std::vector<double> fitted_supercharge_eigenvalues(const FittedDiracProblem& p, int N, int k) {
    return tridiagonal_nearest_zero(fitted_supercharge_matrix(p, N), k);
}

SymTridiagonal fitted_sector_matrix(const FittedSectorProblem& p, int N) {
    check_N(N);
    if (!p.potential) throw InvalidParams("fitted sector: potential missing");
    const int M = N / 2;
    const double h = (kPi / 2) / M;
    auto logG = [&](double x) { return p.s0 * std::log(std::sin(x)) + p.s1 * std::log(std::cos(x)); };
    // node rows r = 1..M-1: (Bu)_r = a_r u_r - b_r u_{r-1}
    std::vector<double> a(M, 0.0), b(M, 0.0);
    for (int r = 1; r < M; ++r) {
        const double ln = logG(r * h);
        a[r] = std::exp(ln - logG((r + 0.5) * h)) / h;
        b[r] = std::exp(ln - logG((r - 0.5) * h)) / h;
    }
    SymTridiagonal t;
    t.d.assign(M, 0.0);
    t.e.assign(M - 1, 0.0);
    for (int j = 0; j < M; ++j) {
        const double x = (j + 0.5) * h;
        const double sn = std::sin(x), cs = std::cos(x);
        const double sing = p.s0 * (p.s0 - 1) / (sn * sn) + p.s1 * (p.s1 - 1) / (cs * cs) -
                            (p.s0 + p.s1) * (p.s0 + p.s1);
        double bb = 0.0;
        if (j >= 1) bb += a[j] * a[j];
        if (j + 1 <= M - 1) bb += b[j + 1] * b[j + 1];
        const double w = p.potential(x);
        if (!std::isfinite(w)) throw SingularPotential("fitted sector: potential not finite");
        // kappa B^T B reproduces kappa (-d^2 + sing); the remainder W - kappa*sing is diagonal
        t.d[j] = p.kappa * bb + (w - p.kappa * sing);
        if (j + 1 < M) t.e[j] = -p.kappa * b[j + 1] * a[j + 1];
    }
    return t;
}

std::vector<double> fitted_sector_eigenvalues(const FittedSectorProblem& p, int N, int k) {
    return tridiagonal_lowest(fitted_sector_matrix(p, N), k);
}

}  // namespace rsusy
