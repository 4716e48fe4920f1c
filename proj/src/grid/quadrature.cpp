#include "rsusy/grid/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace rsusy {

double midpoint(const RealFn& f, const Grid& g) {
    double s = 0.0;
    for (double x : g.nodes()) s += f(x);
    return s * g.h();
}

double quadrature(const RealFn& f, const Grid& g) {
    const double m1 = midpoint(f, g);
    const double m2 = midpoint(f, Grid(2 * g.N(), g.b()));
    const double m4 = midpoint(f, Grid(4 * g.N(), g.b()));
    const double r1 = (4 * m2 - m1) / 3;
    const double r2 = (4 * m4 - m2) / 3;
    return (16 * r2 - r1) / 15;
}

double tanh_sinh(const RealFn& f, double a, double b, double tol) {
    const double r = 0.5 * (b - a);
    const double hp = 0.5 * std::numbers::pi;
    auto term = [&](double t) {
        const double u = hp * std::sinh(t);
        const double ch = std::cosh(u);
        const double w = hp * std::cosh(t) / (ch * ch);
        // distance from the nearer endpoint, computed without cancellation
        const double d = r / (std::exp(2 * std::fabs(u)) + 1) * 2;
        if (d <= 0.0 || w == 0.0) return 0.0;
        const double x = t < 0 ? a + d : b - d;
        if (!(x > a && x < b)) return 0.0;
        return w * f(x);
    };
    double h = 1.0;
    double sum = term(0.0);
    for (int k = 1; k <= 6 / h; ++k) sum += term(k * h) + term(-k * h);
    double prev = sum * h * r;
    for (int level = 0; level < 12; ++level) {
        h *= 0.5;
        for (int k = 1; k * h <= 6.0; k += 2) sum += term(k * h) + term(-k * h);
        const double cur = sum * h * r;
        if (level >= 2 && std::fabs(cur - prev) <= tol * std::fmax(1.0, std::fabs(cur))) return cur;
        prev = cur;
    }
    return prev;
}

}  // namespace rsusy
