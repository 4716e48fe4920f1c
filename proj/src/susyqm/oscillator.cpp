#include "rsusy/susyqm/oscillator.hpp"

#include "rsusy/exact/hypergeometric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rsusy {

FockVector FockVector::basis(int n) {
    if (n < 0) throw InvalidParams("FockVector: negative number state");
    FockVector v;
    v.c.assign(n + 1, 0.0);
    v.c[n] = 1.0;
    return v;
}

double FockVector::norm() const {
    double s = 0.0;
    for (double x : c) s += x * x;
    return std::sqrt(s);
}

FockVector& FockVector::operator+=(const FockVector& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), 0.0);
    for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    return *this;
}

FockVector& FockVector::operator*=(double s) {
    for (double& x : c) x *= s;
    return *this;
}

FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
FockVector operator-(FockVector a, const FockVector& b) { return a += -1.0 * b; }
FockVector operator*(double s, FockVector a) { return a *= s; }

double max_abs_diff(const FockVector& a, const FockVector& b) {
    const int n = static_cast<int>(std::max(a.c.size(), b.c.size()));
    double m = 0.0;
    for (int i = 0; i < n; ++i) m = std::fmax(m, std::fabs(a[i] - b[i]));
    return m;
}

FockVector osc_a(const FockVector& v) {
    FockVector r;
    r.c.assign(v.c.empty() ? 0 : v.c.size() - 1, 0.0);
    for (std::size_t n = 1; n < v.c.size(); ++n) r.c[n - 1] = std::sqrt(double(n)) * v.c[n];
    return r;
}

FockVector osc_adag(const FockVector& v) {
    FockVector r;
    r.c.assign(v.c.size() + 1, 0.0);
    for (std::size_t n = 0; n < v.c.size(); ++n) r.c[n + 1] = std::sqrt(double(n + 1)) * v.c[n];
    return r;
}

FockVector osc_R(const FockVector& v) {
    FockVector r = v;
    for (std::size_t n = 1; n < r.c.size(); n += 2) r.c[n] = -r.c[n];
    return r;
}

FockVector osc_q_apply(const FockVector& v) {
    const FockVector rv = osc_R(v);
    return 0.5 * (osc_a(rv) - osc_adag(rv) + osc_a(v) + osc_adag(v));
}

FockVector osc_h_apply(const FockVector& v) {
    return osc_adag(osc_a(v)) + 0.5 * (v - osc_R(v));
}

int osc_energy(int n) {
    if (n < 0) throw InvalidParams("osc_energy: n must be >= 0");
    return n + (n % 2);
}

FockVector osc_mixed_state(int n, int eps) {
    if (n < 0) throw InvalidParams("osc_mixed_state: n must be >= 0");
    if (eps != 1 && eps != -1) throw InvalidParams("osc_mixed_state: eps must be +1 or -1");
    FockVector v;
    v.c.assign(2 * n + 3, 0.0);
    v.c[2 * n + 1] = 0.5;
    v.c[2 * n + 2] = 0.5 * eps;
    return v;
}

double hermite_function(int n, double x) {
    double p0 = std::exp(-0.5 * x * x) / std::pow(std::numbers::pi, 0.25);
    if (n == 0) return p0;
    double p1 = std::sqrt(2.0) * x * p0;
    for (int k = 1; k < n; ++k) {
        const double p2 = std::sqrt(2.0 / (k + 1)) * x * p1 - std::sqrt(double(k) / (k + 1)) * p0;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double laguerre(int n, double a, double x) {
    double l0 = 1.0;
    if (n == 0) return l0;
    double l1 = 1 + a - x;
    for (int k = 1; k < n; ++k) {
        const double l2 = ((2 * k + 1 + a - x) * l1 - (k + a) * l0) / (k + 1);
        l0 = l1;
        l1 = l2;
    }
    return l1;
}

double osc_hermite_superposition(int n, int eps, double x) {
    return 0.5 * (hermite_function(2 * n + 1, x) + eps * hermite_function(2 * n + 2, x));
}

double osc_wavefunction(int n, int eps, double x, Variant v) {
    if (n < 0) throw InvalidParams("osc_wavefunction: n must be >= 0");
    if (eps != 1 && eps != -1) throw InvalidParams("osc_wavefunction: eps must be +1 or -1");
    // n!/(n+1)_{n+1} = n! n! / (2n+1)!
    const double ratio = (factorial(n) * factorial(n) / factorial(2 * n + 1)).to_double();
    const double pre = (n % 2 ? -1.0 : 1.0) / std::pow(std::numbers::pi, 0.25) * std::sqrt(ratio) *
                       std::exp(-0.5 * x * x);
    const double x2 = x * x;
    const double second = v == Variant::printed ? eps * (n + 1.0) : -eps * std::sqrt(n + 1.0);
    return pre * (x * laguerre(n, 0.5, x2) + second * laguerre(n + 1, -0.5, x2));
}

double osc_wavefunction_constant(int n) { return std::sqrt(2.0) / std::ldexp(1.0, n); }

}  // namespace rsusy
