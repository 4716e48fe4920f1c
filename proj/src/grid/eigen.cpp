#include "rsusy/grid/eigen.hpp"

#include "rsusy/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rsusy {

namespace {

void gershgorin(const SymTridiagonal& t, double& lo, double& hi) {
    const int n = static_cast<int>(t.d.size());
    lo = std::numeric_limits<double>::infinity();
    hi = -lo;
    for (int i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::fabs(t.e[i - 1]);
        if (i + 1 < n) r += std::fabs(t.e[i]);
        lo = std::min(lo, t.d[i] - r);
        hi = std::max(hi, t.d[i] + r);
    }
    double pad = 1e-14 * std::max({1.0, std::fabs(lo), std::fabs(hi)});
    lo -= pad;
    hi += pad;
}

}  // namespace

int sturm_count(const SymTridiagonal& t, double x) {
    const int n = static_cast<int>(t.d.size());
    const double tiny = std::numeric_limits<double>::min();
    int count = 0;
    double q = t.d.empty() ? 0.0 : t.d[0] - x;
    for (int i = 0; i < n; ++i) {
        if (i > 0) q = t.d[i] - x - t.e[i - 1] * t.e[i - 1] / q;
        if (q == 0.0) q = -tiny;
        if (q < 0) ++count;
    }
    return count;
}

double tridiagonal_eigenvalue(const SymTridiagonal& t, int k) {
    const int n = static_cast<int>(t.d.size());
    if (k < 0 || k >= n) throw InvalidParams("tridiagonal_eigenvalue: index out of range");
    double lo, hi;
    gershgorin(t, lo, hi);
    const double eps = std::numeric_limits<double>::epsilon();
    const double scale = std::max(std::fabs(lo), std::fabs(hi));
    // relative precision, with an absolute floor tied to the matrix scale
    const double floor_tol = 2 * eps * std::max(scale, std::numeric_limits<double>::min());
    const int cap = 200;
    for (int it = 0; it < cap; ++it) {
        double mid = 0.5 * (lo + hi);
        if (hi - lo <= std::max(2 * eps * std::max(std::fabs(lo), std::fabs(hi)), floor_tol) || mid <= lo || mid >= hi)
            return mid;
        if (sturm_count(t, mid) > k)
            hi = mid;
        else
            lo = mid;
    }
    throw ConvergenceFailure("bisection did not converge for eigenvalue " + std::to_string(k) + ", bracket [" +
                                 std::to_string(lo) + ", " + std::to_string(hi) + "]",
                             cap);
}

std::vector<double> tridiagonal_lowest(const SymTridiagonal& t, int k) {
    const int n = static_cast<int>(t.d.size());
    if (k > n) throw InvalidParams("tridiagonal_lowest: k exceeds matrix size");
    std::vector<double> out(k);
    for (int i = 0; i < k; ++i) out[i] = tridiagonal_eigenvalue(t, i);
    return out;
}

std::vector<double> tridiagonal_nearest_zero(const SymTridiagonal& t, int k) {
    const int n = static_cast<int>(t.d.size());
    if (k > n) throw InvalidParams("tridiagonal_nearest_zero: k exceeds matrix size");
    const int neg = sturm_count(t, 0.0);
    std::vector<double> cand;
    for (int i = std::max(0, neg - k); i < std::min(n, neg + k); ++i) cand.push_back(tridiagonal_eigenvalue(t, i));
    std::stable_sort(cand.begin(), cand.end(), [](double a, double b) { return std::fabs(a) < std::fabs(b); });
    cand.resize(k);
    return cand;
}

std::vector<double> symmetric_lowest(const Matrix& A, int k) {
    return tridiagonal_lowest(kernels::parallel::tridiagonalize(A), k);
}

std::vector<double> symmetric_eigenvalues(const Matrix& A) {
    return tridiagonal_lowest(kernels::parallel::tridiagonalize(A), A.rows());
}

}  // namespace rsusy
