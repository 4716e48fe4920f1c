#include "rsusy/grid/stencil.hpp"

#include "rsusy/errors.hpp"

#include <algorithm>

namespace rsusy {

namespace {

// one-sided half of the symmetric weights; w[0] is the centre
const std::vector<double>& weights(int deriv, int accuracy) {
    static const std::vector<double> d1_2{0.0, 0.5};
    static const std::vector<double> d1_4{0.0, 2.0 / 3, -1.0 / 12};
    static const std::vector<double> d1_6{0.0, 0.75, -0.15, 1.0 / 60};
    static const std::vector<double> d2_2{-2.0, 1.0};
    static const std::vector<double> d2_4{-2.5, 4.0 / 3, -1.0 / 12};
    static const std::vector<double> d2_6{-49.0 / 18, 1.5, -0.15, 1.0 / 90};
    if (deriv == 1) {
        if (accuracy == 2) return d1_2;
        if (accuracy == 4) return d1_4;
        if (accuracy == 6) return d1_6;
    } else if (deriv == 2) {
        if (accuracy == 2) return d2_2;
        if (accuracy == 4) return d2_4;
        if (accuracy == 6) return d2_6;
    }
    throw InvalidParams("derivative: unsupported order/accuracy");
}

// stencil entry for offset k (antisymmetric for first derivatives)
double entry(const std::vector<double>& w, int deriv, int k) {
    int a = k < 0 ? -k : k;
    if (a >= static_cast<int>(w.size())) return 0.0;
    if (deriv == 1 && k < 0) return -w[a];
    return w[a];
}

}  // namespace

std::vector<double> derivative(const std::vector<double>& f, double h, int deriv, int accuracy) {
    const int n = static_cast<int>(f.size());
    if (deriv == 0) return f;
    const auto& w = weights(deriv, accuracy);
    const int r = static_cast<int>(w.size()) - 1;
    const double scale = deriv == 1 ? 1.0 / h : 1.0 / (h * h);
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int k = -r; k <= r; ++k) {
            int j = i + k;
            if (j < 0 || j >= n) continue;
            s += entry(w, deriv, k) * f[j];
        }
        out[i] = s * scale;
    }
    return out;
}

DiffReflOp& DiffReflOp::add(RealFn coef, int deriv, bool reflect) {
    if (deriv < 0 || deriv > 2) throw InvalidParams("DiffReflOp: derivative order must be 0, 1 or 2");
    terms_.push_back({std::move(coef), deriv, reflect});
    return *this;
}

std::vector<double> DiffReflOp::apply(const Grid& g, const std::vector<double>& f, int accuracy) const {
    const int N = g.N();
    if (static_cast<int>(f.size()) != N) throw InvalidParams("DiffReflOp::apply: size mismatch");
    std::vector<double> rf(f.rbegin(), f.rend());
    std::vector<double> out(N, 0.0);
    for (const auto& t : terms_) {
        std::vector<double> d = derivative(t.reflect ? rf : f, g.h(), t.deriv, accuracy);
        for (int i = 0; i < N; ++i) out[i] += t.coef(g.x(i)) * d[i];
    }
    return out;
}

GridOperator DiffReflOp::to_matrix(const Grid& g, int accuracy) const {
    const int N = g.N();
    GridOperator op{g, Matrix(N, N)};
    for (const auto& t : terms_) {
        std::vector<double> w{1.0};
        int r = 0;
        double scale = 1.0;
        if (t.deriv > 0) {
            w = weights(t.deriv, accuracy);
            r = static_cast<int>(w.size()) - 1;
            scale = t.deriv == 1 ? 1.0 / g.h() : 1.0 / (g.h() * g.h());
        }
        for (int i = 0; i < N; ++i) {
            const double c = t.coef(g.x(i)) * scale;
            for (int k = -r; k <= r; ++k) {
                int j = i + k;
                if (j < 0 || j >= N) continue;
                double wk = t.deriv > 0 ? entry(w, t.deriv, k) : 1.0;
                // (R f)_j = f_{N-1-j}
                op.m(i, t.reflect ? N - 1 - j : j) += c * wk;
            }
        }
    }
    return op;
}

}  // namespace rsusy
