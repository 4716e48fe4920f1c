#include "rsusy/susyqm/potential.hpp"

#include <cmath>

namespace rsusy {

HParts generic_H_parts(const SusyPotential& p) {
    auto U = p.U, V = p.V, dU = p.dU, dV = p.dV;
    return {[=](double x) {
                const double u = U(x), v = V(x);
                return 0.5 * (u * u + v * v) + 0.5 * dU(x);
            },
            [=](double x) { return -0.5 * dV(x); }};
}

double parity_defect(const SusyPotential& p, const Grid& g) {
    double m = 0.0;
    for (double x : g.nodes()) {
        m = std::fmax(m, std::fabs(p.U(-x) - p.U(x)));
        m = std::fmax(m, std::fabs(p.V(-x) + p.V(x)));
    }
    return m;
}

SusyPotential oscillator_potential() {
    return {[](double) { return 0.0; }, [](double x) { return x; }, [](double) { return 0.0; },
            [](double) { return 1.0; }, {}};
}

SusyPotential scarf_potential(double alpha, double beta) {
    return {[beta](double x) { return -beta / (2 * std::cos(x)); },
            [alpha](double x) { return -alpha / (2 * std::sin(x)); },
            [beta](double x) { return -beta * std::sin(x) / (2 * std::cos(x) * std::cos(x)); },
            [alpha](double x) { return alpha * std::cos(x) / (2 * std::sin(x) * std::sin(x)); },
            {{"alpha", alpha}, {"beta", beta}}};
}

}  // namespace rsusy
