#include "rsusy/susyqm/spectra.hpp"

#include "rsusy/grid/eigen.hpp"
#include "rsusy/grid/fitted.hpp"
#include "rsusy/susyqm/oscillator.hpp"

#include <algorithm>
#include <numbers>

namespace rsusy {

SpectralProblem scarf_spectral_problem(const ScarfParams& p) {
    p.validate_grid();
    const FittedDiracProblem fp{p.a(), p.b()};
    return {"scarf",
            {{"alpha", p.alpha.str()}, {"beta", p.beta.str()}},
            [fp](int N, int k) {
                auto q = fitted_supercharge_eigenvalues(fp, N, k);
                for (double& v : q) v *= v;
                return q;
            },
            [p](int n) { return scarf_energy(n, p).to_double(); }};
}

SpectralProblem oscillator_spectral_problem(double L) {
    return {"oscillator",
            {{"L", std::to_string(L)}},
            [L](int N, int k) {
                Grid g(N, L);
                auto H = discretize([](double x) { return 0.5 * x * x; }, [](double) { return -0.5; }, g);
                return eigen_lowest(parity_blocks(H), k);
            },
            [](int n) { return double(osc_energy(n)); }};
}

SpectralProblem gegenbauer_spectral_problem(const GegParams& p, Variant v) {
    p.validate();
    const double mu = p.mu.to_double(), a = p.alpha.to_double();
    return {"gegenbauer",
            {{"mu", p.mu.str()}, {"alpha", p.alpha.str()}, {"variant", to_string(v)}},
            [=](int N, int k) {
                // even states: R psi = psi; odd states: R psi = -psi
                FittedSectorProblem even{mu, a + 0.5, 1.0, [=](double x) {
                                             auto u = geg_potentials(p, x, v);
                                             return u.U0 + u.U1;
                                         }};
                FittedSectorProblem odd{mu + 1, a + 0.5, 1.0, [=](double x) {
                                            auto u = geg_potentials(p, x, v);
                                            return u.U0 - u.U1;
                                        }};
                auto e = fitted_sector_eigenvalues(even, N, k);
                auto o = fitted_sector_eigenvalues(odd, N, k);
                e.insert(e.end(), o.begin(), o.end());
                std::sort(e.begin(), e.end());
                e.resize(k);
                return e;
            },
            [p](int n) { return (-eigenvalue_geg(n, p)).to_double(); }};
}

SpectralProblem free_particle_problem() {
    return {"free",
            {},
            [](int N, int k) {
                Grid g(N, std::numbers::pi / 2);
                auto H = discretize([](double) { return 0.0; }, [](double) { return 0.0; }, g);
                return eigen_lowest(parity_blocks(H), k);
            },
            [](int n) { return 0.5 * (n + 1) * (n + 1); }};
}

}  // namespace rsusy
