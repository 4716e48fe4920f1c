#include "rsusy/grid/convergence.hpp"

#include "rsusy/errors.hpp"

#include <algorithm>
#include <cmath>

namespace rsusy {

std::string to_string(Extrapolation e) {
    switch (e) {
        case Extrapolation::exact: return "exact";
        case Extrapolation::richardson: return "richardson";
        case Extrapolation::estimated_order: return "estimated_order";
        case Extrapolation::none: return "none";
    }
    return "none";
}

bool SpectrumReport::passes(double tol) const {
    return std::all_of(levels.begin(), levels.end(),
                       [tol](const LevelRecord& l) { return !l.non_convergent && l.abs_error <= tol; });
}

SpectrumReport convergence_study(const SpectralProblem& problem, const std::vector<int>& N_list, int k,
                                 const ConvergenceOptions& opt) {
    if (N_list.size() < 3) throw InvalidParams("convergence_study: need at least three grids");
    if (!std::is_sorted(N_list.begin(), N_list.end()) ||
        std::adjacent_find(N_list.begin(), N_list.end()) != N_list.end())
        throw InvalidParams("convergence_study: grid sizes must be strictly ascending");
    if (k < 1) throw InvalidParams("convergence_study: k must be positive");

    SpectrumReport rep{problem.system, problem.params, N_list, {}};
    std::vector<std::vector<double>> per_grid;
    for (int N : N_list) {
        auto ev = problem.eigenvalues(N, k);
        if (static_cast<int>(ev.size()) < k) throw InvalidParams("convergence_study: too few eigenvalues");
        per_grid.push_back(std::move(ev));
    }

    const std::size_t G = N_list.size();
    for (int n = 0; n < k; ++n) {
        LevelRecord L;
        L.level = n;
        L.target = problem.target(n);
        for (std::size_t g = 0; g < G; ++g) {
            L.values.push_back(per_grid[g][n]);
            L.raw_errors.push_back(std::fabs(per_grid[g][n] - L.target));
        }
        const double e0 = L.values[G - 3], e1 = L.values[G - 2], e2 = L.values[G - 1];
        const double d1 = e1 - e0, d2 = e2 - e1;
        const double floor = opt.roundoff * std::fmax(1.0, std::fabs(e2));
        if (std::fabs(d2) <= floor) {
            L.method = Extrapolation::exact;
            L.extrapolated = e2;
        } else if (d1 / d2 > 0) {
            // assumes the grids double; otherwise the ratio of spacings enters
            const double ratio = static_cast<double>(N_list[G - 1]) / N_list[G - 2];
            const double p = std::log(d1 / d2) / std::log(ratio);
            L.order = p;
            if (p >= 1.7 && p <= 2.3) {
                const double r2 = ratio * ratio;
                L.method = Extrapolation::richardson;
                L.extrapolated = (r2 * e2 - e1) / (r2 - 1);
            } else if (p >= 1.0 && p <= 3.0) {
                L.method = Extrapolation::estimated_order;
                L.extrapolated = e2 - d2 * d2 / (d2 - d1);
            } else {
                L.non_convergent = true;
                L.extrapolated = e2;
            }
        } else {
            L.non_convergent = true;
            L.extrapolated = e2;
        }
        L.abs_error = std::fabs(L.extrapolated - L.target);
        rep.levels.push_back(std::move(L));
    }
    return rep;
}

}  // namespace rsusy
