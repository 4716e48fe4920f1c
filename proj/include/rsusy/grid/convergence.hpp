#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rsusy {

struct SpectralProblem {
    std::string system;
    std::map<std::string, std::string> params;
    // k eigenvalues at resolution N, in level order
    std::function<std::vector<double>(int N, int k)> eigenvalues;
    std::function<double(int level)> target;
};

enum class Extrapolation { exact, richardson, estimated_order, none };
std::string to_string(Extrapolation e);

struct LevelRecord {
    int level = 0;
    std::vector<double> values;      // one per grid
    std::vector<double> raw_errors;  // |value - target| per grid
    double extrapolated = 0.0;
    double target = 0.0;
    double abs_error = 0.0;
    std::optional<double> order;
    Extrapolation method = Extrapolation::none;
    bool non_convergent = false;

    bool operator==(const LevelRecord&) const = default;
};

struct SpectrumReport {
    std::string system;
    std::map<std::string, std::string> params;
    std::vector<int> grids;
    std::vector<LevelRecord> levels;

    // every level converged and within tol of its target
    bool passes(double tol) const;
    bool operator==(const SpectrumReport&) const = default;
};

struct ConvergenceOptions {
    // level differences below this (times max(1,|E|)) are treated as roundoff
    double roundoff = 1e-8;
};

// Extrapolates from the last three grids. Estimated order in [1.7, 2.3]:
// Richardson with p = 2; in [1, 3]: Aitken with the estimated order;
// otherwise the level is flagged non-convergent.
SpectrumReport convergence_study(const SpectralProblem& problem, const std::vector<int>& N_list, int k,
                                 const ConvergenceOptions& opt = {});

}  // namespace rsusy
