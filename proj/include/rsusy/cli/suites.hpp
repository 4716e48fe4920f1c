#pragma once

#include "rsusy/errors.hpp"
#include "rsusy/grid/convergence.hpp"
#include "rsusy/report/family_report.hpp"
#include "rsusy/susyqm/scarf.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rsusy {

struct Check {
    std::string suite;
    std::string name;
    bool ok = false;
    std::string detail;

    bool operator==(const Check&) const = default;
};

struct SuiteResult {
    std::vector<Check> checks;
    std::vector<std::string> discrepancies;  // printed-formula findings, never failures
    std::vector<RelationRecord> relations;
    std::vector<SpectrumReport> spectra;

    bool ok() const;
    void merge(SuiteResult other);
};

// the five parameter pairs every suite sweeps
const std::vector<std::pair<Rational, Rational>>& standard_pairs();

SuiteResult suite_exact();
SuiteResult suite_jacobi(int D = 20);
SuiteResult suite_gegenbauer(int D = 20);
// gauged identities, grid relations and the N0 normalization; variant filters the relation records
SuiteResult suite_susyqm(int D = 12, std::optional<Variant> variant = std::nullopt);
SuiteResult suite_intertwiners(int D = 12, std::optional<Variant> variant = std::nullopt);
SuiteResult suite_oscillator();

// "all", "exact", "jacobi", "gegenbauer", "susyqm", "oscillator", "intertwiners"
SuiteResult run_suite(const std::string& name, int D, std::optional<Variant> variant);

}  // namespace rsusy
