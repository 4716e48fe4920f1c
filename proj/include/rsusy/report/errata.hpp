#pragma once

#include <string>
#include <vector>

namespace rsusy {

struct ErrataEntry {
    std::string id;
    std::string equation_label;
    std::string printed;
    std::string oracle;
    std::string evidence;
    std::string verdict;  // "discrepancy" or "consistent"

    bool operator==(const ErrataEntry&) const = default;
};

// every suspected typo with its printed form, the oracle form and computed evidence
std::vector<ErrataEntry> build_errata();

}  // namespace rsusy
