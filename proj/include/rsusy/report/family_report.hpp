#pragma once

#include "rsusy/exact/rational.hpp"
#include "rsusy/opalg/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rsusy {

struct FamilyRecord {
    int n = 0;
    Rational eigenvalue;
    Poly poly;                  // oracle polynomial (empty when degenerate)
    bool degenerate = false;
    bool residual_zero = false; // op P - lambda P == 0
    bool gram_agrees = false;   // eigen oracle == Gram oracle
    Rational norm_sq;           // inner(P,P)
    std::optional<bool> norm_match;          // vs closed form, when the family has one
    std::optional<bool> explicit_printed_match;
    std::optional<bool> explicit_corrected_match;

    friend bool operator==(const FamilyRecord&, const FamilyRecord&) = default;
};

struct FamilyReport {
    std::string kind;  // "jacobi-m1" or "gegenbauer"
    std::map<std::string, Rational> params;
    int degree = 0;
    std::vector<FamilyRecord> records;
    std::vector<std::string> orthogonality_violations;
    std::vector<std::string> norm_mismatches;
    std::vector<std::string> oracle_failures;          // anything an oracle rejects
    std::vector<std::string> explicit_discrepancies;   // printed-formula findings

    bool oracle_ok() const {
        return orthogonality_violations.empty() && norm_mismatches.empty() && oracle_failures.empty();
    }

    friend bool operator==(const FamilyReport&, const FamilyReport&) = default;
};

}  // namespace rsusy
