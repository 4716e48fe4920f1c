#pragma once

#include "rsusy/exact/rational.hpp"
#include "rsusy/grid/grid.hpp"
#include "rsusy/grid/stencil.hpp"
#include "rsusy/jacobi/little_jacobi.hpp"
#include "rsusy/opalg/reflop.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rsusy {

struct ScarfParams {
    Rational alpha;
    Rational beta;

    double a() const { return alpha.to_double(); }
    double b() const { return beta.to_double(); }
    bool valid() const { return alpha > Rational(-1) && beta > Rational(-1); }
    void validate() const;
    void validate_grid() const;  // additionally alpha >= 0
    Jacobi1Params jacobi() const { return {alpha, beta}; }
};

// 2 sqrt2 Q~ = 2(1-y) d/dy R - alpha (1/y)(1-R) - (alpha+beta+1) R
ReflOp gauged_supercharge(const ScarfParams& p);
// eigenvalue of 2 sqrt2 Q~ on P_n: -(2n+a+b+1) for even n, +(2n+a+b+1) for odd n
Rational supercharge_eigenvalue(int n, const ScarfParams& p);
Rational scarf_energy(int n, const ScarfParams& p);

// N_0^2 three ways
struct N0Values {
    double oracle;      // 1/B((a+1)/2, (b+1)/2)
    double main_text;   // Gamma(a/2+b/2+1)/(Gamma(a/2+1) Gamma(b/2+1))
    double appendix;    // Gamma(a/2+b/2+1/2)/(Gamma(a/2+1/2) Gamma(b/2+1/2))
};
N0Values n0_squared(double alpha, double beta);

double ground_state(double x, const ScarfParams& p);
double wavefunction(int n, const ScarfParams& p, double x);

// Analytic operators for grid application
DiffReflOp scarf_Q(double alpha, double beta);
DiffReflOp scarf_H(double alpha, double beta);
DiffReflOp intertwiner_X(double alpha, double c);  // d + c tan - sec/2 - (a/2)(1+csc) R
DiffReflOp intertwiner_Y(double alpha, double c);  // -d + c tan - sec/2 - (a/2)(1-csc) R

// tan coefficient of X_{alpha,beta} and Y_{alpha,beta}
double x_tan_coefficient(double beta, Variant v);  // printed beta/2, corrected (beta+1)/2
double y_tan_coefficient(double beta, Variant v);  // printed beta/2, corrected (beta-1)/2

// (X_c Psi_0)(x) evaluated with the analytic derivative of Psi_0
double x_on_ground_state(const ScarfParams& p, double c, double x);

// Gauged intertwiners in y = sin x. X is returned multiplied by (1-y^2),
// since for c != (b+1)/2 the gauged X has a y/(1-y^2) term:
// (1-y^2) X~_c = (1-y^2) T_{a/2} + (c - (b+1)/2) y
ReflOp gauged_x_cleared(const ScarfParams& p, const Rational& c);
// Y~_c = -(1-y^2)d - (a/2)(1/y)(1-R) + (a/2) y (1+R) - a R + ((b+1)/2 + c) y - 1
ReflOp gauged_y(const ScarfParams& p, const Rational& c);

struct XRepair {
    Rational c;          // solved tan coefficient
    Rational printed_c;  // beta/2
};
// solves (1-y^2) X~_c P_0 = 0 for c
XRepair repair_x(const ScarfParams& p);

struct YRepair {
    Rational c;
    std::vector<Rational> k;          // Y~ P_n = k_n P_{n+1}^{(a,b-2)}, n = 0,1,2
    Rational printed_c;
    std::vector<Rational> printed_k;  // beta - 1 + [n]_alpha
};
// solves Y~_c P_n = k_n P_{n+1}^{(a,b-2)} for c, k_0, k_1, k_2;
// DegenerateSpectrum when the target family has a repeated eigenvalue
YRepair repair_y(const ScarfParams& p);

// beta - 1 + [n+1]_alpha
Rational y_constant(int n, const ScarfParams& p);

struct RelationRecord {
    std::string relation;
    std::string variant;  // "printed", "corrected" or "exact"
    std::map<std::string, std::string> params;
    double residual = 0.0;             // finest grid (0 for exact checks that hold)
    std::vector<double> residuals;     // per grid
    std::optional<double> order;
    std::string verdict;               // "pass", "fail", "discrepancy", "consistent"
    std::string note;

    bool operator==(const RelationRecord&) const = default;
};

struct RelationReport {
    std::vector<RelationRecord> records;
    bool oracle_ok() const;  // no record with verdict "fail"
};

struct RelationOptions {
    std::vector<int> grids{512, 1024, 2048};
    double tol = 1e-8;
    double min_order = 1.7;
    double roundoff = 1e-10;  // second-derivative stencil round-off at N = 2048 is ~6e-11
    int accuracy = 6;
};

// exact gauged relations up to degree D plus grid relations for both variants
RelationReport verify_operator_relations(const ScarfParams& p, int D, const RelationOptions& opt = {});

// smooth test functions vanishing to sixth order at +-pi/2, normalized to max 1
std::vector<std::vector<double>> relation_test_functions(const Grid& g);

}  // namespace rsusy
