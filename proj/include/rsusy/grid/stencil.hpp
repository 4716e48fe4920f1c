#pragma once

#include "rsusy/grid/grid_operator.hpp"

#include <vector>

namespace rsusy {

// central-difference derivative of order 1 or 2 at accuracy 2, 4 or 6, zero ghosts
std::vector<double> derivative(const std::vector<double>& f, double h, int deriv, int accuracy);

// Analytic differential-reflection operator: sum of coef(x) * d^deriv (R^reflect f).
class DiffReflOp {
public:
    struct Term {
        RealFn coef;
        int deriv = 0;
        bool reflect = false;
    };

    DiffReflOp& add(RealFn coef, int deriv, bool reflect);
    const std::vector<Term>& terms() const { return terms_; }

    std::vector<double> apply(const Grid& g, const std::vector<double>& f, int accuracy) const;
    GridOperator to_matrix(const Grid& g, int accuracy) const;

private:
    std::vector<Term> terms_;
};

}  // namespace rsusy
