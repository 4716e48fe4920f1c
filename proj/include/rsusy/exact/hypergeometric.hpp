#pragma once

#include "rsusy/exact/rational.hpp"

#include <optional>
#include <vector>

namespace rsusy {

Rational pochhammer(const Rational& a, unsigned n);
Rational factorial(unsigned n);

// rFs(a_1..a_r; b_1..b_s; z). Terminates through a nonpositive-integer a_i,
// or through an explicit truncation order supplied by the caller.
struct HypSeries {
    std::vector<Rational> num;
    std::vector<Rational> den;
    Rational z;
    std::optional<unsigned> truncation;
};

// highest summation index that contributes; throws NonTerminating
unsigned termination_order(const HypSeries& s);

Rational hyp_eval(const HypSeries& s);

// coefficients c_m of the series in powers of z (z itself ignored), m = 0..termination_order
std::vector<Rational> hyp_coefficients(const HypSeries& s);

}  // namespace rsusy
