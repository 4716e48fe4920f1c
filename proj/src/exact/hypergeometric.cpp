#include "rsusy/exact/hypergeometric.hpp"

#include "rsusy/errors.hpp"

#include <algorithm>
#include <limits>

namespace rsusy {

Rational pochhammer(const Rational& a, unsigned n) {
    Rational r(1);
    for (unsigned i = 0; i < n; ++i) r *= a + Rational(static_cast<long>(i));
    return r;
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

unsigned termination_order(const HypSeries& s) {
    std::optional<unsigned> order = s.truncation;
    for (const auto& a : s.num) {
        if (!a.is_nonpositive_integer()) continue;
        unsigned m = static_cast<unsigned>(-a.to_long());
        order = order ? std::min(*order, m) : m;
    }
    if (!order) throw NonTerminating("hypergeometric series has no nonpositive-integer numerator parameter");
    return *order;
}

std::vector<Rational> hyp_coefficients(const HypSeries& s) {
    unsigned order = termination_order(s);
    std::vector<Rational> c;
    c.reserve(order + 1);
    Rational term(1);
    c.push_back(term);
    for (unsigned m = 0; m < order; ++m) {
        Rational k(static_cast<long>(m));
        Rational ratio(1);
        for (const auto& a : s.num) ratio *= a + k;
        Rational d = k + Rational(1);
        for (const auto& b : s.den) {
            Rational f = b + k;
            if (f.is_zero()) throw DivisionByZero("denominator Pochhammer vanishes at index " + std::to_string(m + 1));
            d *= f;
        }
        term *= ratio / d;
        c.push_back(term);
    }
    return c;
}

Rational hyp_eval(const HypSeries& s) {
    auto c = hyp_coefficients(s);
    // Horner in z
    Rational acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * s.z + *it;
    return acc;
}

}  // namespace rsusy
