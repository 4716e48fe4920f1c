#pragma once

#include "rsusy/errors.hpp"
#include "rsusy/opalg/reflop.hpp"
#include "rsusy/report/family_report.hpp"

#include <functional>
#include <vector>

namespace rsusy {

struct Jacobi1Params {
    Rational alpha;
    Rational beta;

    bool valid() const { return alpha > Rational(-1) && beta > Rational(-1); }
    void validate() const;  // InvalidParams unless alpha, beta > -1
};

// Normalized moments c_k of |y|^a (1-y^2)^((b-1)/2) (1+y).
// The cache grows on demand: call ensure(2D) before sharing across threads.
class MomentFunctional {
public:
    explicit MomentFunctional(Jacobi1Params p);

    const Jacobi1Params& params() const { return p_; }
    void ensure(int k) const;
    Rational operator()(int k) const;
    std::function<Rational(int)> fn() const {
        return [this](int k) { return (*this)(k); };
    }

private:
    Jacobi1Params p_;
    mutable std::vector<Rational> c_;
};

// 2(1-y) d/dy R + (a+b+1)(1-R) - a (1/y)(1-R)
ReflOp lop(const Jacobi1Params& p);
Rational eigenvalue(int n, const Jacobi1Params& p);

Poly construct_oracle(int n, const Jacobi1Params& p);
Poly construct_gram(int n, const MomentFunctional& m);
Poly construct_explicit(int n, const Jacobi1Params& p, Variant v);

Rational inner(const Poly& p, const Poly& q, const MomentFunctional& m);

// N_0^2 / N_n^2 from the even/odd appendix closed forms
Rational norm_sq_closed(int n, const Jacobi1Params& p);
// the same ratio rebuilt from the main-text N_n expression
Rational norm_sq_from_Nn(int n, const Jacobi1Params& p);

// [n]_a = n + (a/2)(1 - (-1)^n)
Rational dunkl_bracket(int n, const Rational& alpha);

// Moments the printed weight exponent (b+1)/2 would give: (a/2+1/2)_n/(a/2+b/2+2)_n
Rational printed_weight_moment(int k, const Jacobi1Params& p);

FamilyReport verify_family(const Jacobi1Params& p, int D);

}  // namespace rsusy
