#pragma once

#include "rsusy/errors.hpp"
#include "rsusy/opalg/reflop.hpp"
#include "rsusy/report/family_report.hpp"

#include <functional>
#include <vector>

namespace rsusy {

struct GegParams {
    Rational mu;
    Rational alpha;

    bool valid() const { return mu > Rational(-1, 2) && alpha > Rational(-1); }
    void validate() const;
};

// even moments of |y|^{2mu}(1-y^2)^alpha normalized to m_0 = 1; odd moments vanish
class GegMoments {
public:
    explicit GegMoments(GegParams p);
    const GegParams& params() const { return p_; }
    void ensure(int k) const;
    Rational operator()(int k) const;
    std::function<Rational(int)> fn() const {
        return [this](int k) { return (*this)(k); };
    }

private:
    GegParams p_;
    mutable std::vector<Rational> even_;  // even_[n] = m_{2n}
};

// (1-y^2) T_mu^2 - 2(alpha+1) y T_mu
ReflOp lop_geg(const GegParams& p);
Rational eigenvalue_geg(int n, const GegParams& p);

Poly construct_geg(int n, const GegParams& p);
Poly construct_geg_gram(int n, const GegMoments& m);
Rational inner(const Poly& p, const Poly& q, const GegMoments& m);

struct GegPotentialValues {
    double U0, U1, F0;
};

// printed: the rational-trig expressions as typeset; corrected: constants fixed so
// that H F0 = 0 (U0 lowered by mu^2+1/4, U1 constant sign flipped)
GegPotentialValues geg_potentials(const GegParams& p, double x, Variant v = Variant::printed);

// special cases written out separately for comparison
double pt_potential(double alpha, double x);             // (a^2-1/4)/cos^2 - (2a+1)^2/4
std::pair<double, double> hs_potential(double mu, double x);  // scalar, R-coefficient

// |V_CSM(x1,x2) - V_HS(x)| over the scalar and exchange coefficients
double csm_two_particle_check(const Rational& mu, double x1, double x2);

FamilyReport verify_geg_family(const GegParams& p, int D);

}  // namespace rsusy
