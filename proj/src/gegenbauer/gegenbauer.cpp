#include "rsusy/gegenbauer/gegenbauer.hpp"

#include "rsusy/opalg/construct.hpp"

#include <algorithm>
#include <cmath>

namespace rsusy {

void GegParams::validate() const {
    if (!valid())
        throw InvalidParams("generalized Gegenbauer parameters need mu > -1/2 and alpha > -1 (got mu=" + mu.str() +
                            ", alpha=" + alpha.str() + ")");
}

GegMoments::GegMoments(GegParams p) : p_(std::move(p)) {
    p_.validate();
    even_.push_back(Rational(1));
}

void GegMoments::ensure(int k) const {
    const Rational half(1, 2);
    while (2 * (static_cast<int>(even_.size()) - 1) < k) {
        const Rational n(static_cast<long>(even_.size()));
        even_.push_back(even_.back() * (p_.mu + n - half) / (p_.mu + n + p_.alpha + half));
    }
}

Rational GegMoments::operator()(int k) const {
    if (k % 2) return Rational(0);
    ensure(k);
    return even_[k / 2];
}

ReflOp lop_geg(const GegParams& p) {
    const ReflOp T = dunkl(p.mu);
    const Poly one_minus_y2{Rational(1), Rational(0), Rational(-1)};
    return ReflOp::mul(one_minus_y2) * T * T - ReflOp::mul(Poly::y()) * T * (Rational(2) * (p.alpha + Rational(1)));
}

Rational eigenvalue_geg(int n, const GegParams& p) {
    const Rational nn(n);
    if (n % 2 == 0) return -nn * (nn + Rational(1) + Rational(2) * p.alpha + Rational(2) * p.mu);
    return -(Rational(2) * p.mu + nn) * (Rational(2) * p.alpha + nn + Rational(1));
}

Poly construct_geg(int n, const GegParams& p) {
    Poly P = monic_eigenpolynomial(lop_geg(p), n, eigenvalue_geg(n, p));
    // symmetric family: the parity of P_n is (-1)^n
    Poly sym = n % 2 ? -P.reflected() : P.reflected();
    if (!(sym == P)) throw InvalidParams("construct_geg: eigenpolynomial lacks parity symmetry");
    return P;
}

Poly construct_geg_gram(int n, const GegMoments& m) {
    m.ensure(2 * n);
    return gram_monic(n, m.fn());
}

Rational inner(const Poly& p, const Poly& q, const GegMoments& m) {
    if (!p.is_zero() && !q.is_zero()) m.ensure(p.degree() + q.degree());
    return moment_inner(p, q, m.fn());
}

GegPotentialValues geg_potentials(const GegParams& p, double x, Variant v) {
    const double s = std::sin(x), c = std::cos(x);
    if (s == 0.0 || c <= 0.0 || std::fabs(x) >= M_PI / 2)
        throw DomainError("geg_potentials: x must satisfy 0 < |x| < pi/2");
    const double a = p.alpha.to_double(), mu = p.mu.to_double();
    const double c2 = c * c, s2 = s * s;
    double U0 = (a * a * c2 * c2 + (mu * mu - 2 * a * a + 0.25) * c2 + a * a - 0.25) / (c2 * s2) - a;
    double U1 = (2 * a + 1) * mu - mu / s2;
    if (v == Variant::corrected) {
        U0 -= mu * mu + 0.25;
        U1 -= 2 * (2 * a + 1) * mu;
    }
    const double F0 = std::pow(std::fabs(s), mu) * std::pow(c, a + 0.5);
    return {U0, U1, F0};
}

double pt_potential(double alpha, double x) {
    const double c = std::cos(x);
    return (alpha * alpha - 0.25) / (c * c) - (2 * alpha + 1) * (2 * alpha + 1) / 4;
}

std::pair<double, double> hs_potential(double mu, double x) {
    const double s = std::sin(x);
    return {mu * mu / (s * s) - mu * mu, -mu / (s * s)};
}

double csm_two_particle_check(const Rational& mu, double x1, double x2) {
    const double gamma = 1.0 / std::sqrt(2.0);
    const double sg = std::sin(gamma * (x1 - x2));
    if (x1 == x2 || sg == 0.0) throw DomainError("csm_two_particle_check: sin(gamma (x1 - x2)) = 0");
    const double m = mu.to_double();
    const double b = 2 * m;
    // beta gamma^2 (beta/2 - S12)/sin^2(gamma (x1-x2)), split into scalar and exchange parts
    const double csm_scalar = b * gamma * gamma * (b / 2) / (sg * sg);
    const double csm_exchange = -b * gamma * gamma / (sg * sg);
    const double x = (x1 - x2) / std::sqrt(2.0);
    auto [hs_scalar, hs_refl] = hs_potential(m, x);
    // H_S carries the extra constant -mu^2
    hs_scalar += m * m;
    return std::max(std::fabs(csm_scalar - hs_scalar), std::fabs(csm_exchange - hs_refl));
}

FamilyReport verify_geg_family(const GegParams& p, int D) {
    p.validate();
    if (D < 2) throw InvalidParams("verify_geg_family: degree bound must be >= 2");
    FamilyReport rep;
    rep.kind = "gegenbauer";
    rep.params = {{"mu", p.mu}, {"alpha", p.alpha}};
    rep.degree = D;
    GegMoments m(p);
    m.ensure(2 * D);
    const ReflOp L = lop_geg(p);
    const RatMatrix A = matrix_on_basis(L, D);
    std::vector<Poly> P;
    for (int n = 0; n <= D; ++n) {
        FamilyRecord r;
        r.n = n;
        r.eigenvalue = eigenvalue_geg(n, p);
        try {
            r.poly = monic_eigenpolynomial(A, n, r.eigenvalue);
        } catch (const DegenerateSpectrum&) {
            r.degenerate = true;
            rep.records.push_back(r);
            P.emplace_back();
            continue;
        }
        const std::string tag = "n=" + std::to_string(n);
        r.residual_zero = (apply(L, r.poly) - r.poly * r.eigenvalue).is_zero();
        r.gram_agrees = construct_geg_gram(n, m) == r.poly;
        r.norm_sq = inner(r.poly, r.poly, m);
        Poly sym = n % 2 ? -r.poly.reflected() : r.poly.reflected();
        if (!(sym == r.poly)) rep.oracle_failures.push_back(tag + ": parity symmetry violated");
        if (!r.residual_zero) rep.oracle_failures.push_back(tag + ": eigen-equation residual nonzero");
        if (!r.gram_agrees) rep.oracle_failures.push_back(tag + ": eigen oracle differs from Gram oracle");
        for (int k = 0; k < n; ++k) {
            if (P[k].is_zero()) continue;
            Rational ip = inner(P[k], r.poly, m);
            if (!ip.is_zero())
                rep.orthogonality_violations.push_back("inner(P_" + std::to_string(k) + ", P_" + std::to_string(n) +
                                                       ") = " + ip.str());
        }
        P.push_back(r.poly);
        rep.records.push_back(std::move(r));
    }
    return rep;
}

}  // namespace rsusy
