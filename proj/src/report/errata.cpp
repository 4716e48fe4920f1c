#include "rsusy/report/errata.hpp"

#include "rsusy/exact/hypergeometric.hpp"
#include "rsusy/gegenbauer/gegenbauer.hpp"
#include "rsusy/grid/convergence.hpp"
#include "rsusy/grid/quadrature.hpp"
#include "rsusy/jacobi/little_jacobi.hpp"
#include "rsusy/susyqm/oscillator.hpp"
#include "rsusy/susyqm/scarf.hpp"
#include "rsusy/susyqm/spectra.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace rsusy {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string list(const std::vector<double>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + num(v[i]);
    return s + "}";
}

const std::vector<Jacobi1Params>& fuzz_pairs() {
    static const std::vector<Jacobi1Params> pairs{{Rational(0), Rational(0)},
                                                 {Rational(1), Rational(1)},
                                                 {Rational(1, 2), Rational(3, 2)},
                                                 {Rational(1, 3), Rational(2)},
                                                 {Rational(2), Rational(1, 5)}};
    return pairs;
}

ErrataEntry hypergeometric_factorial() {
    HypSeries s{{Rational(-2)}, {}, Rational(1, 2), std::nullopt};
    Rational without(0);
    for (unsigned m = 0; m <= 2; ++m) {
        Rational t = pochhammer(Rational(-2), m);
        for (unsigned i = 0; i < m; ++i) t *= Rational(1, 2);
        without += t;
    }
    return {"exact-A11",
            "A11",
            "pFq = sum_n prod (a_i)_n / prod (b_j)_n z^n",
            "pFq = sum_n prod (a_i)_n / prod (b_j)_n z^n / n!",
            "1F0(-2;;1/2): with 1/n! " + hyp_eval(s).str() + " = (1-1/2)^2, without " + without.str(),
            "discrepancy"};
}

ErrataEntry jacobi_413_prefactor() {
    std::string ev;
    int mismatched = 0;
    for (const auto& p : fuzz_pairs()) {
        const Poly oracle = construct_oracle(1, p);
        const Poly printed = construct_explicit(1, p, Variant::printed);
        if (printed.monic() != oracle) ++mismatched;
        if (p.alpha == Rational(0) && p.beta == Rational(0))
            ev = "(0,0) n=1: oracle P1 = " + oracle.str() + ", printed explicit P1 = " + printed.str() +
                 " (monic " + printed.monic().str() + "), corrected explicit P1 = " +
                 construct_explicit(1, p, Variant::corrected).str();
    }
    ev += "; printed monic P1 differs from the oracle on " + std::to_string(mismatched) + " of 5 pairs";
    return {"jacobi-413-prefactor", "413", "odd n: second block prefactor (a+b+1)/(a+1)",
            "odd n: second block prefactor (n+a+b+1)/(a+1)", ev, "discrepancy"};
}

ErrataEntry jacobi_4140_base() {
    std::string ev;
    const Jacobi1Params p{Rational(0), Rational(0)};
    for (int n : {1, 3, 5}) {
        const unsigned m = (n + 1) / 2;
        const Rational ab = p.alpha / Rational(2) + p.beta / Rational(2) + Rational(1);
        const Rational ratio =
            pochhammer(Rational(n - 1, 2) + ab, m) / pochhammer(Rational(n + 1, 2) + ab, m);
        ev += (n > 1 ? ", " : "") + std::string("n=") + std::to_string(n) + ": kappa_printed/kappa = " + ratio.str();
    }
    int monic = 0;
    for (int n = 1; n <= 19; n += 2)
        if (construct_explicit(n, p, Variant::corrected).is_monic()) ++monic;
    ev = "(0,0) " + ev + "; corrected base gives monic P_n for " + std::to_string(monic) + " of 10 odd n <= 19";
    return {"jacobi-4140-kappa", "4140", "odd kappa_n Pochhammer base (n+1)/2 + a/2 + b/2 + 1",
            "odd kappa_n Pochhammer base (n-1)/2 + a/2 + b/2 + 1", ev, "discrepancy"};
}

ErrataEntry jacobi_414_exponent() {
    const Jacobi1Params p{Rational(1), Rational(1)};
    const MomentFunctional m(p);
    const Poly P1 = construct_oracle(1, p);
    Rational printed_inner(0);
    for (int i = 0; i <= P1.degree(); ++i) printed_inner += P1.coeff(i) * printed_weight_moment(i, p);
    const std::string ev = "(1,1): moment c_2 oracle " + m(2).str() + ", printed exponent " +
                           printed_weight_moment(2, p).str() + "; <P1,P0> oracle " +
                           inner(P1, Poly(Rational(1)), m).str() + ", printed-weight " + printed_inner.str() +
                           "; the appendix change of variables uses (1-y^2)^((b-1)/2)";
    return {"jacobi-414-exponent", "414", "weight |y|^a (1-y^2)^((b+1)/2) (1+y)",
            "weight |y|^a (1-y^2)^((b-1)/2) (1+y)", ev, "discrepancy"};
}

ErrataEntry jacobi_Nn() {
    int agree = 0, total = 0;
    for (const auto& p : fuzz_pairs())
        for (int n = 0; n <= 20; ++n, ++total)
            if (norm_sq_from_Nn(n, p) == norm_sq_closed(n, p)) ++agree;
    return {"jacobi-Nn", "Nn",
            "N_n from the main text",
            "appendix closed forms A25/A26",
            std::to_string(agree) + " of " + std::to_string(total) + " (pair, n <= 20) agree exactly",
            agree == total ? "consistent" : "discrepancy"};
}

ErrataEntry scarf_n0() {
    const auto v = n0_squared(1.0, 1.0);
    const ScarfParams p{Rational(1), Rational(1)};
    auto dens = [&](double x) {
        const double g = ground_state(x, p);
        return g * g;
    };
    const double q = tanh_sinh(dens, -std::numbers::pi / 2, 0.0) + tanh_sinh(dens, 0.0, std::numbers::pi / 2);
    const std::string ev = "a=b=1: main text " + num(v.main_text) + " (4/pi = " + num(4 / std::numbers::pi) +
                           "), appendix " + num(v.appendix) + " (sqrt(pi)/2 = " +
                           num(std::sqrt(std::numbers::pi) / 2) + "), beta integral " + num(v.oracle) +
                           "; quadrature norm of |Psi_0|^2 with each: " +
                           list({q * v.main_text / v.oracle, q * v.appendix / v.oracle, q});
    return {"scarf-N0", "461 / A7",
            "N0^2 = G(a/2+b/2+1)/(G(a/2+1)G(b/2+1)) (461); G(a/2+b/2+1/2)/(G(a/2+1/2)G(b/2+1/2)) (A7)",
            "N0^2 = 1/B((a+1)/2, (b+1)/2) = G(a/2+b/2+1)/(G(a/2+1/2)G(b/2+1/2))", ev, "discrepancy"};
}

ErrataEntry scarf_429() {
    const ScarfParams p{Rational(1), Rational(1)};
    const XRepair r = repair_x(p);
    double worst = 0.0;
    for (double x : {-1.2, -0.5, 0.3, 0.9, 1.4})
        worst = std::max(worst, std::abs(x_on_ground_state(p, r.printed_c.to_double(), x)));
    double best = 0.0;
    for (double x : {-1.2, -0.5, 0.3, 0.9, 1.4})
        best = std::max(best, std::abs(x_on_ground_state(p, r.c.to_double(), x)));
    return {"scarf-429-tan", "429", "X: coefficient (b/2) tan x", "X: coefficient ((b+1)/2) tan x",
            "(1,1): n=0 annihilation X Psi_0 = 0 solves to c = " + r.c.str() + " (printed " + r.printed_c.str() +
                "); max |X Psi_0| on sample points: printed " + num(worst) + ", corrected " + num(best),
            "discrepancy"};
}

ErrataEntry scarf_430() {
    const ScarfParams p{Rational(1), Rational(1)};
    const YRepair r = repair_y(p);
    return {"scarf-430-tan", "430", "Y: coefficient (b/2) tan x", "Y: coefficient ((b-1)/2) tan x",
            "(1,1): Y P_n proportional to P_{n+1}^{(a,b-2)} for n=0,1,2 solves to c = " + r.c.str() + " (printed " +
                r.printed_c.str() + ")",
            "discrepancy"};
}

ErrataEntry scarf_432() {
    const ScarfParams p{Rational(1), Rational(1)};
    const YRepair r = repair_y(p);
    return {"scarf-432-constant", "432", "Y P_n = (b - 1 + [n]_a) P_{n+1}", "Y P_n = (b - 1 + [n+1]_a) P_{n+1}",
            "(1,1): solved k = {" + r.k[0].str() + ", " + r.k[1].str() + ", " + r.k[2].str() + "}, printed {" +
                r.printed_k[0].str() + ", " + r.printed_k[1].str() + ", " + r.printed_k[2].str() + "}",
            "discrepancy"};
}

ErrataEntry scarf_product() {
    const ScarfParams p{Rational(1, 2), Rational(3, 2)};
    const auto rep = verify_operator_relations(p, 4);
    std::string ev;
    for (const auto& r : rep.records)
        if (r.relation.find(" X") != std::string::npos && r.relation.find("2H") != std::string::npos)
            ev += (ev.empty() ? "" : "; ") + r.relation + " [" + r.variant + "] " + r.verdict + " residual " +
                  num(r.residual);
    return {"scarf-product", "YX product (after 433)",
            "Y_{a,b+1} X_{a,b+1} with printed tan coefficients",
            "Y_{a,b+2} X_{a,b} with corrected tan coefficients",
            "(1/2,3/2): " + ev + "; at index b+1 the printed coefficients (b+1)/2 coincide with the corrected ones",
            "consistent"};
}

std::vector<double> geg_levels(Variant v) {
    const GegParams p{Rational(1, 2), Rational(1)};
    const auto rep = convergence_study(gegenbauer_spectral_problem(p, v), {512, 1024, 2048}, 3);
    std::vector<double> e;
    for (const auto& l : rep.levels) e.push_back(l.extrapolated);
    return e;
}

ErrataEntry geg_potentials_entry() {
    return {"geg-HG-potentials", "HG",
            "U0, U1 as typeset",
            "U0 lowered by mu^2 + 1/4, constant of U1 = -(2a+1) mu, so that H F0 = 0",
            "(mu,a) = (1/2,1) lowest 3 grid levels: printed potentials " + list(geg_levels(Variant::printed)) +
                ", corrected " + list(geg_levels(Variant::corrected)) + ", expected {0, 8, 12}",
            "discrepancy"};
}

ErrataEntry geg_sign() {
    const GegParams p{Rational(1, 2), Rational(1)};
    std::string lam;
    for (int n = 0; n < 3; ++n) lam += (n ? ", " : "") + eigenvalue_geg(n, p).str();
    return {"geg-HG-sign", "eig_G", "H psi_n = lambda_n psi_n", "H psi_n = -lambda_n psi_n",
            "(1/2,1): lambda_n = {" + lam + "}; grid spectrum of H " + list(geg_levels(Variant::corrected)) +
                " is -lambda_n and H is nonnegative",
            "discrepancy"};
}

double osc_norm(int n, int eps, Variant v) {
    return tanh_sinh([&](double x) { return std::pow(osc_wavefunction(n, eps, x, v), 2); }, -12.0, 12.0);
}

ErrataEntry osc_310() {
    std::vector<double> fock, quad;
    for (int n = 0; n < 3; ++n) {
        fock.push_back(osc_mixed_state(n, 1).norm());
        quad.push_back(std::sqrt(osc_norm(n, 1, Variant::corrected)) / osc_wavefunction_constant(n));
    }
    return {"osc-310", "310", "|n,e> = (|2n+1> + e|2n+2>)/2", "(|2n+1> + e|2n+2>)/sqrt2 for unit norm",
            "Fock norms n=0..2 " + list(fock) + " (1/sqrt2 = " + num(1 / std::sqrt(2.0)) +
                "); quadrature norms of the corrected coordinate form divided by sqrt2/2^n " + list(quad),
            "discrepancy"};
}

ErrataEntry osc_315() {
    std::string ev;
    for (int n = 0; n < 3; ++n) {
        std::vector<double> pr, co;
        for (double x : {0.3, 0.8, 1.7}) {
            const double h = osc_hermite_superposition(n, 1, x);
            pr.push_back(osc_wavefunction(n, 1, x, Variant::printed) / h);
            co.push_back(osc_wavefunction(n, 1, x, Variant::corrected) / h);
        }
        ev += (n ? "; " : "") + std::string("n=") + std::to_string(n) + " ratio to (phi_{2n+1}+phi_{2n+2})/2 at x=0.3,0.8,1.7: printed " +
              list(pr) + ", corrected " + list(co) + " (sqrt2/2^n = " + num(osc_wavefunction_constant(n)) + ")";
    }
    return {"osc-315", "315", "x L_n^{1/2}(x^2) + e (n+1) L_{n+1}^{-1/2}(x^2)",
            "x L_n^{1/2}(x^2) - e sqrt(n+1) L_{n+1}^{-1/2}(x^2), equal to the Hermite superposition times sqrt2/2^n",
            ev, "discrepancy"};
}

ErrataEntry osc_314() {
    const double pi4 = std::pow(std::numbers::pi, 0.25);
    const double x = 0.7;
    // H_3(x) = 8x^3 - 12x
    const double H3 = 8 * x * x * x - 12 * x;
    const double typeset = std::exp(-x * x / 2) * H3 / (pi4 * std::pow(2.0, 1.5) * std::sqrt(3.0));
    const double fixed = std::exp(-x * x / 2) * H3 / (pi4 * std::pow(2.0, 1.5) * std::sqrt(6.0));
    return {"osc-314", "314", "<x|n> = e^{-x^2/2} H_n(x) / (pi^{1/4} 2^{n/2} sqrt(n))",
            "<x|n> = e^{-x^2/2} H_n(x) / (pi^{1/4} 2^{n/2} sqrt(n!))",
            "n=3, x=0.7: orthonormal phi_3 " + num(hermite_function(3, x)) + ", typeset " + num(typeset) +
                ", with sqrt(n!) " + num(fixed) + "; the typeset form is undefined at n=0",
            "discrepancy"};
}

ErrataEntry osc_317_text() {
    std::vector<double> q;
    for (int n = 0; n < 3; ++n) {
        const FockVector v = osc_mixed_state(n, 1);
        q.push_back(osc_q_apply(v)[2 * n + 1] / v[2 * n + 1]);
    }
    return {"osc-317-text", "317 (text)", "Q eigenvalue e sqrt(2n+1)", "Q eigenvalue e sqrt(2n+2), as in 311",
            "measured Q eigenvalues of |n,+> for n=0..2: " + list(q) + " vs sqrt(2n+2) " +
                list({std::sqrt(2.0), 2.0, std::sqrt(6.0)}),
            "discrepancy"};
}

}  // namespace

std::vector<ErrataEntry> build_errata() {
    return {hypergeometric_factorial(), jacobi_413_prefactor(), jacobi_4140_base(), jacobi_414_exponent(),
            jacobi_Nn(), scarf_n0(), scarf_429(), scarf_430(), scarf_432(), scarf_product(),
            geg_potentials_entry(), geg_sign(), osc_310(), osc_315(), osc_314(), osc_317_text()};
}

}  // namespace rsusy
