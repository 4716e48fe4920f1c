#include "rsusy/cli/suites.hpp"

#include "rsusy/exact/hypergeometric.hpp"
#include "rsusy/gegenbauer/gegenbauer.hpp"
#include "rsusy/grid/quadrature.hpp"
#include "rsusy/jacobi/little_jacobi.hpp"
#include "rsusy/susyqm/oscillator.hpp"
#include "rsusy/susyqm/spectra.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

namespace rsusy {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string pair_tag(const Rational& a, const Rational& b) { return "(" + a.str() + "," + b.str() + ")"; }

Rational random_rational(std::mt19937& rng, int maxnum, int maxden) {
    const long p = 1 + static_cast<long>(rng() % maxnum);
    const long q = 1 + static_cast<long>(rng() % maxden);
    return Rational(p, q);
}

void add_family(SuiteResult& r, const std::string& suite, const std::string& tag, const FamilyReport& f) {
    int residual = 0, gram = 0, norms = 0;
    for (const auto& rec : f.records) {
        if (rec.residual_zero) ++residual;
        if (rec.gram_agrees) ++gram;
        if (rec.norm_match.value_or(true)) ++norms;
    }
    const std::string of = " of " + std::to_string(f.records.size());
    r.checks.push_back({suite, tag + " eigen residual zero", residual == int(f.records.size()),
                        std::to_string(residual) + of});
    r.checks.push_back({suite, tag + " eigen oracle == Gram oracle", gram == int(f.records.size()),
                        std::to_string(gram) + of});
    r.checks.push_back({suite, tag + " orthogonality", f.orthogonality_violations.empty(),
                        std::to_string(f.orthogonality_violations.size()) + " violations"});
    r.checks.push_back({suite, tag + " norms vs closed form", f.norm_mismatches.empty() && norms == int(f.records.size()),
                        std::to_string(f.norm_mismatches.size()) + " mismatches"});
    for (const auto& s : f.oracle_failures) r.checks.push_back({suite, tag + " oracle", false, s});
    for (const auto& s : f.explicit_discrepancies) r.discrepancies.push_back(suite + " " + tag + ": " + s);
}

void add_relations(SuiteResult& r, const std::string& suite, const RelationReport& rep, std::optional<Variant> v,
                   bool intertwiners_only) {
    for (const auto& rec : rep.records) {
        if (v && rec.variant != "exact" && rec.variant != to_string(*v)) continue;
        const bool intertwiner = rec.relation.find('X') != std::string::npos ||
                                 rec.relation.find('Y') != std::string::npos;
        if (intertwiners_only && !intertwiner) continue;
        const std::string tag = rec.relation + " [" + rec.variant + "] " +
                                pair_tag(Rational::parse(rec.params.at("alpha")), Rational::parse(rec.params.at("beta")));
        if (rec.verdict == "discrepancy") {
            r.discrepancies.push_back(suite + " " + tag + ": " + (rec.note.empty() ? "residual " + num(rec.residual) : rec.note));
        } else if (rec.verdict == "skipped") {
            r.checks.push_back({suite, tag, true, "skipped: " + rec.note});
        } else {
            std::string detail = rec.variant == "exact" ? "exact" : "residual " + num(rec.residual);
            if (rec.order) detail += ", order " + num(*rec.order);
            if (!rec.note.empty()) detail += "; " + rec.note;
            r.checks.push_back({suite, tag, rec.verdict != "fail", detail});
        }
        r.relations.push_back(rec);
    }
}

}  // namespace

bool SuiteResult::ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

void SuiteResult::merge(SuiteResult o) {
    for (auto& c : o.checks) checks.push_back(std::move(c));
    for (auto& d : o.discrepancies) discrepancies.push_back(std::move(d));
    for (auto& x : o.relations) relations.push_back(std::move(x));
    for (auto& s : o.spectra) spectra.push_back(std::move(s));
}

const std::vector<std::pair<Rational, Rational>>& standard_pairs() {
    static const std::vector<std::pair<Rational, Rational>> pairs{{Rational(0), Rational(0)},
                                                                 {Rational(1), Rational(1)},
                                                                 {Rational(1, 2), Rational(3, 2)},
                                                                 {Rational(1, 3), Rational(2)},
                                                                 {Rational(2), Rational(1, 5)}};
    return pairs;
}

SuiteResult suite_exact() {
    SuiteResult r;
    std::mt19937 rng(2024);
    int ok = 0, total = 0;
    for (; total < 60; ++total) {
        const unsigned n = rng() % 13;
        const Rational b = random_rational(rng, 40, 9) - Rational(2);
        Rational c = random_rational(rng, 40, 9);
        if (c.is_integer()) c += Rational(1, 3);
        const Rational lhs = hyp_eval({{Rational(-static_cast<long>(n)), b}, {c}, Rational(1), {}});
        if (lhs == pochhammer(c - b, n) / pochhammer(c, n)) ++ok;
    }
    r.checks.push_back({"exact", "Chu-Vandermonde 2F1(-n,b;c;1) = (c-b)_n/(c)_n, n <= 12", ok == total,
                        std::to_string(ok) + " of " + std::to_string(total) + " random cases"});

    ok = 0;
    total = 0;
    for (; total < 60; ++total) {
        const unsigned k = 1 + rng() % 8;
        const Rational b = random_rational(rng, 30, 9), c = random_rational(rng, 30, 9);
        const Rational kk(static_cast<long>(k));
        const Rational lhs = hyp_eval({{Rational(1) - kk, b, c + kk}, {b + Rational(1), c}, Rational(1), {}});
        Rational sum(0);
        for (unsigned l = 0; l < k; ++l)
            sum += pochhammer(b, l) / factorial(l) *
                   hyp_eval({{Rational(-static_cast<long>(l)), c + kk}, {c}, Rational(1), {}});
        const Rational pre = factorial(k - 1) / pochhammer(b + Rational(1), k - 1);
        const Rational sign = k % 2 ? Rational(-1) : Rational(1);
        const Rational closed = pre * (pochhammer(c - b, k) - sign * pochhammer(b, k)) / pochhammer(c, k);
        if (lhs == pre * sum && lhs == closed) ++ok;
    }
    r.checks.push_back({"exact", "3F2(1-k,b,c+k;b+1,c;1) summation, k <= 8", ok == total,
                        std::to_string(ok) + " of " + std::to_string(total) + " random cases"});
    r.discrepancies.push_back("exact A11: the typeset pFq definition omits 1/n!; 1F0(-2;;1/2) is 1/4 with it, 1/2 without");
    return r;
}

SuiteResult suite_jacobi(int D) {
    SuiteResult r;
    for (const auto& [a, b] : standard_pairs()) {
        const Jacobi1Params p{a, b};
        add_family(r, "jacobi", pair_tag(a, b), verify_family(p, D));
        bool nn = true;
        for (int n = 0; n <= D; ++n) nn = nn && norm_sq_from_Nn(n, p) == norm_sq_closed(n, p);
        r.checks.push_back({"jacobi", pair_tag(a, b) + " main-text N_n == appendix norms", nn, "n <= " + std::to_string(D)});
        const MomentFunctional m(p);
        if (printed_weight_moment(2, p) != m(2))
            r.discrepancies.push_back("jacobi " + pair_tag(a, b) + ": printed weight exponent (b+1)/2 gives c_2 = " +
                                      printed_weight_moment(2, p).str() + ", moment oracle " + m(2).str());
    }
    return r;
}

SuiteResult suite_gegenbauer(int D) {
    SuiteResult r;
    const std::vector<GegParams> pairs{{Rational(1, 2), Rational(1)},
                                       {Rational(0), Rational(0)},
                                       {Rational(1), Rational(1, 2)},
                                       {Rational(1, 3), Rational(2)},
                                       {Rational(2), Rational(-1, 2)}};
    for (const auto& p : pairs) add_family(r, "gegenbauer", "(mu,a)=" + pair_tag(p.mu, p.alpha), verify_geg_family(p, D));
    return r;
}

SuiteResult suite_susyqm(int D, std::optional<Variant> variant) {
    SuiteResult r;
    for (const auto& [a, b] : standard_pairs()) {
        const ScarfParams p{a, b};
        add_relations(r, "susyqm", verify_operator_relations(p, D), variant, false);

        auto dens = [&](double x) {
            const double g = ground_state(x, p);
            return g * g;
        };
        const double q = tanh_sinh(dens, -std::numbers::pi / 2, 0.0) + tanh_sinh(dens, 0.0, std::numbers::pi / 2);
        r.checks.push_back({"susyqm", pair_tag(a, b) + " |Psi_0|^2 integrates to 1 with N0^2 = 1/B((a+1)/2,(b+1)/2)",
                            std::abs(q - 1) < 1e-8, "error " + num(std::abs(q - 1))});
    }
    const auto n0 = n0_squared(1.0, 1.0);
    r.discrepancies.push_back("susyqm N0 at a=b=1: main text " + num(n0.main_text) + ", appendix " + num(n0.appendix) +
                              ", beta integral " + num(n0.oracle));
    return r;
}

SuiteResult suite_intertwiners(int D, std::optional<Variant> variant) {
    SuiteResult r;
    for (const auto& [a, b] : standard_pairs()) {
        const ScarfParams p{a, b};
        add_relations(r, "intertwiners", verify_operator_relations(p, D), variant, true);
        if (!variant || *variant == Variant::printed) {
            const XRepair x = repair_x(p);
            r.discrepancies.push_back("intertwiners " + pair_tag(a, b) + ": X tan coefficient printed " +
                                      x.printed_c.str() + ", n=0 annihilation requires " + x.c.str());
        }
    }
    return r;
}

SuiteResult suite_oscillator() {
    SuiteResult r;
    double worst = 0;
    for (int n = 0; n <= 12; ++n) {
        const FockVector v = FockVector::basis(n);
        worst = std::max(worst, max_abs_diff(osc_q_apply(osc_q_apply(v)), osc_h_apply(v)));
    }
    r.checks.push_back({"oscillator", "Q^2 = H on |n>, n <= 12", worst < 1e-12, "max deviation " + num(worst)});

    worst = 0;
    for (int n = 0; n <= 12; ++n)
        for (int eps : {1, -1}) {
            const FockVector v = osc_mixed_state(n, eps);
            worst = std::max(worst, max_abs_diff(osc_q_apply(v), eps * std::sqrt(2.0 * n + 2) * v));
        }
    r.checks.push_back({"oscillator", "Q|n,e> = e sqrt(2n+2)|n,e>", worst < 1e-12, "max deviation " + num(worst)});

    worst = 0;
    double printed_spread = 0;
    for (int n = 0; n <= 6; ++n)
        for (int eps : {1, -1}) {
            double lo = 1e300, hi = -1e300;
            for (int i = -40; i <= 40; ++i) {
                const double x = 0.1 * i + 0.013;
                const double h = osc_hermite_superposition(n, eps, x);
                worst = std::max(worst, std::abs(osc_wavefunction(n, eps, x) - osc_wavefunction_constant(n) * h));
                if (std::abs(h) > 1e-3) {
                    const double ratio = osc_wavefunction(n, eps, x, Variant::printed) / h;
                    lo = std::min(lo, ratio);
                    hi = std::max(hi, ratio);
                }
            }
            printed_spread = std::max(printed_spread, hi - lo);
        }
    r.checks.push_back({"oscillator", "corrected Laguerre form = (sqrt2/2^n)(phi_{2n+1} + e phi_{2n+2})/2", worst < 1e-10,
                        "max deviation " + num(worst)});
    r.discrepancies.push_back("oscillator 315: printed Laguerre form is not proportional to the Hermite superposition "
                              "(ratio spread " + num(printed_spread) + ")");

    SpectrumReport s = convergence_study(oscillator_spectral_problem(), {1000, 2000, 4000}, 5);
    for (const auto& l : s.levels)
        r.checks.push_back({"oscillator", "spectrum level " + std::to_string(l.level), l.abs_error < 1e-6 && !l.non_convergent,
                            "E = " + num(l.extrapolated) + " target " + num(l.target) + " error " + num(l.abs_error)});
    r.spectra.push_back(std::move(s));
    return r;
}

SuiteResult run_suite(const std::string& name, int D, std::optional<Variant> variant) {
    const int Dy = std::min(D, 12);
    if (name == "exact") return suite_exact();
    if (name == "jacobi") return suite_jacobi(D);
    if (name == "gegenbauer") return suite_gegenbauer(D);
    if (name == "susyqm") return suite_susyqm(Dy, variant);
    if (name == "intertwiners") return suite_intertwiners(Dy, variant);
    if (name == "oscillator") return suite_oscillator();
    if (name != "all") throw InvalidParams("unknown suite '" + name + "'");
    SuiteResult r = suite_exact();
    r.merge(suite_jacobi(D));
    r.merge(suite_gegenbauer(D));
    r.merge(suite_susyqm(Dy, variant));
    r.merge(suite_oscillator());
    return r;
}

}  // namespace rsusy
