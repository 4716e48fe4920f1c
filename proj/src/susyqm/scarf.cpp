#include "rsusy/susyqm/scarf.hpp"

#include "rsusy/exact/special.hpp"
#include "rsusy/opalg/construct.hpp"
#include "rsusy/opalg/ratmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rsusy {

namespace {

constexpr double kPi = std::numbers::pi;
const double kS2 = std::sqrt(2.0);

const Poly& one_minus_y2() {
    static const Poly p{Rational(1), Rational(0), Rational(-1)};
    return p;
}

void check_interval(double x) {
    if (!(std::fabs(x) < kPi / 2)) throw DomainError("Scarf wavefunctions live on |x| < pi/2");
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

// first monomial y^j (j <= D) on which a and b differ, or -1
int first_difference(const ReflOp& a, const ReflOp& b, int D) {
    for (int j = 0; j <= D; ++j) {
        const Poly m = Poly::monomial(j);
        if (!(apply(a, m) == apply(b, m))) return j;
    }
    return -1;
}

}  // namespace

void ScarfParams::validate() const {
    if (!valid())
        throw InvalidParams("Scarf parameters need alpha > -1 and beta > -1 (got alpha=" + alpha.str() +
                            ", beta=" + beta.str() + ")");
}

void ScarfParams::validate_grid() const {
    validate();
    if (alpha < Rational(0)) throw InvalidParams("grid computations need alpha >= 0 (got alpha=" + alpha.str() + ")");
}

ReflOp gauged_supercharge(const ScarfParams& p) {
    const Poly one_minus_y{Rational(1), Rational(-1)};
    ReflOp op = ReflOp::mul(one_minus_y) * ReflOp::diff() * ReflOp::reflect() * Rational(2);
    op -= ReflOp::odd_over_y() * p.alpha;
    op -= ReflOp::reflect() * (p.alpha + p.beta + Rational(1));
    return op;
}

Rational supercharge_eigenvalue(int n, const ScarfParams& p) {
    if (n < 0) throw InvalidParams("supercharge_eigenvalue: n must be >= 0");
    const Rational s = Rational(2 * n) + p.alpha + p.beta + Rational(1);
    return n % 2 == 0 ? -s : s;
}

Rational scarf_energy(int n, const ScarfParams& p) {
    const Rational s = supercharge_eigenvalue(n, p);
    return s * s / Rational(8);
}

N0Values n0_squared(double a, double b) {
    if (!(a > -1 && b > -1)) throw DomainError("n0_squared: alpha, beta must exceed -1");
    auto lg = [](double v) { return std::lgamma(v); };
    return {1 / beta_num((a + 1) / 2, (b + 1) / 2),
            std::exp(lg(a / 2 + b / 2 + 1) - lg(a / 2 + 1) - lg(b / 2 + 1)),
            std::exp(lg(a / 2 + b / 2 + 0.5) - lg(a / 2 + 0.5) - lg(b / 2 + 0.5))};
}

double ground_state(double x, const ScarfParams& p) {
    check_interval(x);
    p.validate();
    const double a = p.a(), b = p.b();
    const double n0 = std::sqrt(n0_squared(a, b).oracle);
    const double s = std::sin(x);
    return n0 * std::pow(std::fabs(s), a / 2) * std::pow(std::cos(x), b / 2) * std::sqrt(1 + s);
}

double wavefunction(int n, const ScarfParams& p, double x) {
    check_interval(x);
    if (n < 0) throw InvalidParams("wavefunction: n must be >= 0");
    if (n == 0) return ground_state(x, p);
    const Poly P = construct_oracle(n, p.jacobi());
    const double ratio = std::sqrt(1 / norm_sq_closed(n, p.jacobi()).to_double());  // N_n / N_0
    return ratio * ground_state(x, p) * P.eval(std::sin(x));
}

DiffReflOp scarf_Q(double a, double b) {
    DiffReflOp q;
    q.add([](double) { return 1 / kS2; }, 1, true)
        .add([b](double x) { return -b / (2 * kS2 * std::cos(x)); }, 0, true)
        .add([a](double x) { return -a / (2 * kS2 * std::sin(x)); }, 0, false);
    return q;
}

DiffReflOp scarf_H(double a, double b) {
    DiffReflOp h;
    h.add([](double) { return -0.5; }, 2, false)
        .add(
            [a, b](double x) {
                const double s = std::sin(x), c = std::cos(x);
                return a * a / (8 * s * s) + (b / 4) * (b / 2 - s) / (c * c);
            },
            0, false)
        .add(
            [a](double x) {
                const double s = std::sin(x);
                return -a * std::cos(x) / (4 * s * s);
            },
            0, true);
    return h;
}

DiffReflOp intertwiner_X(double a, double c) {
    DiffReflOp x;
    x.add([](double) { return 1.0; }, 1, false)
        .add([c](double t) { return c * std::tan(t) - 0.5 / std::cos(t); }, 0, false)
        .add([a](double t) { return -a / 2 * (1 + 1 / std::sin(t)); }, 0, true);
    return x;
}

DiffReflOp intertwiner_Y(double a, double c) {
    DiffReflOp y;
    y.add([](double) { return -1.0; }, 1, false)
        .add([c](double t) { return c * std::tan(t) - 0.5 / std::cos(t); }, 0, false)
        .add([a](double t) { return -a / 2 * (1 - 1 / std::sin(t)); }, 0, true);
    return y;
}

double x_tan_coefficient(double beta, Variant v) { return v == Variant::printed ? beta / 2 : (beta + 1) / 2; }
double y_tan_coefficient(double beta, Variant v) { return v == Variant::printed ? beta / 2 : (beta - 1) / 2; }

double x_on_ground_state(const ScarfParams& p, double c, double x) {
    check_interval(x);
    const double a = p.a(), b = p.b();
    const double s = std::sin(x), co = std::cos(x);
    const double psi = ground_state(x, p), psim = ground_state(-x, p);
    const double dpsi = psi * (a / 2 * co / s - b / 2 * s / co + co / (2 * (1 + s)));
    return dpsi + (c * s / co - 0.5 / co) * psi - a / 2 * (1 + 1 / s) * psim;
}

ReflOp gauged_x_cleared(const ScarfParams& p, const Rational& c) {
    ReflOp op = ReflOp::mul(one_minus_y2()) * dunkl(p.alpha / Rational(2));
    op += ReflOp::mul(Poly::y()) * (c - (p.beta + Rational(1)) / Rational(2));
    return op;
}

ReflOp gauged_y(const ScarfParams& p, const Rational& c) {
    const Rational half_a = p.alpha / Rational(2);
    ReflOp op = ReflOp::mul(one_minus_y2()) * ReflOp::diff() * Rational(-1);
    op -= ReflOp::odd_over_y() * half_a;
    op += ReflOp::mul(Poly::y()) * (ReflOp::identity() + ReflOp::reflect()) * half_a;
    op -= ReflOp::reflect() * p.alpha;
    op += ReflOp::mul(Poly::y()) * ((p.beta + Rational(1)) / Rational(2) + c);
    op -= ReflOp::identity();
    return op;
}

XRepair repair_x(const ScarfParams& p) {
    const Poly one(Rational(1));
    const Poly A = apply(gauged_x_cleared(p, Rational(0)), one);
    const Poly B = apply(gauged_x_cleared(p, Rational(1)), one) - A;
    const int rows = std::max({A.degree(), B.degree(), 0}) + 1;
    RatMatrix M(rows, 1);
    std::vector<Rational> rhs(rows);
    for (int i = 0; i < rows; ++i) {
        M(i, 0) = B.coeff(i);
        rhs[i] = -A.coeff(i);
    }
    auto sol = solve_exact(M, rhs);
    if (!sol) throw InvalidParams("repair_x: no tan coefficient annihilates the ground state");
    return {(*sol)[0], p.beta / Rational(2)};
}

Rational y_constant(int n, const ScarfParams& p) {
    return p.beta - Rational(1) + dunkl_bracket(n + 1, p.alpha);
}

YRepair repair_y(const ScarfParams& p) {
    const Jacobi1Params src = p.jacobi(), dst{p.alpha, p.beta - Rational(2)};
    const ReflOp Y0 = gauged_y(p, Rational(0));
    // unknowns: c, k_0, k_1, k_2
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (int n = 0; n < 3; ++n) {
        const Poly P = construct_oracle(n, src);
        const Poly T = construct_oracle(n + 1, dst);
        const Poly A = apply(Y0, P), B = Poly::y() * P;
        for (int i = 0; i <= n + 1; ++i) {
            std::vector<Rational> r(4, Rational(0));
            r[0] = B.coeff(i);
            r[1 + n] = -T.coeff(i);
            rows.push_back(r);
            rhs.push_back(-A.coeff(i));
        }
    }
    RatMatrix M(static_cast<int>(rows.size()), 4);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < 4; ++j) M(static_cast<int>(i), j) = rows[i][j];
    auto sol = solve_exact(M, rhs);
    if (!sol) throw InvalidParams("repair_y: no tan coefficient satisfies the raising relation at n=0,1,2");
    YRepair r;
    r.c = (*sol)[0];
    r.k = {(*sol)[1], (*sol)[2], (*sol)[3]};
    r.printed_c = p.beta / Rational(2);
    for (int n = 0; n < 3; ++n) r.printed_k.push_back(p.beta - Rational(1) + dunkl_bracket(n, p.alpha));
    return r;
}

bool RelationReport::oracle_ok() const {
    return std::none_of(records.begin(), records.end(), [](const RelationRecord& r) { return r.verdict == "fail"; });
}

std::vector<std::vector<double>> relation_test_functions(const Grid& g) {
    const std::vector<RealFn> shapes{
        [](double x) { return std::exp(0.4 * x) * (1 + x + 0.3 * x * x); },
        [](double x) { return std::cos(3 * x) + 0.5 * std::sin(x) + 0.2; },
        [](double x) { return 1 / (2 + std::sin(2 * x + 0.3)); },
    };
    std::vector<std::vector<double>> out;
    for (const auto& s : shapes) {
        std::vector<double> f(g.N());
        double m = 0.0;
        for (int i = 0; i < g.N(); ++i) {
            const double x = g.x(i);
            const double sc = std::sin(x) * std::cos(x);
            f[i] = std::pow(sc, 6) * s(x);
            m = std::fmax(m, std::fabs(f[i]));
        }
        for (double& v : f) v /= m;
        out.push_back(std::move(f));
    }
    return out;
}

namespace {

using Vec = std::vector<double>;
using Relation = std::function<Vec(const Grid&, const Vec&, int)>;

Vec reversed(const Vec& f) { return Vec(f.rbegin(), f.rend()); }

Vec combine(const Vec& a, double sa, const Vec& b, double sb) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = sa * a[i] + sb * b[i];
    return r;
}

double max_abs(const Vec& v) {
    double m = 0.0;
    for (double x : v) m = std::fmax(m, std::fabs(x));
    return m;
}

std::map<std::string, std::string> param_map(const ScarfParams& p) {
    return {{"alpha", p.alpha.str()}, {"beta", p.beta.str()}};
}

RelationRecord grid_relation(const std::string& name, const std::string& variant, const ScarfParams& p,
                             const Relation& rel, bool expected, const RelationOptions& opt) {
    RelationRecord r{name, variant, param_map(p), 0.0, {}, std::nullopt, "", ""};
    for (int N : opt.grids) {
        Grid g(N, kPi / 2);
        double m = 0.0;
        for (const auto& f : relation_test_functions(g)) m = std::fmax(m, max_abs(rel(g, f, opt.accuracy)));
        r.residuals.push_back(m);
    }
    r.residual = r.residuals.back();
    const std::size_t G = r.residuals.size();
    if (G >= 2 && r.residual > opt.roundoff)
        r.order = std::log(r.residuals[G - 2] / r.residuals[G - 1]) /
                  std::log(double(opt.grids[G - 1]) / opt.grids[G - 2]);
    const bool holds = r.residual < opt.tol && (r.residual <= opt.roundoff || (r.order && *r.order >= opt.min_order));
    if (expected)
        r.verdict = holds ? "pass" : "fail";
    else
        r.verdict = holds ? "consistent" : "discrepancy";
    return r;
}

RelationRecord exact_record(const std::string& name, const ScarfParams& p, bool ok, const std::string& note,
                            bool expected = true) {
    RelationRecord r{name, expected ? "exact" : "printed", param_map(p), ok ? 0.0 : 1.0, {}, std::nullopt, "", note};
    if (expected)
        r.verdict = ok ? "pass" : "fail";
    else
        r.verdict = ok ? "consistent" : "discrepancy";
    return r;
}

}  // namespace

RelationReport verify_operator_relations(const ScarfParams& p, int D, const RelationOptions& opt) {
    p.validate();
    if (D < 2) throw InvalidParams("verify_operator_relations: degree bound must be >= 2");
    RelationReport rep;
    const Rational two(2);
    const Jacobi1Params jp = p.jacobi();

    // --- exact, gauged picture
    const ReflOp S = gauged_supercharge(p);
    {
        bool ok = true;
        std::string note;
        for (int n = 0; n <= D && ok; ++n) {
            const Poly P = construct_oracle(n, jp);
            const Rational s = supercharge_eigenvalue(n, p);
            ok = apply(S, P) == P * s && s * s / Rational(8) == scarf_energy(n, p) &&
                 s + p.alpha + p.beta + Rational(1) == eigenvalue(n, jp);
            if (!ok) note = "fails at n=" + std::to_string(n);
        }
        rep.records.push_back(exact_record("2sqrt2 Q~ P_n = s_n P_n (417), s_n^2/8 = E_n (418)", p, ok, note));
    }
    const ScarfParams up{p.alpha, p.beta + two}, down{p.alpha, p.beta - two};
    const ReflOp T = dunkl(p.alpha / two);
    const XRepair xr = repair_x(p);
    {
        const int j = first_difference(gauged_x_cleared(p, xr.c), ReflOp::mul(one_minus_y2()) * T, D);
        rep.records.push_back(exact_record("corrected gauged X = T_{alpha/2}", p,
                                           j < 0 && xr.c == (p.beta + Rational(1)) / two,
                                           "repaired tan coefficient c = " + xr.c.str()));
        rep.records.push_back(exact_record("printed X annihilates Psi_0 (431, n=0)", p, xr.c == xr.printed_c,
                                           "printed c = " + xr.printed_c.str() + ", required c = " + xr.c.str(),
                                           false));
    }
    {
        bool ok = true;
        std::string note;
        const Jacobi1Params jup = up.jacobi();
        for (int n = 1; n <= D && ok; ++n) {
            ok = apply(T, construct_oracle(n, jp)) == construct_oracle(n - 1, jup) * dunkl_bracket(n, p.alpha);
            if (!ok) note = "fails at n=" + std::to_string(n);
        }
        rep.records.push_back(exact_record("T_{alpha/2} P_n = [n]_alpha P_{n-1}^{(alpha,beta+2)} (431)", p, ok, note));
    }
    {
        const ReflOp lhs = gauged_supercharge(up) * T + T * S;
        rep.records.push_back(exact_record("gauged Q_{beta+2} X + X Q_beta = 0", p, first_difference(lhs, ReflOp(), D) < 0, ""));
    }
    const Rational cy = (p.beta - Rational(1)) / two;
    {
        const ReflOp Y = gauged_y(p, cy);
        const ReflOp lhs = gauged_supercharge(down) * Y + Y * S;
        rep.records.push_back(exact_record("gauged Q_{beta-2} Y + Y Q_beta = 0", p, first_difference(lhs, ReflOp(), D) < 0, ""));
    }
    {
        const ReflOp Yup = gauged_y(up, p.beta / two + Rational(1, 2));  // (beta+2-1)/2
        const ReflOp lhs = Yup * T;
        const Rational k = (p.alpha + p.beta + Rational(1)) * (p.alpha - p.beta - Rational(1)) / Rational(4);
        const ReflOp rhs = S * S * Rational(1, 4) + S * (p.alpha / two) + ReflOp::identity() * k;
        rep.records.push_back(exact_record("gauged Y_{beta+2} X_beta = 2H + sqrt2 alpha Q + const", p,
                                           first_difference(lhs, rhs, D) < 0, ""));
    }
    try {
        const YRepair yr = repair_y(p);
        bool ok = yr.c == cy;
        for (int n = 0; n < 3; ++n) ok = ok && yr.k[n] == y_constant(n, p);
        std::string note = "repaired c = " + yr.c.str() + ", k = {" + yr.k[0].str() + ", " + yr.k[1].str() + ", " +
                           yr.k[2].str() + "}";
        const ReflOp Y = gauged_y(p, yr.c);
        const Jacobi1Params jdown = down.jacobi();
        const int top = std::min(D, 12);
        for (int n = 0; n <= top && ok; ++n) {
            ok = apply(Y, construct_oracle(n, jp)) == construct_oracle(n + 1, jdown) * y_constant(n, p);
            if (!ok) note += "; fails at n=" + std::to_string(n);
        }
        rep.records.push_back(exact_record("Y~ P_n = (beta-1+[n+1]_alpha) P_{n+1}^{(alpha,beta-2)} (432)", p, ok, note));
        bool printed_ok = yr.c == yr.printed_c;
        for (int n = 0; n < 3; ++n) printed_ok = printed_ok && yr.k[n] == yr.printed_k[n];
        rep.records.push_back(exact_record("printed Y (430) with constant beta-1+[n]_alpha (432)", p, printed_ok,
                                           "printed c = " + yr.printed_c.str() + ", printed k = {" +
                                               yr.printed_k[0].str() + ", " + yr.printed_k[1].str() + ", " +
                                               yr.printed_k[2].str() + "}",
                                           false));
    } catch (const DegenerateSpectrum& e) {
        RelationRecord r{"Y~ P_n = (beta-1+[n+1]_alpha) P_{n+1}^{(alpha,beta-2)} (432)", "exact", param_map(p), 0.0, {},
                         std::nullopt, "skipped", std::string("target family degenerate: ") + e.what()};
        rep.records.push_back(r);
    }

    // --- grid, analytic operators (need alpha >= 0)
    if (p.alpha < Rational(0)) return rep;
    const double a = p.a(), b = p.b();
    auto app = [](const DiffReflOp& op) {
        return [op](const Grid& g, const Vec& f, int acc) { return op.apply(g, f, acc); };
    };
    const auto Q = app(scarf_Q(a, b)), H = app(scarf_H(a, b));
    const auto Qm = app(scarf_Q(a, -b)), Hm = app(scarf_H(a, -b));
    const auto Qup = app(scarf_Q(a, b + 2)), Qdown = app(scarf_Q(a, b - 2));

    rep.records.push_back(grid_relation("Q^2 = H", "corrected", p,
                                        [&](const Grid& g, const Vec& f, int acc) {
                                            return combine(Q(g, Q(g, f, acc), acc), 1, H(g, f, acc), -1);
                                        },
                                        true, opt));
    rep.records.push_back(grid_relation("R Q R = -Q_{alpha,-beta} (424)", "corrected", p,
                                        [&](const Grid& g, const Vec& f, int acc) {
                                            return combine(reversed(Q(g, reversed(f), acc)), 1, Qm(g, f, acc), 1);
                                        },
                                        true, opt));
    rep.records.push_back(grid_relation("R H R = H_{alpha,-beta} (425)", "corrected", p,
                                        [&](const Grid& g, const Vec& f, int acc) {
                                            return combine(reversed(H(g, reversed(f), acc)), 1, Hm(g, f, acc), -1);
                                        },
                                        true, opt));
    for (Variant v : {Variant::corrected, Variant::printed}) {
        const bool corrected = v == Variant::corrected;
        const auto X = app(intertwiner_X(a, x_tan_coefficient(b, v)));
        const auto Y = app(intertwiner_Y(a, y_tan_coefficient(b, v)));
        rep.records.push_back(grid_relation("Q_{beta+2} X + X Q_beta = 0", to_string(v), p,
                                            [&](const Grid& g, const Vec& f, int acc) {
                                                return combine(Qup(g, X(g, f, acc), acc), 1, X(g, Q(g, f, acc), acc), 1);
                                            },
                                            corrected, opt));
        rep.records.push_back(grid_relation("Q_{beta-2} Y + Y Q_beta = 0", to_string(v), p,
                                            [&](const Grid& g, const Vec& f, int acc) {
                                                return combine(Qdown(g, Y(g, f, acc), acc), 1, Y(g, Q(g, f, acc), acc), 1);
                                            },
                                            corrected, opt));
        // corrected: Y_{a,b+2} X_{a,b}; printed: Y_{a,b+1} X_{a,b+1} as typeset
        const double cx = corrected ? x_tan_coefficient(b, v) : x_tan_coefficient(b + 1, v);
        const double cyy = corrected ? y_tan_coefficient(b + 2, v) : y_tan_coefficient(b + 1, v);
        const auto Xp = app(intertwiner_X(a, cx)), Yp = app(intertwiner_Y(a, cyy));
        const double k = 0.25 * (a + b + 1) * (a - b - 1);
        auto rec = grid_relation(corrected ? "Y_{beta+2} X_beta = 2H + sqrt2 alpha Q + const"
                                           : "Y_{beta+1} X_{beta+1} = 2H + sqrt2 alpha Q + const",
                                 to_string(v), p,
                                 [&](const Grid& g, const Vec& f, int acc) {
                                     Vec rhs = combine(H(g, f, acc), 2, Q(g, f, acc), kS2 * a);
                                     rhs = combine(rhs, 1, f, k);
                                     return combine(Yp(g, Xp(g, f, acc), acc), 1, rhs, -1);
                                 },
                                 corrected, opt);
        if (!corrected)
            rec.note = "printed tan coefficients at beta+1 are (beta+1)/2, the corrected X_beta and Y_{beta+2}";
        rep.records.push_back(rec);

        // ground-state annihilation, pointwise with the analytic derivative
        Grid g(opt.grids.back(), kPi / 2);
        const double c = x_tan_coefficient(b, v);
        double m = 0.0, scale = 0.0;
        for (double x : g.nodes()) {
            m = std::fmax(m, std::fabs(x_on_ground_state(p, c, x)));
            scale = std::fmax(scale, std::fabs(ground_state(x, p)));
        }
        RelationRecord r{"X Psi_0 = 0 (431, n=0)", to_string(v), param_map(p), m / scale, {m / scale}, std::nullopt,
                         "", "max |X Psi_0| / max |Psi_0| on the nodes"};
        const bool holds = m / scale < opt.tol;
        r.verdict = corrected ? (holds ? "pass" : "fail") : (holds ? "consistent" : "discrepancy");
        if (!corrected) r.note += "; printed residual is -tan(x)/2 Psi_0, max " + fmt(m / scale);
        rep.records.push_back(r);
    }
    return rep;
}

}  // namespace rsusy
