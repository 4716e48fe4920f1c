#include "rsusy/jacobi/little_jacobi.hpp"

#include "rsusy/exact/hypergeometric.hpp"
#include "rsusy/opalg/construct.hpp"

namespace rsusy {

namespace {

const Rational kHalf(1, 2);

Rational ab1(const Jacobi1Params& p) { return p.alpha / 2 + p.beta / 2 + Rational(1); }

// 2F1(a, b; c; y^2) as a polynomial in y
Poly f21_in_y2(const Rational& a, const Rational& b, const Rational& c) {
    std::vector<Rational> zc;
    try {
        zc = hyp_coefficients(HypSeries{{a, b}, {c}, Rational(0), std::nullopt});
    } catch (const DivisionByZero& e) {
        throw InvalidParams(std::string("explicit form: ") + e.what());
    }
    std::vector<Rational> yc(2 * zc.size() - 1);
    for (std::size_t m = 0; m < zc.size(); ++m) yc[2 * m] = zc[m];
    return Poly(std::move(yc));
}

}  // namespace

void Jacobi1Params::validate() const {
    if (!valid())
        throw InvalidParams("little -1 Jacobi parameters need alpha > -1 and beta > -1 (got alpha=" + alpha.str() +
                            ", beta=" + beta.str() + ")");
}

MomentFunctional::MomentFunctional(Jacobi1Params p) : p_(std::move(p)) {
    p_.validate();
    c_.push_back(Rational(1));
}

void MomentFunctional::ensure(int k) const {
    const Rational a = p_.alpha / 2 + kHalf;
    const Rational b = ab1(p_);
    while (static_cast<int>(c_.size()) <= k) {
        int j = static_cast<int>(c_.size());
        if (j % 2 == 1) {
            // c_{2n-1} = c_{2n} = c_{2n-2} (a)_{n}/(b)_{n} ratio step
            int n = (j + 1) / 2;
            Rational step = (a + Rational(n - 1)) / (b + Rational(n - 1));
            c_.push_back(c_[j - 1] * step);
        } else {
            c_.push_back(c_[j - 1]);
        }
    }
}

Rational MomentFunctional::operator()(int k) const {
    ensure(k);
    return c_[k];
}

ReflOp lop(const Jacobi1Params& p) {
    const Poly one_minus_y{Rational(1), Rational(-1)};
    ReflOp op = ReflOp::mul(one_minus_y) * ReflOp::diff() * ReflOp::reflect() * Rational(2);
    op += (ReflOp::identity() - ReflOp::reflect()) * (p.alpha + p.beta + Rational(1));
    op -= ReflOp::odd_over_y() * p.alpha;
    return op;
}

Rational eigenvalue(int n, const Jacobi1Params& p) {
    if (n % 2 == 0) return Rational(-2 * n);
    return Rational(2) * (Rational(n) + p.alpha + p.beta + Rational(1));
}

Poly construct_oracle(int n, const Jacobi1Params& p) {
    return monic_eigenpolynomial(lop(p), n, eigenvalue(n, p));
}

Poly construct_gram(int n, const MomentFunctional& m) {
    m.ensure(2 * n);
    return gram_monic(n, m.fn());
}

Poly construct_explicit(int n, const Jacobi1Params& p, Variant v) {
    p.validate();
    if (n == 0) return Poly(Rational(1));
    const Rational a = p.alpha, b = p.beta;
    const Rational nn(n);
    if (n % 2 == 0) {
        const int k = n / 2;
        Rational kappa = pochhammer((a + 1) / 2, k) / pochhammer(Rational(k) + a / 2 + b / 2 + Rational(1), k);
        if (k % 2) kappa = -kappa;
        Poly block = f21_in_y2(Rational(-k), (nn + a + b + 2) / 2, (a + 1) / 2);
        block += Poly::y() * f21_in_y2(Rational(1 - k), (nn + a + b + 2) / 2, (a + 3) / 2) * (nn / (a + 1));
        return block * kappa;
    }
    const int h = (n + 1) / 2;
    Rational base = (v == Variant::printed) ? Rational(n + 1, 2) : Rational(n - 1, 2);
    base += a / 2 + b / 2 + Rational(1);
    Rational kappa = pochhammer((a + 1) / 2, h) / pochhammer(base, h);
    if (h % 2) kappa = -kappa;
    Rational pref = (v == Variant::printed) ? (a + b + 1) / (a + 1) : (nn + a + b + 1) / (a + 1);
    Poly block = f21_in_y2(Rational(1 - n, 2), (nn + a + b + 1) / 2, (a + 1) / 2);
    block -= Poly::y() * f21_in_y2(Rational(1 - n, 2), (nn + a + b + 3) / 2, (a + 3) / 2) * pref;
    return block * kappa;
}

Rational inner(const Poly& p, const Poly& q, const MomentFunctional& m) {
    int need = 0;
    if (!p.is_zero() && !q.is_zero()) need = p.degree() + q.degree();
    m.ensure(need);
    return moment_inner(p, q, m.fn());
}

Rational norm_sq_closed(int n, const Jacobi1Params& p) {
    const Rational ah = p.alpha / 2 + kHalf, bh = p.beta / 2 + kHalf, c = ab1(p);
    if (n % 2 == 0) {
        const unsigned k = n / 2;
        Rational d = pochhammer(c, 2 * k);
        return factorial(k) * pochhammer(ah, k) * pochhammer(bh, k) * pochhammer(c, k) / (d * d);
    }
    const unsigned k = (n + 1) / 2;
    Rational d = pochhammer(c, 2 * k - 1);
    return factorial(k - 1) * pochhammer(ah, k) * pochhammer(bh, k) * pochhammer(c, k - 1) / (d * d);
}

Rational norm_sq_from_Nn(int n, const Jacobi1Params& p) {
    const Rational ah = p.alpha / 2 + kHalf, bh = p.beta / 2 + kHalf, c = ab1(p);
    Rational d = pochhammer(c, n);
    if (n % 2 == 0) {
        const unsigned h = n / 2;
        return factorial(h) * pochhammer(c, h) * pochhammer(ah, h) * pochhammer(bh, h) / (d * d);
    }
    const unsigned lo = (n - 1) / 2, hi = (n + 1) / 2;
    return factorial(lo) * pochhammer(c, lo) * pochhammer(ah, hi) * pochhammer(bh, hi) / (d * d);
}

Rational dunkl_bracket(int n, const Rational& alpha) {
    return n % 2 ? Rational(n) + alpha : Rational(n);
}

Rational printed_weight_moment(int k, const Jacobi1Params& p) {
    if (k == 0) return Rational(1);
    const unsigned n = (k + 1) / 2;
    return pochhammer(p.alpha / 2 + kHalf, n) / pochhammer(ab1(p) + Rational(1), n);
}

FamilyReport verify_family(const Jacobi1Params& p, int D) {
    p.validate();
    if (D < 2) throw InvalidParams("verify_family: degree bound must be >= 2");
    FamilyReport rep;
    rep.kind = "jacobi-m1";
    rep.params = {{"alpha", p.alpha}, {"beta", p.beta}};
    rep.degree = D;

    MomentFunctional m(p);
    m.ensure(2 * D);
    const ReflOp L = lop(p);
    const RatMatrix A = matrix_on_basis(L, D);

    std::vector<Poly> P;
    for (int n = 0; n <= D; ++n) {
        FamilyRecord r;
        r.n = n;
        r.eigenvalue = eigenvalue(n, p);
        try {
            r.poly = monic_eigenpolynomial(A, n, r.eigenvalue);
        } catch (const DegenerateSpectrum&) {
            r.degenerate = true;
            rep.records.push_back(r);
            P.emplace_back();
            continue;
        }
        r.residual_zero = (apply(L, r.poly) - r.poly * r.eigenvalue).is_zero();
        r.gram_agrees = construct_gram(n, m) == r.poly;
        r.norm_sq = inner(r.poly, r.poly, m);
        r.norm_match = r.norm_sq == norm_sq_closed(n, p) && norm_sq_closed(n, p) == norm_sq_from_Nn(n, p);
        r.explicit_printed_match = construct_explicit(n, p, Variant::printed) == r.poly;
        r.explicit_corrected_match = construct_explicit(n, p, Variant::corrected) == r.poly;

        const std::string tag = "n=" + std::to_string(n);
        if (!r.residual_zero) rep.oracle_failures.push_back(tag + ": eigen-equation residual nonzero");
        if (!r.gram_agrees) rep.oracle_failures.push_back(tag + ": eigen oracle differs from Gram oracle");
        if (!*r.norm_match)
            rep.norm_mismatches.push_back(tag + ": inner(P,P)=" + r.norm_sq.str() + " closed=" +
                                          norm_sq_closed(n, p).str() + " Nn-form=" + norm_sq_from_Nn(n, p).str());
        if (!*r.explicit_corrected_match)
            rep.oracle_failures.push_back(tag + ": corrected explicit form differs from oracle");
        if (!*r.explicit_printed_match)
            rep.explicit_discrepancies.push_back(tag + ": printed explicit form " +
                                                 construct_explicit(n, p, Variant::printed).str() + " vs oracle " +
                                                 r.poly.str());
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
