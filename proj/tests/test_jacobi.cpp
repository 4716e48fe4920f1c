#include "doctest.h"

#include "rsusy/exact/hypergeometric.hpp"
#include "rsusy/exact/special.hpp"
#include "rsusy/jacobi/little_jacobi.hpp"

#include <cmath>

using namespace rsusy;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }
Poly Y(int k) { return Poly::monomial(k); }

const std::vector<Jacobi1Params> kFuzz = {
    {R(0), R(0)}, {R(1), R(1)}, {R(1, 2), R(3, 2)}, {R(1, 3), R(2)}, {R(2), R(1, 5)}};

}  // namespace

TEST_CASE("lop examples") {
    Jacobi1Params z{R(0), R(0)};
    CHECK(apply(lop(z), Poly(R(1))).is_zero());
    CHECK(apply(lop(z), Poly{R(-1, 2), R(1)}) == Poly{R(-2), R(4)});
    Poly img = apply(lop({R(1), R(1)}), Y(2));
    CHECK(img.degree() == 2);
}

TEST_CASE("eigenvalue examples") {
    CHECK(eigenvalue(2, {R(3, 7), R(5)}) == R(-4));
    CHECK(eigenvalue(0, {R(1), R(1)}) == R(0));
    CHECK(eigenvalue(1, {R(0), R(0)}) == R(4));
}

TEST_CASE("construct_oracle examples") {
    Jacobi1Params z{R(0), R(0)};
    CHECK(construct_oracle(1, z) == Poly{R(-1, 2), R(1)});
    CHECK(construct_oracle(2, z) == Poly{R(-1, 4), R(-1, 2), R(1)});
    CHECK(construct_oracle(0, z) == Poly(R(1)));
}

TEST_CASE("construct_explicit examples") {
    Jacobi1Params one{R(1), R(1)};
    CHECK(construct_explicit(2, one, Variant::printed) == Poly{R(-1, 3), R(-1, 3), R(1)});
    CHECK(construct_explicit(2, one, Variant::printed) == construct_oracle(2, one));
    CHECK(construct_explicit(0, one, Variant::printed) == Poly(R(1)));
    Jacobi1Params z{R(0), R(0)};
    Poly printed = construct_explicit(1, z, Variant::printed);
    CHECK(printed == Poly{R(-1, 4), R(1, 4)});
    CHECK_FALSE(printed == construct_oracle(1, z));
    CHECK(construct_explicit(1, z, Variant::corrected) == construct_oracle(1, z));
    CHECK_THROWS_AS(construct_explicit(1, {R(-3), R(0)}, Variant::printed), InvalidParams);
}

TEST_CASE("explicit forms against the oracle") {
    for (const auto& p : kFuzz)
        for (int n = 0; n <= 12; ++n) {
            Poly o = construct_oracle(n, p);
            CHECK(construct_explicit(n, p, Variant::corrected) == o);
            if (n % 2 == 0) CHECK(construct_explicit(n, p, Variant::printed) == o);
            else CHECK_FALSE(construct_explicit(n, p, Variant::printed) == o);
        }
}

TEST_CASE("inner examples") {
    Jacobi1Params z{R(0), R(0)};
    MomentFunctional m(z);
    CHECK(inner(Poly(R(1)), Poly(R(1)), m) == R(1));
    CHECK(inner(construct_oracle(1, z), Poly(R(1)), m) == R(0));
    Poly p2 = construct_oracle(2, z);
    CHECK(inner(p2, p2, m) == R(1, 16));
    CHECK(m(1) == R(1, 2));
    CHECK(m(3) == R(3, 8));
    CHECK(m(4) == R(3, 8));
}

TEST_CASE("moment functional invariants") {
    for (const auto& p : kFuzz) {
        MomentFunctional m(p);
        for (int n = 1; n <= 15; ++n) {
            CHECK(m(2 * n) == m(2 * n - 1));
            CHECK(m(2 * n) == pochhammer(p.alpha / 2 + R(1, 2), n) / pochhammer(p.alpha / 2 + p.beta / 2 + R(1), n));
        }
    }
    CHECK_THROWS_AS(MomentFunctional({R(-1), R(0)}), InvalidParams);
}

TEST_CASE("moments agree with the beta integral numerically") {
    // c_{2n} = B((a+1)/2 + n, (b+1)/2) / B((a+1)/2, (b+1)/2)
    for (const auto& p : kFuzz) {
        MomentFunctional m(p);
        double a = (p.alpha.to_double() + 1) / 2, b = (p.beta.to_double() + 1) / 2;
        for (int n = 0; n <= 6; ++n)
            CHECK(m(2 * n).to_double() == doctest::Approx(beta_num(a + n, b) / beta_num(a, b)).epsilon(1e-12));
    }
}

TEST_CASE("norm closed forms") {
    Jacobi1Params z{R(0), R(0)};
    CHECK(norm_sq_closed(2, z) == R(1, 16));
    CHECK(norm_sq_closed(1, z) == R(1, 4));
    CHECK(norm_sq_closed(0, z) == R(1));
    for (const auto& p : kFuzz)
        for (int n = 0; n <= 20; ++n) CHECK(norm_sq_closed(n, p) == norm_sq_from_Nn(n, p));
}

TEST_CASE("eigen residual, orthogonality and norms") {
    for (const auto& p : kFuzz) {
        MomentFunctional m(p);
        m.ensure(60);
        ReflOp L = lop(p);
        std::vector<Poly> P;
        for (int n = 0; n <= 30; ++n) {
            P.push_back(construct_oracle(n, p));
            CHECK((apply(L, P[n]) - P[n] * eigenvalue(n, p)).is_zero());
        }
        for (int n = 0; n <= 20; ++n) {
            CHECK(inner(P[n], P[n], m) == norm_sq_closed(n, p));
            for (int k = 0; k < n; ++k) CHECK(inner(P[k], P[n], m).is_zero());
        }
        for (int n = 0; n <= 10; ++n) CHECK(construct_gram(n, m) == P[n]);
    }
}

TEST_CASE("Dunkl lowering") {
    for (const auto& p : kFuzz) {
        Jacobi1Params up{p.alpha, p.beta + R(2)};
        CHECK(dunkl(p.alpha / 2, Poly(R(1))).is_zero());
        for (int n = 1; n <= 20; ++n)
            CHECK(dunkl(p.alpha / 2, construct_oracle(n, p)) == construct_oracle(n - 1, up) * dunkl_bracket(n, p.alpha));
    }
}

TEST_CASE("eigenvalue and supercharge consistency") {
    for (const auto& p : kFuzz)
        for (int n = 0; n <= 20; ++n) {
            Rational s = Rational(2 * n) + p.alpha + p.beta + R(1);
            CHECK(eigenvalue(n, p) - (p.alpha + p.beta + R(1)) == (n % 2 ? s : -s));
        }
}

TEST_CASE("verify_family") {
    FamilyReport r = verify_family({R(1, 2), R(3, 2)}, 20);
    CHECK(r.oracle_ok());
    CHECK(r.records.size() == 21);
    for (const auto& rec : r.records) {
        CHECK(rec.residual_zero);
        CHECK(rec.gram_agrees);
        CHECK(*rec.norm_match);
    }
    FamilyReport z = verify_family({R(0), R(0)}, 6);
    CHECK(z.oracle_ok());
    CHECK(z.explicit_discrepancies.size() == 3);  // n = 1, 3, 5
    FamilyReport one = verify_family({R(1), R(1)}, 2);
    CHECK(*one.records[2].explicit_printed_match);
    CHECK(*one.records[0].explicit_printed_match);
    CHECK_THROWS_AS(verify_family({R(-2), R(0)}, 4), InvalidParams);
    CHECK_THROWS_AS(verify_family({R(0), R(0)}, 1), InvalidParams);
}

TEST_CASE("printed weight exponent gives different moments") {
    Jacobi1Params p{R(1), R(1)};
    MomentFunctional m(p);
    CHECK(printed_weight_moment(2, p) == R(1, 3));
    CHECK(m(2) == R(1, 2));
}
