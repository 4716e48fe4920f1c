#include "doctest.h"

#include "rsusy/exact/special.hpp"
#include "rsusy/gegenbauer/gegenbauer.hpp"

#include <cmath>

using namespace rsusy;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }
Poly Y(int k) { return Poly::monomial(k); }

const std::vector<GegParams> kFuzz = {{R(1, 2), R(1)}, {R(0), R(0)}, {R(1, 3), R(2)}, {R(2), R(-1, 2)}, {R(3, 2), R(1, 5)}};

}  // namespace

TEST_CASE("lop_geg examples") {
    GegParams p{R(1, 2), R(1)};
    CHECK(apply(lop_geg(p), Poly(R(1))).is_zero());
    for (const auto& q : kFuzz)
        CHECK(apply(lop_geg(q), Y(1)) == Y(1) * (R(-2) * (q.alpha + R(1)) * (R(2) * q.mu + R(1))));
    CHECK(apply(lop_geg(p), Y(2)).degree() == 2);
}

TEST_CASE("eigenvalue_geg examples") {
    GegParams p{R(1, 2), R(1)};
    CHECK(eigenvalue_geg(0, p) == R(0));
    CHECK(eigenvalue_geg(1, p) == R(-8));
    CHECK(eigenvalue_geg(2, p) == R(-12));
}

TEST_CASE("construct_geg examples") {
    GegParams p{R(1, 2), R(1)};
    CHECK(construct_geg(1, p) == Y(1));
    CHECK(construct_geg(2, p) == Y(2) - Poly(R(1, 3)));
    CHECK(construct_geg(0, p) == Poly(R(1)));
    GegMoments m(p);
    CHECK(construct_geg_gram(2, m) == Y(2) - Poly(R(1, 3)));
}

TEST_CASE("moment ratio confirmed against beta_num") {
    // m_{2n} = B(mu+n+1/2, alpha+1) / B(mu+1/2, alpha+1)
    for (const auto& p : kFuzz) {
        GegMoments m(p);
        double mu = p.mu.to_double(), a = p.alpha.to_double();
        for (int n = 0; n <= 8; ++n) {
            CHECK(m(2 * n + 1) == R(0));
            CHECK(m(2 * n).to_double() ==
                  doctest::Approx(beta_num(mu + n + 0.5, a + 1) / beta_num(mu + 0.5, a + 1)).epsilon(1e-12));
        }
    }
}

TEST_CASE("eigen residual, parity, Gram agreement, orthogonality") {
    for (const auto& p : kFuzz) {
        ReflOp L = lop_geg(p);
        GegMoments m(p);
        std::vector<Poly> P;
        for (int n = 0; n <= 24; ++n) {
            P.push_back(construct_geg(n, p));
            CHECK((apply(L, P[n]) - P[n] * eigenvalue_geg(n, p)).is_zero());
            CHECK(P[n].reflected() == (n % 2 ? -P[n] : P[n]));
        }
        for (int n = 0; n <= 16; ++n) {
            CHECK(construct_geg_gram(n, m) == P[n]);
            for (int k = 0; k < n; ++k) CHECK(inner(P[k], P[n], m).is_zero());
        }
    }
}

TEST_CASE("geg_potentials special cases") {
    for (double x : {0.3, 0.7, 1.2, -0.9}) {
        // mu = 0: Poschl-Teller, exact with the corrected constants, offset 1/4 when printed
        for (auto a : {R(1), R(1, 3), R(5, 2)}) {
            GegParams p{R(0), a};
            auto c = geg_potentials(p, x, Variant::corrected);
            auto pr = geg_potentials(p, x, Variant::printed);
            CHECK(c.U1 == doctest::Approx(0.0));
            CHECK(pr.U1 == doctest::Approx(0.0));
            CHECK(c.U0 == doctest::Approx(pt_potential(a.to_double(), x)).epsilon(1e-12));
            CHECK(pr.U0 - pt_potential(a.to_double(), x) == doctest::Approx(0.25).epsilon(1e-12));
        }
        // alpha = -1/2: H_S
        for (auto mu : {R(1), R(1, 2), R(7, 3)}) {
            GegParams p{mu, R(-1, 2)};
            auto c = geg_potentials(p, x, Variant::corrected);
            auto [s, r] = hs_potential(mu.to_double(), x);
            CHECK(c.U0 == doctest::Approx(s).epsilon(1e-12));
            CHECK(c.U1 == doctest::Approx(r).epsilon(1e-12));
        }
    }
    auto v = geg_potentials({R(1, 2), R(1)}, M_PI / 4);
    CHECK(v.F0 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(geg_potentials({R(1, 2), R(1)}, 0.0), DomainError);
    CHECK_THROWS_AS(geg_potentials({R(1, 2), R(1)}, M_PI / 2), DomainError);
}

namespace {

// H F0 P(sin x) against -F0 (L P)(sin x) by central differences; returns max relative residual
double ground_state_residual(const GegParams& p, const Poly& P, int parity, Variant v) {
    Poly LP = apply(lop_geg(p), P);
    double worst = 0;
    const double h = 1e-4;
    for (double x : {0.2, 0.5, 0.9, 1.3}) {
        auto psi = [&](double t) { return geg_potentials(p, t, v).F0 * P.eval(std::sin(t)); };
        double d2 = (psi(x + h) - 2 * psi(x) + psi(x - h)) / (h * h);
        auto pv = geg_potentials(p, x, v);
        double Hpsi = -d2 + pv.U0 * psi(x) + pv.U1 * parity * psi(x);
        double rhs = -pv.F0 * LP.eval(std::sin(x));
        worst = std::max(worst, std::fabs(Hpsi - rhs) / (1 + std::fabs(rhs)));
    }
    return worst;
}

}  // namespace

TEST_CASE("corrected potentials reproduce H = -F0 L F0^{-1}; printed ones do not") {
    GegParams p{R(1, 2), R(1)};
    for (int n = 0; n <= 3; ++n) {
        Poly P = construct_geg(n, p);
        int parity = n % 2 ? -1 : 1;
        CHECK(ground_state_residual(p, P, parity, Variant::corrected) < 1e-5);
        CHECK(ground_state_residual(p, P, parity, Variant::printed) > 1e-2);
    }
}

TEST_CASE("csm two-particle identity") {
    CHECK(csm_two_particle_check(R(1), 0.9, 0.1) < 1e-12);
    CHECK(csm_two_particle_check(R(1, 2), 1.0, -0.3) < 1e-12);
    CHECK_THROWS_AS(csm_two_particle_check(R(1), 0.4, 0.4), DomainError);
}

TEST_CASE("verify_geg_family") {
    FamilyReport r = verify_geg_family({R(1, 2), R(1)}, 12);
    CHECK(r.oracle_ok());
    CHECK(r.kind == "gegenbauer");
    CHECK(r.records[2].poly == Y(2) - Poly(R(1, 3)));
    CHECK_THROWS_AS(verify_geg_family({R(-1), R(1)}, 4), InvalidParams);
}
