#pragma once

#include "rsusy/exact/rational.hpp"

#include <climits>
#include <initializer_list>
#include <string>
#include <vector>

namespace rsusy {

// Dense polynomial in y over Rational; c_[i] is the coefficient of y^i.
class Poly {
public:
    static constexpr int kZeroDegree = INT_MIN;  // degree of the zero polynomial

    Poly() = default;
    Poly(std::initializer_list<Rational> c) : c_(c) { trim(); }
    explicit Poly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
    Poly(const Rational& constant) : c_{constant} { trim(); }

    static Poly monomial(int k, const Rational& coeff = Rational(1));
    static Poly y() { return monomial(1); }

    int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == Rational(1); }
    Rational coeff(int i) const;
    const Rational& leading() const { return c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& y) const;
    double eval(double y) const;

    Poly derivative() const;
    Poly reflected() const;    // p(-y)
    Poly odd_over_y() const;   // (p(y) - p(-y))/y
    Poly monic() const;        // divides by the leading coefficient

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const { return *this * Rational(-1); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    // e.g. "y^2 - 1/2*y - 1/4"
    std::string str(const std::string& var = "y") const;

private:
    void trim();
    std::vector<Rational> c_;
};

}  // namespace rsusy
