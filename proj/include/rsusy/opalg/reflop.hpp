#pragma once

#include "rsusy/opalg/poly.hpp"
#include "rsusy/opalg/ratmatrix.hpp"

#include <string>
#include <vector>

namespace rsusy {

struct Primitive {
    enum class Kind { MulPoly, Diff, Reflect, OddOverY };
    Kind kind;
    Poly p;  // MulPoly only

    friend bool operator==(const Primitive&, const Primitive&) = default;
};

// scalar * ops[0] * ops[1] * ... ; the last primitive acts first
struct Chain {
    Rational scalar{1};
    std::vector<Primitive> ops;
};

class ReflOp {
public:
    ReflOp() = default;  // zero operator

    static ReflOp identity();
    static ReflOp mul(const Poly& p);
    static ReflOp diff();
    static ReflOp reflect();
    static ReflOp odd_over_y();

    const std::vector<Chain>& terms() const { return terms_; }
    void add_chain(Chain c);

    ReflOp& operator+=(const ReflOp& o);
    ReflOp& operator-=(const ReflOp& o);
    ReflOp& operator*=(const Rational& s);
    friend ReflOp operator+(ReflOp a, const ReflOp& b) { return a += b; }
    friend ReflOp operator-(ReflOp a, const ReflOp& b) { return a -= b; }
    friend ReflOp operator*(ReflOp a, const Rational& s) { return a *= s; }
    friend ReflOp operator*(const Rational& s, ReflOp a) { return a *= s; }
    // operator product: (a * b) p = a(b(p))
    friend ReflOp operator*(const ReflOp& a, const ReflOp& b);

private:
    std::vector<Chain> terms_;
};

Poly apply(const ReflOp& op, const Poly& p);
ReflOp compose(const ReflOp& a, const ReflOp& b);

// T_mu = d/dy + mu (1/y)(1 - R)
ReflOp dunkl(const Rational& mu);
Poly dunkl(const Rational& mu, const Poly& p);

// column j = coefficients of apply(op, y^j); DegreeOverflow if an image leaves degree D
RatMatrix matrix_on_basis(const ReflOp& op, int D);

// textual form such as "2*(1 - y)·∂·R - (1/y)(1-R)"
std::string to_string(const ReflOp& op);

}  // namespace rsusy
