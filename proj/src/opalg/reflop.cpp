#include "rsusy/opalg/reflop.hpp"

#include "rsusy/errors.hpp"

namespace rsusy {

namespace {

Poly apply_primitive(const Primitive& pr, const Poly& p) {
    switch (pr.kind) {
        case Primitive::Kind::MulPoly: return pr.p * p;
        case Primitive::Kind::Diff: return p.derivative();
        case Primitive::Kind::Reflect: return p.reflected();
        case Primitive::Kind::OddOverY: return p.odd_over_y();
    }
    return p;
}

// merge neighbouring multiplications and cancel R*R
std::vector<Primitive> simplify(const std::vector<Primitive>& ops) {
    std::vector<Primitive> out;
    for (const auto& pr : ops) {
        if (!out.empty()) {
            auto& last = out.back();
            if (pr.kind == Primitive::Kind::MulPoly && last.kind == Primitive::Kind::MulPoly) {
                last.p = last.p * pr.p;
                continue;
            }
            if (pr.kind == Primitive::Kind::Reflect && last.kind == Primitive::Kind::Reflect) {
                out.pop_back();
                continue;
            }
        }
        out.push_back(pr);
    }
    return out;
}

std::string primitive_str(const Primitive& pr) {
    switch (pr.kind) {
        case Primitive::Kind::Diff: return "∂";
        case Primitive::Kind::Reflect: return "R";
        case Primitive::Kind::OddOverY: return "(1/y)(1-R)";
        case Primitive::Kind::MulPoly: {
            std::string s = pr.p.str();
            if (pr.p.coeffs().size() == 1 || s == "y") return s;
            int nonzero = 0;
            for (const auto& c : pr.p.coeffs()) nonzero += !c.is_zero();
            return nonzero == 1 ? s : "(" + s + ")";
        }
    }
    return "?";
}

}  // namespace

ReflOp ReflOp::identity() {
    ReflOp op;
    op.terms_.push_back(Chain{});
    return op;
}

ReflOp ReflOp::mul(const Poly& p) {
    ReflOp op;
    op.add_chain(Chain{Rational(1), {Primitive{Primitive::Kind::MulPoly, p}}});
    return op;
}

ReflOp ReflOp::diff() {
    ReflOp op;
    op.add_chain(Chain{Rational(1), {Primitive{Primitive::Kind::Diff, {}}}});
    return op;
}

ReflOp ReflOp::reflect() {
    ReflOp op;
    op.add_chain(Chain{Rational(1), {Primitive{Primitive::Kind::Reflect, {}}}});
    return op;
}

ReflOp ReflOp::odd_over_y() {
    ReflOp op;
    op.add_chain(Chain{Rational(1), {Primitive{Primitive::Kind::OddOverY, {}}}});
    return op;
}

void ReflOp::add_chain(Chain c) {
    if (c.scalar.is_zero()) return;
    c.ops = simplify(c.ops);
    for (auto& t : terms_) {
        if (t.ops == c.ops) {
            t.scalar += c.scalar;
            if (t.scalar.is_zero()) terms_.erase(terms_.begin() + (&t - terms_.data()));
            return;
        }
    }
    terms_.push_back(std::move(c));
}

ReflOp& ReflOp::operator+=(const ReflOp& o) {
    for (const auto& c : o.terms_) add_chain(c);
    return *this;
}

ReflOp& ReflOp::operator-=(const ReflOp& o) {
    for (auto c : o.terms_) {
        c.scalar = -c.scalar;
        add_chain(std::move(c));
    }
    return *this;
}

ReflOp& ReflOp::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& c : terms_) c.scalar *= s;
    return *this;
}

ReflOp operator*(const ReflOp& a, const ReflOp& b) {
    ReflOp out;
    for (const auto& ca : a.terms_)
        for (const auto& cb : b.terms_) {
            Chain c{ca.scalar * cb.scalar, ca.ops};
            c.ops.insert(c.ops.end(), cb.ops.begin(), cb.ops.end());
            out.add_chain(std::move(c));
        }
    return out;
}

ReflOp compose(const ReflOp& a, const ReflOp& b) { return a * b; }

Poly apply(const ReflOp& op, const Poly& p) {
    Poly out;
    for (const auto& c : op.terms()) {
        Poly q = p;
        for (auto it = c.ops.rbegin(); it != c.ops.rend(); ++it) q = apply_primitive(*it, q);
        out += q * c.scalar;
    }
    return out;
}

ReflOp dunkl(const Rational& mu) { return ReflOp::diff() + ReflOp::odd_over_y() * mu; }

Poly dunkl(const Rational& mu, const Poly& p) { return p.derivative() + p.odd_over_y() * mu; }

RatMatrix matrix_on_basis(const ReflOp& op, int D) {
    RatMatrix m(D + 1, D + 1);
    for (int j = 0; j <= D; ++j) {
        Poly img = apply(op, Poly::monomial(j));
        if (img.degree() > D)
            throw DegreeOverflow("matrix_on_basis: image of y^" + std::to_string(j) + " has degree " +
                                 std::to_string(img.degree()) + " > " + std::to_string(D));
        for (int i = 0; i <= img.degree(); ++i) m(i, j) = img.coeff(i);
    }
    return m;
}

std::string to_string(const ReflOp& op) {
    if (op.terms().empty()) return "0";
    std::string out;
    for (const auto& c : op.terms()) {
        Rational mag = c.scalar.abs();
        if (out.empty())
            out += c.scalar.sign() < 0 ? "-" : "";
        else
            out += c.scalar.sign() < 0 ? " - " : " + ";
        std::string body;
        for (const auto& pr : c.ops) body += (body.empty() ? "" : "·") + primitive_str(pr);
        if (body.empty())
            out += mag.str();
        else if (mag == Rational(1))
            out += body;
        else
            out += mag.str() + "·" + body;
    }
    return out;
}

}  // namespace rsusy
