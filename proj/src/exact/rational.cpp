#include "rsusy/exact/rational.hpp"

#include "rsusy/errors.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace rsusy {

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZero("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

static bool all_digits(const std::string& s, std::size_t from) {
    if (from >= s.size()) return false;
    for (std::size_t i = from; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Rational Rational::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    std::size_t start = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? 1 : 0;
    if (!all_digits(num, start) || !all_digits(den, 0))
        throw std::invalid_argument("not a rational: '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    if (is_integer()) return num_str();
    return num_str() + "/" + den_str();
}

long Rational::to_long() const {
    mpz_class t = q_.get_num() / q_.get_den();
    if (!t.fits_slong_p()) throw std::overflow_error("Rational::to_long overflow");
    return t.get_si();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(int k) const {
    if (k < 0) return Rational(1) / pow(-k);
    mpq_class r(1), b(q_);
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return Rational(r);
}

}  // namespace rsusy
