#pragma once

#include "rsusy/exact/rational.hpp"

#include <optional>
#include <vector>

namespace rsusy {

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return r_; }
    int cols() const { return c_; }
    Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

private:
    int r_ = 0, c_ = 0;
    std::vector<Rational> a_;
};

// Exact Gauss-Jordan on A x = b (A may be rectangular). Returns nullopt when the
// system is inconsistent; throws InvalidParams when the solution is not unique.
std::optional<std::vector<Rational>> solve_exact(RatMatrix A, std::vector<Rational> b);

}  // namespace rsusy
