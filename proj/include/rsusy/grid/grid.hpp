#pragma once

#include <vector>

namespace rsusy {

// Midpoint grid on (-b, b): x_i = -b + (i + 1/2) h, h = 2b/N, N even.
// Nodes are built from the positive half so x_{N-1-i} == -x_i exactly.
class Grid {
public:
    Grid(int N, double b);

    int N() const { return N_; }
    double b() const { return b_; }
    double h() const { return h_; }
    double x(int i) const { return x_[i]; }
    const std::vector<double>& nodes() const { return x_; }
    int mirror(int i) const { return N_ - 1 - i; }

private:
    int N_;
    double b_, h_;
    std::vector<double> x_;
};

}  // namespace rsusy
