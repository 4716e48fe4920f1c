#include "rsusy/grid/grid.hpp"

#include "rsusy/errors.hpp"

namespace rsusy {

Grid::Grid(int N, double b) : N_(N), b_(b), h_(2 * b / N), x_(N) {
    if (N <= 0 || N % 2) throw InvalidParams("Grid: N must be even and positive");
    if (!(b > 0)) throw InvalidParams("Grid: half-width must be positive");
    const int half = N / 2;
    for (int j = 0; j < half; ++j) {
        double xp = (j + 0.5) * h_;
        x_[half + j] = xp;
        x_[half - 1 - j] = -xp;
    }
}

}  // namespace rsusy
