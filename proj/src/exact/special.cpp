#include "rsusy/exact/special.hpp"

#include "rsusy/errors.hpp"

#include <cmath>

namespace rsusy {

double beta_num(double x, double y) {
    if (!(x > 0.0) || !(y > 0.0)) throw DomainError("beta_num: arguments must be positive");
    return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

}  // namespace rsusy
