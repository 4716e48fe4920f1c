#pragma once

namespace rsusy {

// B(x,y) via log-gamma; DomainError unless x, y > 0
double beta_num(double x, double y);

}  // namespace rsusy
