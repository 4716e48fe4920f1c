#pragma once

#include "rsusy/opalg/reflop.hpp"

#include <functional>

namespace rsusy {

// Monic degree-n P with op P = lambda P, by back substitution on the
// upper-triangular basis matrix of a degree-preserving op.
// DegenerateSpectrum when some diagonal entry below n equals lambda.
Poly monic_eigenpolynomial(const ReflOp& op, int n, const Rational& lambda);
// same, from a precomputed basis matrix of size >= n+1
Poly monic_eigenpolynomial(const RatMatrix& A, int n, const Rational& lambda);

// Monic degree-n polynomial orthogonal to 1..y^{n-1} under the moment functional.
Poly gram_monic(int n, const std::function<Rational(int)>& moment);

// sum_ij p_i q_j m_{i+j}
Rational moment_inner(const Poly& p, const Poly& q, const std::function<Rational(int)>& moment);

}  // namespace rsusy
