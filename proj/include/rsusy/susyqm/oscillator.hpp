#pragma once

#include "rsusy/errors.hpp"

#include <vector>

namespace rsusy {

// amplitudes over the number states |0>, |1>, ...
struct FockVector {
    std::vector<double> c;

    static FockVector basis(int n);
    double norm() const;
    double operator[](int n) const { return n < static_cast<int>(c.size()) ? c[n] : 0.0; }
    FockVector& operator+=(const FockVector& o);
    FockVector& operator*=(double s);
};

FockVector operator+(FockVector a, const FockVector& b);
FockVector operator-(FockVector a, const FockVector& b);
FockVector operator*(double s, FockVector a);
double max_abs_diff(const FockVector& a, const FockVector& b);

FockVector osc_a(const FockVector& v);
FockVector osc_adag(const FockVector& v);
FockVector osc_R(const FockVector& v);
// Q = ((a - a^dag) R + a + a^dag)/2
FockVector osc_q_apply(const FockVector& v);
// H = a^dag a + (1 - R)/2
FockVector osc_h_apply(const FockVector& v);
int osc_energy(int n);

// (|2n+1> + eps|2n+2>)/2 as typeset; its norm is 1/sqrt2
FockVector osc_mixed_state(int n, int eps);

double hermite_function(int n, double x);  // orthonormal
double laguerre(int n, double a, double x);

// (phi_{2n+1} + eps phi_{2n+2})/2
double osc_hermite_superposition(int n, int eps, double x);
// Laguerre form: printed x L_n^{1/2} + eps (n+1) L_{n+1}^{-1/2};
// corrected x L_n^{1/2} - eps sqrt(n+1) L_{n+1}^{-1/2}; same prefactor
double osc_wavefunction(int n, int eps, double x, Variant v = Variant::corrected);
// corrected form divided by the Hermite superposition: sqrt2 / 2^n
double osc_wavefunction_constant(int n);

}  // namespace rsusy
