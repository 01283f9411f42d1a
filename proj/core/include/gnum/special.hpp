#pragma once

#include <complex>

namespace gnum {

using cplx = std::complex<double>;

inline constexpr double kEulerGamma = 0.57721566490153286061;

// Exponential integral E1(z) = int_z^inf e^{-t}/t dt, principal branch.
cplx expint_e1(cplx z);
double expint_e1(double x);

// Entire function Ein(z) = int_0^z (1 - e^{-t})/t dt.
cplx ein(cplx z);
double ein(double x);

// int_a^b e^{-c u}/u du for 0 < a <= b, stable for small |c|.
cplx exp_over_u(cplx c, double a, double b);

// sum_{k>=1} x^k/(k k!) = Ein(-x) with the sign flipped; positive series.
double ein_neg(double x);

}  // namespace gnum
