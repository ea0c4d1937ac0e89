#pragma once

#include "zetakit/numerics.hpp"

// Evaluation of F(z) = Ai(-z) and F'(z) = -Ai'(-z).
namespace zk::airy {

inline constexpr double ai0 = 0.35502805388781723926;   // Ai(0)
inline constexpr double aip0 = -0.25881940379280679840;  // Ai'(0)

// Dispatches on z between the three representations below.
ScaledValue ai_neg(cplx z);

// Maclaurin series about 0; accurate for |z| <= 8.
ScaledValue taylor_origin(cplx z);

// Taylor series re-centred on the real axis; 0.25 <= Re z <= 9.25 and |Im z| <= 0.5.
ScaledValue taylor_real_axis(cplx z);
bool in_real_axis_strip(cplx z);

// Large-|z| asymptotic forms: oscillatory for |arg z| < pi/2, exponential in -z otherwise.
ScaledValue asymptotic(cplx z);

// T(t) of the zero expansion; the n-th zero of Ai(-z) is about T(3pi/8 (4n - 1)).
cplx zero_asymptotic(cplx n);

// n-th zero (n >= 1) of Ai(-z) refined by Newton's method.
double zero_refined(int n);

}  // namespace zk::airy
