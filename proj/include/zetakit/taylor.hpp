#pragma once

#include <map>
#include <vector>

#include "zetakit/numerics.hpp"

namespace zk {

// Truncated Taylor coefficients c_0..c_N of a characteristic function about 0.
struct PowerSeries {
    std::vector<cplx> c;

    int order() const { return int(c.size()) - 1; }
};

// Taylor coefficients of ln(F(z)/c_0); b[0] is always 0 and b[j] multiplies z^j.
struct LogCoeffs {
    std::vector<cplx> b;
    std::vector<cplx> b_lo;  // rounding residue of b (may be empty); lets exp_series invert exactly
};

LogCoeffs log_coeffs(const PowerSeries& series);

// Inverse of log_coeffs: coefficients of c0 * exp(sum_j b_j z^j).
PowerSeries exp_series(const LogCoeffs& logc, cplx c0 = 1.0);

// zeta(n) = -n b_n. Requires n > alpha unless allow_extended is set.
cplx zeta_pos_int(const PowerSeries& series, int n, double alpha, bool allow_extended = false);

// Same value assembled from ordinary Bell polynomials of c_1, c_2, ...
cplx zeta_via_bell(const PowerSeries& series, int n);

// Right-hand side of the universal exact sum rule, expressed through zeta(1..n-1).
cplx exact_sum_rule(const PowerSeries& series, int n, const std::map<int, cplx>& zeta_values);

// Coefficients of c_0^{-1} F(z) exp(-sum_{m <= floor(alpha)} b_m z^m).
PowerSeries hadamardize(const PowerSeries& series, double alpha);

}  // namespace zk
