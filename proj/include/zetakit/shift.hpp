#pragma once

#include <optional>

#include "zetakit/asym.hpp"
#include "zetakit/taylor.hpp"

namespace zk {

// lambda_n = A a_n + B; the shifted characteristic function is F(z - B/A).
struct ShiftParams {
    cplx A = 1.0;
    cplx B = 0.0;
    cplx mu() const { return B / A; }
};

cplx mu_coeff(int p, int l, int k, int j, cplx shift, double alpha, int m);

// Large-z table of ln F(z - B/A). lnF_shift is ln F(-B/A) continued inside the sector;
// the branch angle defaults to psi + arg(A).
AsymExpansion omega_table(const AsymExpansion& asym, const ShiftParams& shift, cplx lnF_shift,
                          std::optional<double> psi_new = std::nullopt);

struct ShiftedResult {
    AsymExpansion omega;
    PoleReport report;  // residues already carry the A^{-s} factor
};

ShiftedResult shifted_values(const AsymExpansion& asym, const ShiftParams& shift, cplx lnF_shift,
                             std::optional<double> psi_new = std::nullopt);

// zeta of the shifted sequence at a nonzero integer n. logc_shifted holds the log
// coefficients of F(z - B/A) about 0 and is needed whenever n >= 1.
cplx shifted_zeta_int(const ShiftedResult& res, const ShiftParams& shift,
                      const LogCoeffs* logc_shifted, int n);

struct RightmostPoleCheck {
    int order_before;
    int order_after;
    cplx residue_ratio;
};

RightmostPoleCheck rightmost_pole_check(const AsymExpansion& asym, const ShiftParams& shift);

}  // namespace zk
