#pragma once

#include <vector>

#include "zetakit/numerics.hpp"
#include "zetakit/taylor.hpp"

namespace zk {

// Coefficients of z^(alpha - j/m) ln^k z in the large-z expansion of ln F(z),
// for 0 <= j <= N and 0 <= k <= M, along the branch ray at angle psi.
struct AsymExpansion {
    double alpha = 0.0;
    int m = 1;
    int M = 0;
    int N = 0;
    double psi = 0.0;
    cplx lnF0 = 0.0;  // ln F(0), continued inside the sector
    double delta = 0.5;
    std::vector<cplx> table;

    AsymExpansion() = default;
    AsymExpansion(double alpha, int m, int M, int N, double psi, cplx lnF0 = 0.0);

    cplx d(int j, int k) const;
    void set(int j, int k, cplx v);
    double beta(int j) const { return alpha - double(j) / m; }
    // Largest k with |d_{j,k}| above the zero threshold, or -1.
    int top_log_power(int j) const;
    // Index j with beta(j) == 0, or -1.
    int zero_index() const;
    // Index j with beta(j) == n, or -1.
    int index_of(double location) const;
    void validate() const;
};

inline constexpr double coefficient_zero_threshold = 1e-14;
inline constexpr double cancellation_warning_threshold = 1e-10;

bool is_integer_value(double x);

struct Pole {
    double location;
    int order;
    cplx residue;
    int j;
    bool possible_cancellation;
};

enum class ZeroStatus { Value, Pole, Indeterminate };

struct PoleReport {
    std::vector<Pole> poles;
    ZeroStatus zeta0_status = ZeroStatus::Value;
    cplx zeta0 = 0.0;
    bool has_zeta_prime0 = false;
    cplx zeta_prime0 = 0.0;
};

// Taylor coefficients D_1..D_N of ln(1 + sum_m C_m y^m); C[i] holds C_{i+1}.
std::vector<cplx> log_compose(const std::vector<cplx>& C);

PoleReport classify_poles(const AsymExpansion& asym);

cplx residue_at(const AsymExpansion& asym, int j);

cplx zeta_prime_zero(const AsymExpansion& asym);

// Variant for real sequences bounded below with m_neg negative elements.
cplx zeta_prime_zero_real(const AsymExpansion& asym, int m_neg);

// zeta(n) for a regular integer n != 0 with n <= alpha.
cplx zeta_int_leq_alpha(const AsymExpansion& asym, const LogCoeffs& logc, int n);

// Closed form of the asymptotic block: the prefactor e^{is(pi-psi)} sin(pi s)/pi times
// the integrals over [R, inf) of t^{-s} d/dt of the terms with j_lo <= j <= j_hi.
cplx l_asy_eval(const AsymExpansion& asym, cplx s, double R);
cplx l_asy_partial(const AsymExpansion& asym, cplx s, double R, int j_lo, int j_hi);

// e^{is(pi-psi)} sin(pi s)/pi
cplx ray_prefactor(cplx s, double psi);

}  // namespace zk
