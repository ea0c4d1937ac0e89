#include "zetakit/shift.hpp"

#include <cmath>
#include <string>

#include "zetakit/errors.hpp"

namespace zk {

cplx mu_coeff(int p, int l, int k, int j, cplx shift, double alpha, int m) {
    if (l < 0 || l > k || p < 0) throw DomainError("mu_coeff: need 0 <= l <= k and p >= 0");
    const int r = k - l;
    const double beta = alpha - double(j) / m;
    CompensatedSum s;
    double ratio = 1.0;  // r!/(r+n)!
    for (int n = 0; n <= p; ++n) {
        if (n > 0) ratio /= double(r + n);
        s.add(ratio * binomial_general(beta, p - n) * stirling_first(r + n, r));
    }
    return std::pow(-shift, r + p) * s.value();
}

AsymExpansion omega_table(const AsymExpansion& asym, const ShiftParams& shift, cplx lnF_shift,
                          std::optional<double> psi_new) {
    if (shift.A == 0.0) throw DomainError("omega_table: A must be nonzero");
    const cplx mu = shift.mu();
    AsymExpansion out(asym.alpha, asym.m, asym.M, asym.N,
                      psi_new ? *psi_new : asym.psi + std::arg(shift.A), lnF_shift);
    out.delta = asym.delta;
    std::vector<CompensatedSum> acc(out.table.size());
    // (z - mu)^beta ln^k(z - mu) = sum_{l,p} C(k,l) mu_{p,l,k,j} z^{beta - (k-l+p)} ln^l z
    for (int j = 0; j <= asym.N; ++j) {
        for (int k = 0; k <= asym.M; ++k) {
            const cplx djk = asym.d(j, k);
            if (djk == 0.0) continue;
            for (int l = 0; l <= k; ++l) {
                double binom = std::round(std::tgamma(k + 1.0) /
                                          (std::tgamma(l + 1.0) * std::tgamma(k - l + 1.0)));
                for (int p = 0;; ++p) {
                    int J = j + asym.m * (k - l + p);
                    if (J > asym.N) break;
                    if (mu == 0.0 && k - l + p > 0) break;
                    acc[size_t(J) * (asym.M + 1) + l].add(binom * djk *
                                                          mu_coeff(p, l, k, j, mu, asym.alpha, asym.m));
                }
            }
        }
    }
    for (size_t i = 0; i < acc.size(); ++i) out.table[i] = acc[i].value();
    return out;
}

ShiftedResult shifted_values(const AsymExpansion& asym, const ShiftParams& shift, cplx lnF_shift,
                             std::optional<double> psi_new) {
    ShiftedResult res{omega_table(asym, shift, lnF_shift, psi_new), {}};
    res.report = classify_poles(res.omega);
    const cplx lnA = std::log(shift.A);
    for (Pole& p : res.report.poles) p.residue *= std::exp(-p.location * lnA);
    if (res.report.zeta0_status == ZeroStatus::Value) {
        res.report.zeta_prime0 -= res.report.zeta0 * lnA;
    }
    return res;
}

cplx shifted_zeta_int(const ShiftedResult& res, const ShiftParams& shift,
                      const LogCoeffs* logc_shifted, int n) {
    if (n == 0) throw DomainError("shifted_zeta_int: use the report for s = 0");
    const cplx scale = std::exp(-double(n) * std::log(shift.A));
    if (n >= 1 && !logc_shifted)
        throw RangeError("shifted_zeta_int: positive n needs the log coefficients of F(z - B/A)");
    if (double(n) <= res.omega.alpha + 1e-12) {
        LogCoeffs empty;
        return scale * zeta_int_leq_alpha(res.omega, logc_shifted ? *logc_shifted : empty, n);
    }
    if (int(logc_shifted->b.size()) <= n)
        throw RangeError("shifted_zeta_int: log coefficients too short");
    return scale * (-double(n) * logc_shifted->b[n]);
}

RightmostPoleCheck rightmost_pole_check(const AsymExpansion& asym, const ShiftParams& shift) {
    PoleReport before = classify_poles(asym);
    const Pole* p0 = nullptr;
    for (const Pole& p : before.poles)
        if (std::abs(p.location - asym.alpha) < 1e-12) p0 = &p;
    if (!p0) throw DomainError("rightmost_pole_check: s = alpha is not a pole");
    ShiftedResult after = shifted_values(asym, shift, 0.0);
    for (const Pole& p : after.report.poles)
        if (std::abs(p.location - asym.alpha) < 1e-12)
            return {p0->order, p.order, p.residue / p0->residue};
    return {p0->order, 0, 0.0};
}

}  // namespace zk
