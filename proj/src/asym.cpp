#include "zetakit/asym.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "zetakit/errors.hpp"

namespace zk {

bool is_integer_value(double x) { return std::abs(x - std::round(x)) < 1e-12; }

AsymExpansion::AsymExpansion(double alpha_, int m_, int M_, int N_, double psi_, cplx lnF0_)
    : alpha(alpha_), m(m_), M(M_), N(N_), psi(psi_), lnF0(lnF0_), delta(0.5 / m_) {
    if (m < 1 || M < 0 || N < 0) throw DomainError("AsymExpansion: need m >= 1, M >= 0, N >= 0");
    table.assign(size_t(N + 1) * size_t(M + 1), 0.0);
}

cplx AsymExpansion::d(int j, int k) const {
    if (j < 0 || j > N || k < 0 || k > M) return 0.0;
    return table[size_t(j) * (M + 1) + k];
}

void AsymExpansion::set(int j, int k, cplx v) {
    if (j < 0 || j > N || k < 0 || k > M) {
        std::ostringstream os;
        os << "AsymExpansion: index (" << j << "," << k << ") outside table N=" << N << " M=" << M;
        throw DomainError(os.str());
    }
    table[size_t(j) * (M + 1) + k] = v;
}

int AsymExpansion::top_log_power(int j) const {
    for (int k = M; k >= 0; --k)
        if (std::abs(d(j, k)) > coefficient_zero_threshold) return k;
    return -1;
}

int AsymExpansion::index_of(double location) const {
    double jr = m * (alpha - location);
    if (!is_integer_value(jr)) return -1;
    long j = std::lround(jr);
    if (j < 0 || j > N) return -1;
    return int(j);
}

int AsymExpansion::zero_index() const { return index_of(0.0); }

void AsymExpansion::validate() const {
    if (m < 1 || M < 0 || N < 0) throw DomainError("AsymExpansion: need m >= 1, M >= 0, N >= 0");
    if (table.size() != size_t(N + 1) * size_t(M + 1))
        throw DomainError("AsymExpansion: table size does not match (N+1)(M+1)");
    for (const cplx& v : table)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw DomainError("AsymExpansion: non-finite coefficient");
    if (!(double(N) / m > alpha - delta))
        throw DomainError("AsymExpansion: depth N too small for the validity window N/m > alpha - delta");
}

std::vector<cplx> log_compose(const std::vector<cplx>& C) {
    const int n = int(C.size());
    std::vector<cplx> D(n, 0.0);
    for (int j = 1; j <= n; ++j) {
        CompensatedSum s;
        s.add(C[j - 1]);
        for (int l = 1; l < j; ++l) s.add(-(double(l) / j) * C[j - l - 1] * D[l - 1]);
        D[j - 1] = s.value();
    }
    return D;
}

namespace {

// sin(pi x), cos(pi x) exact at integers and half-integers
double sin_pi(double x) {
    double r = std::remainder(x, 2.0);
    if (r == 0.0 || std::abs(r) == 1.0) return 0.0;
    if (r == 0.5) return 1.0;
    if (r == -0.5) return -1.0;
    return std::sin(pi * r);
}

double cos_pi(double x) { return sin_pi(x + 0.5); }

cplx sin_pi(cplx s) {
    double y = pi * s.imag();
    return {sin_pi(s.real()) * std::cosh(y), cos_pi(s.real()) * std::sinh(y)};
}

const cplx two_pi_i = 2.0 * pi * I;

struct RowInfo {
    double beta;
    int kbar;
    bool integer;
    bool zero;
};

RowInfo row_info(const AsymExpansion& a, int j) {
    double b = a.beta(j);
    bool integer = is_integer_value(b);
    return {b, a.top_log_power(j), integer, integer && std::abs(b) < 1e-12};
}

// Order of the pole contributed by row j (0 means regular).
int row_pole_order(const RowInfo& r) {
    if (r.kbar < 0) return 0;
    if (r.zero) return r.kbar >= 2 ? r.kbar - 1 : 0;
    if (r.integer) return r.kbar;
    return r.kbar + 1;
}

cplx residue_formula(const AsymExpansion& a, int j) {
    const double b = a.beta(j);
    const cplx e = std::exp(two_pi_i * b);
    CompensatedSum s;
    s.add(a.d(j, 0) * b * (e - 1.0));
    if (a.M >= 1) s.add(a.d(j, 1) * ((two_pi_i * b + 1.0) * e - 1.0));
    for (int k = 2; k <= a.M; ++k)
        s.add(a.d(j, k) * std::pow(two_pi_i, k - 1) * e * (two_pi_i * b + double(k)));
    return s.value() / two_pi_i;
}

// Singular order of one (j,k) term at s = beta after the sin factor and the beta = 0 bracket.
int term_singular_order(double beta, int k) {
    bool integer = is_integer_value(beta);
    bool zero = integer && std::abs(beta) < 1e-12;
    if (zero && k == 0) return -1;  // the term vanishes identically
    return (k + 1) - (integer ? 1 : 0) - (zero ? 1 : 0);
}

cplx term_direct(const AsymExpansion& a, int j, int k, cplx s, double R) {
    const double b = a.beta(j);
    const cplx dj = a.d(j, k);
    const cplx L = cplx(std::log(R), a.psi);  // ln(R e^{i psi})
    const cplx eps = s - b;
    cplx bracket = b;
    if (k >= 1) {
        CompensatedSum inner;
        for (int l = 0; l <= k - 1; ++l) {
            double fact = std::tgamma(double(k - l));  // (k-1-l)!
            inner.add(std::pow(L, k - 1 - l) * std::pow(eps, k - l) / fact *
                      (1.0 + b / double(k - l) * L));
        }
        bracket += inner.value();
    }
    cplx pref = ray_prefactor(s, a.psi) * std::exp(I * (b * a.psi)) * dj *
                std::exp((b - s) * std::log(R)) * std::tgamma(k + 1.0);
    return pref * bracket / std::pow(eps, k + 1);
}

cplx term_value(const AsymExpansion& a, int j, int k, cplx s, double R) {
    const cplx dj = a.d(j, k);
    if (dj == 0.0) return 0.0;
    const double b = a.beta(j);
    const int ord = term_singular_order(b, k);
    if (ord < 0) return 0.0;
    const double dist = std::abs(s - b);
    if (ord >= 1) {
        if (dist < 1e-12)
            throw PoleError("asymptotic block evaluated at its pole s = " + std::to_string(b), b,
                            residue_at(a, j));
        return term_direct(a, j, k, s, R);
    }
    // removable singularity: Cauchy integral on a circle around beta
    constexpr double rho = 0.1;
    if (dist >= 0.5 * rho) return term_direct(a, j, k, s, R);
    constexpr int P = 64;
    CompensatedSum acc;
    for (int p = 0; p < P; ++p) {
        cplx w = rho * std::exp(I * (2.0 * pi * (p + 0.5) / P));
        cplx zeta = b + w;
        acc.add(term_direct(a, j, k, zeta, R) * w / (zeta - s));
    }
    return acc.value() / double(P);
}

}  // namespace

cplx ray_prefactor(cplx s, double psi) { return std::exp(I * s * (pi - psi)) * sin_pi(s) / pi; }

cplx residue_at(const AsymExpansion& asym, int j) {
    if (j < 0 || j > asym.N) throw DomainError("residue_at: index outside the table");
    RowInfo r = row_info(asym, j);
    if (r.kbar < 0) return 0.0;
    if (row_pole_order(r) == 0)
        throw DomainError("residue_at: s = " + std::to_string(r.beta) + " is not a pole");
    return residue_formula(asym, j);
}

PoleReport classify_poles(const AsymExpansion& asym) {
    PoleReport rep;
    for (int j = 0; j <= asym.N; ++j) {
        RowInfo r = row_info(asym, j);
        if (r.kbar < 0) continue;
        if (r.zero && r.kbar >= 2) {
            cplx res = residue_formula(asym, j);
            if (std::abs(res) > coefficient_zero_threshold) {
                rep.poles.push_back({0.0, r.kbar - 1, res, j,
                                     std::abs(asym.d(j, r.kbar)) < cancellation_warning_threshold});
                rep.zeta0_status = ZeroStatus::Pole;
            } else {
                rep.zeta0_status = ZeroStatus::Indeterminate;
            }
            continue;
        }
        int order = row_pole_order(r);
        if (order == 0) continue;
        rep.poles.push_back({r.beta, order, residue_formula(asym, j), j,
                             std::abs(asym.d(j, r.kbar)) < cancellation_warning_threshold});
    }
    if (rep.zeta0_status == ZeroStatus::Value) {
        int jp = asym.zero_index();
        rep.zeta0 = jp >= 0 ? asym.d(jp, 1) : cplx(0.0);
        rep.zeta_prime0 = zeta_prime_zero(asym);
        rep.has_zeta_prime0 = true;
    }
    return rep;
}

cplx zeta_prime_zero(const AsymExpansion& asym) {
    int jp = asym.zero_index();
    if (jp < 0) return -asym.lnF0;
    if (asym.top_log_power(jp) >= 2)
        throw PoleError("zeta_prime_zero: s = 0 is a pole (log power >= 2)", 0.0,
                        residue_formula(asym, jp));
    return I * pi * asym.d(jp, 1) + asym.d(jp, 0) - asym.lnF0;
}

cplx zeta_prime_zero_real(const AsymExpansion& asym, int m_neg) {
    int jp = asym.zero_index();
    cplx d0 = 0.0, d1 = 0.0;
    if (jp >= 0) {
        if (asym.top_log_power(jp) >= 2)
            throw PoleError("zeta_prime_zero_real: s = 0 is a pole (log power >= 2)", 0.0,
                            residue_formula(asym, jp));
        d0 = asym.d(jp, 0);
        d1 = asym.d(jp, 1);
    }
    return I * (pi * m_neg) + d0.real() - pi * d1.imag() - asym.lnF0.real();
}

cplx zeta_int_leq_alpha(const AsymExpansion& asym, const LogCoeffs& logc, int n) {
    if (n == 0) throw DomainError("zeta_int_leq_alpha: n = 0 is handled by classify_poles");
    if (double(n) > asym.alpha + 1e-12)
        throw RangeError("zeta_int_leq_alpha: n > alpha, use zeta_pos_int");
    int jt = asym.index_of(double(n));
    cplx dn0 = 0.0;
    if (jt >= 0) {
        int kbar = asym.top_log_power(jt);
        if (kbar >= 1)
            throw PoleError("zeta_int_leq_alpha: s = " + std::to_string(n) + " is a pole", n,
                            residue_formula(asym, jt));
        dn0 = asym.d(jt, 0);
    }
    if (n >= 1) {
        if (int(logc.b.size()) <= n)
            throw RangeError("zeta_int_leq_alpha: log coefficients too short");
        return double(n) * (dn0 - logc.b[n]);
    }
    return double(n) * dn0;
}

cplx l_asy_partial(const AsymExpansion& asym, cplx s, double R, int j_lo, int j_hi) {
    if (!(R > 0.0)) throw DomainError("l_asy_eval: R must be positive");
    CompensatedSum acc;
    for (int j = std::max(0, j_lo); j <= std::min(asym.N, j_hi); ++j)
        for (int k = 0; k <= asym.M; ++k) acc.add(term_value(asym, j, k, s, R));
    return acc.value();
}

cplx l_asy_eval(const AsymExpansion& asym, cplx s, double R) {
    return l_asy_partial(asym, s, R, 0, asym.N);
}

}  // namespace zk
