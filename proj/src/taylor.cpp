#include "zetakit/taylor.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "ddouble.hpp"
#include "zetakit/errors.hpp"

namespace zk {

namespace {

void require_nonzero_c0(const PowerSeries& s) {
    if (s.c.empty() || s.c[0] == 0.0)
        throw DomainError("characteristic function vanishes at the origin (c_0 = 0)");
}

}  // namespace

LogCoeffs log_coeffs(const PowerSeries& series) {
    require_nonzero_c0(series);
    const int N = series.order();
    const dd::Complex c0(series.c[0]);
    std::vector<dd::Complex> chat(N + 1), b(N + 1);
    for (int j = 0; j <= N; ++j) chat[j] = dd::Complex(series.c[j]) / c0;
    // j b_j = j chat_j - sum_{l<j} l chat_{j-l} b_l
    for (int j = 1; j <= N; ++j) {
        dd::Complex s = chat[j] * dd::Real(double(j));
        for (int l = 1; l < j; ++l) s = s - chat[j - l] * b[l] * dd::Real(double(l));
        b[j] = s / dd::Real(double(j));
    }
    LogCoeffs out;
    out.b.assign(N + 1, 0.0);
    out.b_lo.assign(N + 1, 0.0);
    for (int j = 1; j <= N; ++j) {
        out.b[j] = b[j].hi();
        out.b_lo[j] = b[j].lo();
    }
    return out;
}

PowerSeries exp_series(const LogCoeffs& logc, cplx c0) {
    const int N = int(logc.b.size()) - 1;
    PowerSeries out;
    out.c.assign(N + 1, 0.0);
    if (N < 0) return out;
    const bool has_lo = logc.b_lo.size() == logc.b.size();
    std::vector<dd::Complex> b(N + 1), e(N + 1);
    for (int l = 1; l <= N; ++l) b[l] = dd::from_parts(logc.b[l], has_lo ? logc.b_lo[l] : 0.0);
    e[0] = dd::Complex(cplx(1.0));
    // j e_j = sum_{l=1}^{j} l b_l e_{j-l}
    for (int j = 1; j <= N; ++j) {
        dd::Complex s;
        for (int l = 1; l <= j; ++l) s = s + b[l] * e[j - l] * dd::Real(double(l));
        e[j] = s / dd::Real(double(j));
    }
    const dd::Complex k(c0);
    for (int j = 0; j <= N; ++j) out.c[j] = (k * e[j]).hi();
    return out;
}

cplx zeta_pos_int(const PowerSeries& series, int n, double alpha, bool allow_extended) {
    if (n < 1) throw RangeError("zeta_pos_int: n must be a positive integer");
    if (!allow_extended && !(n > alpha))
        throw RangeError("zeta_pos_int: n = " + std::to_string(n) +
                         " <= alpha; the value needs the large-z asymptotic correction "
                         "(use zeta_int_leq_alpha)");
    if (n > series.order())
        throw RangeError("zeta_pos_int: n exceeds the series truncation order");
    return -double(n) * log_coeffs(series).b[n];
}

cplx zeta_via_bell(const PowerSeries& series, int n) {
    if (n > 20) throw UnsupportedOrderError("zeta_via_bell: n > 20 not supported");
    if (n < 1) throw RangeError("zeta_via_bell: n must be positive");
    require_nonzero_c0(series);
    if (n > series.order()) throw RangeError("zeta_via_bell: n exceeds truncation order");
    // power[m] holds the coefficient of z^m in (sum_{j>=1} c_j z^j)^k, i.e. B_{m,k}
    std::vector<dd::Complex> base(n + 1), power(n + 1);
    for (int j = 1; j <= n; ++j) base[j] = dd::Complex(series.c[j]);
    power = base;
    const dd::Complex c0(series.c[0]);
    dd::Complex s, c0k = c0;
    for (int k = 1; k <= n; ++k) {
        dd::Complex term = power[n] / (c0k * dd::Real(double(k)));
        s = (k % 2 == 1) ? s + term : s - term;
        if (k == n) break;
        std::vector<dd::Complex> next(n + 1);
        for (int a = k; a <= n; ++a)
            for (int b = 1; a + b <= n; ++b) next[a + b] = next[a + b] + power[a] * base[b];
        power = std::move(next);
        c0k = c0k * c0;
    }
    return -double(n) * s.hi();
}

cplx exact_sum_rule(const PowerSeries& series, int n, const std::map<int, cplx>& zeta_values) {
    require_nonzero_c0(series);
    if (n < 2 || n > series.order()) throw RangeError("exact_sum_rule: need 2 <= n <= order");
    if (series.order() < 1 || series.c[1] == 0.0)
        throw DomainError("exact_sum_rule: inapplicable when c_1 = 0");
    for (int j = 1; j < n; ++j)
        if (!zeta_values.count(j))
            throw RangeError("exact_sum_rule: missing zeta(" + std::to_string(j) + ")");
    const cplx c0 = series.c[0], c1 = series.c[1];
    const cplx z1 = zeta_values.at(1);
    double nfact = std::tgamma(n + 1.0);
    cplx lead = std::pow(-1.0, n) * double(n) *
                (1.0 / nfact - std::pow(c0, n - 1) * series.c[n] / std::pow(c1, n)) * std::pow(z1, n);
    CompensatedSum s;
    s.add(lead);
    // ordered compositions j_1 + ... + j_k = n with 2 <= k < n
    std::vector<int> parts;
    std::function<void(int)> walk = [&](int remaining) {
        if (remaining == 0) {
            int k = int(parts.size());
            if (k < 2 || k >= n) return;
            cplx prod = 1.0;
            double denom = std::tgamma(k + 1.0);
            for (int j : parts) {
                prod *= zeta_values.at(j);
                denom *= j;
            }
            s.add(((k % 2 == 0) ? 1.0 : -1.0) * double(n) / denom * prod);
            return;
        }
        for (int j = 1; j <= remaining; ++j) {
            if (j == n) continue;
            parts.push_back(j);
            walk(remaining - j);
            parts.pop_back();
        }
    };
    walk(n);
    return s.value();
}

PowerSeries hadamardize(const PowerSeries& series, double alpha) {
    LogCoeffs lc = log_coeffs(series);
    int fl = int(std::floor(alpha));
    for (int m = 1; m <= fl && m < int(lc.b.size()); ++m) lc.b[m] = lc.b_lo[m] = 0.0;
    return exp_series(lc, 1.0);
}

}  // namespace zk
