#include "zetakit/numerics.hpp"

#include <array>
#include <cmath>
#include <string>

#include "zetakit/errors.hpp"
#include "zetakit/quadrature.hpp"

namespace zk {

void CompensatedSum::add(cplx x) {
    auto step = [](double& s, double& c, double v) {
        double t = s + v;
        if (std::abs(s) >= std::abs(v))
            c += (s - t) + v;
        else
            c += (v - t) + s;
        s = t;
    };
    double sr = sum_.real(), si = sum_.imag(), cr = comp_.real(), ci = comp_.imag();
    step(sr, cr, x.real());
    step(si, ci, x.imag());
    sum_ = {sr, si};
    comp_ = {cr, ci};
}

namespace {

// Lanczos, g = 7, n = 9.
constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_p = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

cplx lanczos_sum(cplx zm1) {
    cplx x = lanczos_p[0];
    for (int i = 1; i < 9; ++i) x += lanczos_p[i] / (zm1 + double(i));
    return x;
}

}  // namespace

cplx gamma(cplx z) {
    if (is_nonpositive_integer(z))
        throw DomainError("gamma: pole at nonpositive integer " + std::to_string(z.real()));
    if (z.real() < 0.5) return pi / (std::sin(pi * z) * gamma(1.0 - z));
    cplx zm1 = z - 1.0;
    cplx t = zm1 + lanczos_g + 0.5;
    return std::sqrt(2.0 * pi) * std::exp((zm1 + 0.5) * std::log(t) - t) * lanczos_sum(zm1);
}

double gamma(double x) { return gamma(cplx(x, 0.0)).real(); }

cplx log_gamma(cplx z) {
    if (is_nonpositive_integer(z))
        throw DomainError("log_gamma: pole at nonpositive integer " + std::to_string(z.real()));
    if (z.real() < 0.5) return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
    cplx zm1 = z - 1.0;
    cplx t = zm1 + lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * pi) + (zm1 + 0.5) * std::log(t) - t + std::log(lanczos_sum(zm1));
}

cplx digamma(cplx z) { return polygamma(0, z); }

cplx polygamma(int k, cplx z) {
    if (k < 0) throw DomainError("polygamma: negative order");
    if (is_nonpositive_integer(z))
        throw DomainError("polygamma: pole at nonpositive integer " + std::to_string(z.real()));
    const double kfact = std::tgamma(k + 1.0);
    const double sign = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^(k+1)
    CompensatedSum acc;
    const double threshold = 10.0 + k;
    while (z.real() < threshold) {
        if (k == 0)
            acc.add(-1.0 / z);
        else
            acc.add(sign * kfact / std::pow(z, k + 1));
        z += 1.0;
    }
    // asymptotic series at large z
    cplx w2 = 1.0 / (z * z);
    if (k == 0) {
        acc.add(std::log(z));
        acc.add(-0.5 / z);
        cplx p = w2;
        for (int j = 1; j <= 20; ++j) {
            cplx term = -bernoulli_number(2 * j) / (2.0 * j) * p;
            acc.add(term);
            if (std::abs(term) < 1e-18 * std::abs(acc.value())) break;
            p *= w2;
        }
        return acc.value();
    }
    CompensatedSum s;
    cplx zk = std::pow(z, k);
    s.add(std::tgamma(double(k)) / zk);
    s.add(kfact / (2.0 * zk * z));
    cplx p = 1.0 / (zk * z * z);
    for (int j = 1; j <= 30; ++j) {
        double coef = bernoulli_number(2 * j) *
                      std::exp(std::lgamma(2.0 * j + k) - std::lgamma(2.0 * j + 1.0));
        cplx term = coef * p;
        s.add(term);
        if (std::abs(term) < 1e-18 * std::abs(s.value())) break;
        p *= w2;
    }
    acc.add(sign * s.value());
    return acc.value();
}

double bernoulli_number(int n) {
    if (n < 0) throw DomainError("bernoulli_number: negative index");
    if (n > 60) throw UnsupportedOrderError("bernoulli_number: n > 60 not supported");
    static constexpr std::array<double, 21> table = {
        1.0,           -0.5, 1.0 / 6.0,       0.0, -1.0 / 30.0,    0.0, 1.0 / 42.0,
        0.0,           -1.0 / 30.0,           0.0, 5.0 / 66.0,     0.0, -691.0 / 2730.0,
        0.0,           7.0 / 6.0,             0.0, -3617.0 / 510.0, 0.0, 43867.0 / 798.0,
        0.0,           -174611.0 / 330.0};
    if (n <= 20) return table[n];
    if (n % 2 == 1) return 0.0;
    // B_n = (-1)^(n/2+1) 2 n! zeta(n) / (2 pi)^n
    double zeta = 1.0;
    for (int k = 2; k < 100; ++k) {
        double t = std::pow(double(k), -n);
        zeta += t;
        if (t < 1e-18) break;
    }
    double mag = 2.0 * zeta * std::exp(std::lgamma(n + 1.0) - n * std::log(2.0 * pi));
    return ((n / 2) % 2 == 1) ? mag : -mag;
}

cplx bernoulli_poly(int n, cplx a) {
    if (n < 0) throw DomainError("bernoulli_poly: negative index");
    if (n > 60) throw UnsupportedOrderError("bernoulli_poly: n > 60 not supported");
    CompensatedSum s;
    double binom = 1.0;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) binom = binom * (n - k + 1) / k;
        double bk = bernoulli_number(k);
        if (bk != 0.0) s.add(binom * bk * std::pow(a, n - k));
    }
    return s.value();
}

double stirling_first(int n, int k) {
    constexpr int nmax = 40;
    if (n < 0 || k < 0 || k > n || n > nmax)
        throw DomainError("stirling_first: need 0 <= k <= n <= 40");
    static const auto table = [] {
        std::array<std::array<double, nmax + 1>, nmax + 1> s{};
        s[0][0] = 1.0;
        for (int i = 0; i < nmax; ++i)
            for (int j = 0; j <= i + 1; ++j)
                s[i + 1][j] = (j > 0 ? s[i][j - 1] : 0.0) - i * (j <= i ? s[i][j] : 0.0);
        return s;
    }();
    return table[n][k];
}

cplx binomial_general(cplx x, int n) {
    if (n < 0) return 0.0;
    cplx r = 1.0;
    for (int i = 0; i < n; ++i) r *= (x - double(i)) / double(i + 1);
    return r;
}

cplx log_branch(cplx z, double psi) {
    if (z == 0.0) throw DomainError("log_branch: logarithm of zero");
    double theta = std::arg(z);
    double k = std::floor((psi - theta) / (2.0 * pi));
    theta += 2.0 * pi * k;
    if (theta <= psi - 2.0 * pi) theta += 2.0 * pi;
    if (theta > psi) theta -= 2.0 * pi;
    return {std::log(std::abs(z)), theta};
}

cplx pow_branch(cplx z, cplx p, double psi) { return std::exp(p * log_branch(z, psi)); }

cplx euler_maclaurin_tail(const RealToComplex& f, const RealToComplex& df,
                          const RealToComplex& d3f, double N) {
    if (!(N > 0.0)) throw DomainError("euler_maclaurin_tail: N must be positive");
    // t = N/u maps [N, inf) onto (0, 1]
    auto g = [&](double u) -> cplx {
        double t = N / u;
        cplx v = f(t);
        if (v == 0.0) return 0.0;
        return (v * t) * (t / N);
    };
    QuadResult q = integrate_tanh_sinh(g, 1e-14, 1e-14);
    if (!q.converged || !std::isfinite(std::abs(q.value)))
        throw DivergenceError("euler_maclaurin_tail: tail integral does not converge");
    return q.value + f(N) / 2.0 - df(N) / 12.0 + d3f(N) / 720.0;
}

}  // namespace zk
