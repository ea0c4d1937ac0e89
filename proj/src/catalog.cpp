#include "zetakit/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zetakit/airy.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/quadrature.hpp"
#include "zetakit/shift.hpp"

namespace zk {

cplx ZeroSequence::at(long n) const {
    if (n < 1) throw DomainError("ZeroSequence: index must be >= 1");
    if (size_t(n) <= values.size()) return values[size_t(n - 1)];
    if (!asymptotic) throw RangeError("ZeroSequence: index beyond the stored zeros");
    return asymptotic(double(n));
}

namespace {

bool is_nonpositive_int(cplx a) {
    return a.imag() == 0.0 && a.real() <= 0.0 && a.real() == std::round(a.real());
}

// F(z) = 1/Gamma(w), w = a - z
ScaledValue inverse_gamma_at(cplx a, cplx z) {
    const cplx w = a - z;
    if (is_nonpositive_int(w)) {
        double k = -w.real();
        return {0.0, ((long(k) % 2) ? 1.0 : -1.0) * std::tgamma(k + 1.0), 0.0};
    }
    return {1.0, digamma(w), -log_gamma(w)};
}

PowerSeries series_from_log(const std::vector<cplx>& b, cplx c0) {
    LogCoeffs lc{b, {}};
    return exp_series(lc, c0);
}

}  // namespace

double riemann_zeta_direct(int k) {
    if (k < 2) throw DomainError("riemann_zeta_direct: need k >= 2");
    constexpr int N = 1000;
    CompensatedSum s;
    for (int n = N - 1; n >= 1; --n) s.add(std::pow(double(n), -double(k)));
    const double kk = k;
    auto f = [kk](double t) -> cplx { return std::pow(t, -kk); };
    auto df = [kk](double t) -> cplx { return -kk * std::pow(t, -kk - 1); };
    auto d3f = [kk](double t) -> cplx { return -kk * (kk + 1) * (kk + 2) * std::pow(t, -kk - 3); };
    s.add(euler_maclaurin_tail(f, df, d3f, N));
    return s.value().real();
}

CatalogModel riemann_model(int asym_depth) {
    if (asym_depth < 2 || asym_depth > 60) throw RangeError("riemann_model: depth must be in [2, 60]");
    CatalogModel m;
    m.name = "riemann";
    constexpr int order = 30;
    std::vector<cplx> b(order + 1, 0.0);
    b[1] = -euler_gamma;
    for (int k = 2; k <= order; ++k) b[k] = -riemann_zeta_direct(k) / double(k);
    m.series = series_from_log(b, 1.0);

    AsymExpansion t(1.0, 1, 1, asym_depth, 0.75 * pi, 0.0);
    t.set(0, 1, 1.0);
    t.set(0, 0, -(I * pi + 1.0));
    t.set(1, 1, -0.5);
    t.set(1, 0, -0.5 * std::log(2.0 * pi) + I * (pi / 2));
    for (int j = 2; j <= asym_depth; ++j) t.set(j, 0, bernoulli_number(j) / (double(j) * (j - 1)));
    m.asym = t;

    ZeroSequence z;
    z.alpha = 1.0;
    z.asymptotic = [](cplx n) { return n; };
    m.zeros = z;
    m.eval = [](cplx w) { return inverse_gamma_at(1.0, w); };
    m.m_neg = 0;

    for (int n = 1; n <= 6; ++n) {
        double v = std::abs(bernoulli_number(2 * n)) * std::pow(2.0 * pi, 2 * n) /
                   (2.0 * std::tgamma(2.0 * n + 1));
        m.closed_forms[2 * n] = {"|B_" + std::to_string(2 * n) + "|(2pi)^" + std::to_string(2 * n) +
                                     "/(2*" + std::to_string(2 * n) + "!)",
                                 v};
    }
    m.closed_forms[0] = {"-1/2", -0.5};
    for (int n = 1; n < asym_depth; ++n)
        m.closed_forms[-n] = {"-B_" + std::to_string(n + 1) + "/" + std::to_string(n + 1),
                              -bernoulli_number(n + 1) / (n + 1.0)};
    m.closed_prime0 = ClosedForm{"-ln(2pi)/2", -0.5 * std::log(2.0 * pi)};
    return m;
}

CatalogModel hurwitz_model(cplx a, int asym_depth) {
    if (is_nonpositive_int(a)) throw DomainError("hurwitz_model: a must not be 0, -1, -2, ...");
    CatalogModel r = riemann_model(asym_depth);
    CatalogModel m;
    m.name = "hurwitz";
    m.params["a"] = a;
    constexpr int order = 20;
    std::vector<cplx> b(order + 1, 0.0);
    double kf = 1.0;
    for (int k = 1; k <= order; ++k) {
        kf *= k;
        b[k] = ((k % 2) ? 1.0 : -1.0) * polygamma(k - 1, a) / kf;
    }
    m.series = series_from_log(b, 1.0 / gamma(a));

    const bool real_a = a.imag() == 0.0;
    cplx lnF_shift;
    if (real_a && a.real() < 0.0) {
        lnF_shift = -std::log(std::abs(gamma(a.real()))) + I * (pi * std::floor(a.real()));
        m.m_neg = int(-std::floor(a.real()));
    } else if (real_a) {
        lnF_shift = -std::lgamma(a.real());
        m.m_neg = 0;
    } else {
        lnF_shift = -log_gamma(a);
        m.notes.push_back("complex a: ln F(0) is taken as -lnGamma(a) on the principal branch");
    }
    ShiftParams sh{1.0, a - 1.0};
    m.asym = omega_table(r.asym, sh, lnF_shift);

    ZeroSequence z;
    z.alpha = 1.0;
    z.asymptotic = [a](cplx n) { return n + a - 1.0; };
    if (real_a && a.real() < 0.0) {
        // order by modulus through the negative terms
        int count = 2 * int(std::ceil(-a.real())) + 2;
        for (int n = 1; n <= count; ++n) z.values.push_back(double(n) + a - 1.0);
        std::stable_sort(z.values.begin(), z.values.end(),
                         [](cplx x, cplx y) { return std::abs(x) < std::abs(y); });
        z.n_exact = count;
    }
    m.zeros = z;
    m.eval = [a](cplx w) { return inverse_gamma_at(a, w); };

    m.closed_forms[0] = {"1/2 - a", 0.5 - a};
    for (int n = 1; n < asym_depth; ++n)
        m.closed_forms[-n] = {"-B_" + std::to_string(n + 1) + "(a)/" + std::to_string(n + 1),
                              -bernoulli_poly(n + 1, a) / (n + 1.0)};
    if (real_a && a.real() > 0.0)
        m.closed_prime0 = ClosedForm{"-ln(2pi)/2 + lnGamma(a)",
                                     -0.5 * std::log(2.0 * pi) + std::lgamma(a.real())};
    else if (real_a)
        m.closed_prime0 = ClosedForm{"-i pi floor(a) - ln(2pi)/2 + ln|Gamma(a)|",
                                     -I * (pi * std::floor(a.real())) - 0.5 * std::log(2.0 * pi) +
                                         std::log(std::abs(gamma(a.real())))};
    return m;
}

ZeroSequence airy_zeros(int count, int n_exact) {
    if (n_exact < 0 || count < n_exact) throw DomainError("airy_zeros: need count >= n_exact >= 0");
    ZeroSequence z;
    z.alpha = 1.5;
    z.n_exact = n_exact;
    z.values.reserve(size_t(count));
    for (int n = 1; n <= n_exact; ++n) z.values.push_back(airy::zero_refined(n));
    for (int n = n_exact + 1; n <= count; ++n) z.values.push_back(airy::zero_asymptotic(double(n)));
    z.asymptotic = [](cplx n) { return airy::zero_asymptotic(n); };
    return z;
}

CatalogModel airy_model(int depth) {
    if (depth > 40) throw RangeError("airy_model: depth must be <= 40");
    if (depth < 3) throw RangeError("airy_model: depth must be >= 3");
    CatalogModel m;
    m.name = "airy";
    constexpr int order = 60;
    m.series.c.assign(order + 1, 0.0);
    const double c0 = std::pow(3.0, -2.0 / 3.0) / std::tgamma(2.0 / 3.0);
    const double c1 = std::pow(3.0, -1.0 / 3.0) / std::tgamma(1.0 / 3.0);
    double e = c0, o = c1;
    for (int k = 0; 3 * k <= order; ++k) {
        m.series.c[3 * k] = e;
        if (3 * k + 1 <= order) m.series.c[3 * k + 1] = o;
        e *= -1.0 / (9.0 * (k + 1) * (k + 2.0 / 3.0));
        o *= -1.0 / (9.0 * (k + 1) * (k + 4.0 / 3.0));
    }

    AsymExpansion t(1.5, 2, 1, depth, pi / 2, std::log(c0));
    t.set(0, 0, -2.0 * I / 3.0);
    t.set(3, 1, -0.25);
    t.set(3, 0, I * (pi / 4) - std::log(2.0 * std::sqrt(pi)));
    const int nmax = (depth - 3) / 3;
    std::vector<cplx> C(std::max(nmax, 0));
    cplx Ck = 1.0;
    for (int k = 1; k <= nmax; ++k) {
        Ck *= 0.75 * I * (k - 5.0 / 6.0) * (k - 1.0 / 6.0) / double(k);
        C[k - 1] = Ck;
    }
    std::vector<cplx> p = log_compose(C);
    for (int n = 1; n <= nmax; ++n) t.set(3 * n + 3, 0, p[n - 1]);
    m.asym = t;

    m.zeros = airy_zeros(10000, 1000);
    m.eval = [](cplx z) { return airy::ai_neg(z); };
    m.allow_extended = true;
    m.m_neg = 0;

    const double G = std::tgamma(2.0 / 3.0) / std::tgamma(1.0 / 3.0);
    m.closed_forms[1] = {"-3^(1/3) G(2/3)/G(1/3)", -std::cbrt(3.0) * G};
    m.closed_forms[2] = {"3^(2/3) G(2/3)^2/G(1/3)^2", std::pow(3.0, 2.0 / 3.0) * G * G};
    m.closed_forms[3] = {"-3 G(2/3)^3/G(1/3)^3 + 1/2", -3.0 * G * G * G + 0.5};
    m.closed_forms[4] = {"3^(4/3) G(2/3)^4/G(1/3)^4 - G(2/3)/(3^(2/3) G(1/3))",
                         std::pow(3.0, 4.0 / 3.0) * std::pow(G, 4) - G / std::pow(3.0, 2.0 / 3.0)};
    m.closed_forms[5] = {"-3^(5/3) G(2/3)^5/G(1/3)^5 + 5/4 G(2/3)^2/(3^(1/3) G(1/3)^2)",
                         -std::pow(3.0, 5.0 / 3.0) * std::pow(G, 5) + 1.25 * G * G / std::cbrt(3.0)};
    m.closed_forms[0] = {"-1/4", -0.25};
    m.closed_forms[-3] = {"15/64", 15.0 / 64.0};
    m.closed_forms[-6] = {"-6*565/2048", -6.0 * 565.0 / 2048.0};
    for (int n : {1, 2, 4, 5, 7, 8}) m.closed_forms[-n] = {"0", 0.0};
    m.closed_prime0 = ClosedForm{"ln(3^(2/3) G(2/3)/(2 sqrt(pi)))",
                                 std::log(std::pow(3.0, 2.0 / 3.0) * std::tgamma(2.0 / 3.0) /
                                          (2.0 * std::sqrt(pi)))};
    return m;
}

namespace {

// integral_0^inf t^p exp(-t^2/2 - z t) dt
cplx pcf_integral(double p, cplx z) {
    double L = 1.0;
    if (z.real() > 1.0) L = 1.0 / z.real();
    else if (z.real() < -1.0) L = -z.real();
    auto f = [&](double v) -> cplx {
        double one_minus = 1.0 - v;
        if (one_minus <= 0.0) return 0.0;
        double t = L * v / one_minus;
        if (!std::isfinite(t)) return 0.0;
        double jac = L / (one_minus * one_minus);
        cplx val = std::pow(t, p) * std::exp(-0.5 * t * t - z * t) * jac;
        return std::isfinite(val.real()) ? val : cplx(0.0);
    };
    QuadResult q = integrate_tanh_sinh(f, 0.0, 1e-15);
    return q.value;
}

cplx kummer_series(cplx a, cplx b, cplx z) {
    CompensatedSum s;
    cplx t = 1.0;
    for (int n = 0; n < 5000; ++n) {
        s.add(t);
        if (n > std::abs(z) && std::abs(t) < 1e-18 * std::abs(s.value())) break;
        t *= (a + double(n)) / (b + double(n)) * z / double(n + 1);
        if (t == 0.0) break;
    }
    return s.value();
}

ScaledValue chf_eval(cplx a, cplx b, cplx z) {
    if (z.real() >= 0.0) return {kummer_series(a, b, z), a / b * kummer_series(a + 1.0, b + 1.0, z), 0.0};
    // M(a,b,z) = e^z M(b-a,b,-z)
    cplx g = kummer_series(b - a, b, -z);
    cplx dg = (b - a) / b * kummer_series(b - a + 1.0, b + 1.0, -z);
    return {g, g - dg, z};
}

}  // namespace

CatalogModel pcf_model(double a, int depth) {
    if (!(a > -0.5)) throw DomainError("pcf_model: need a > -1/2");
    if (depth < 3 || depth > 40) throw RangeError("pcf_model: depth must be in [3, 40]");
    CatalogModel m;
    m.name = "pcf";
    m.params["a"] = a;
    constexpr int order = 30;
    m.series.c.assign(order + 1, 0.0);
    const double pre = std::pow(2.0, (2 * a - 3) / 4) / std::tgamma(a + 0.5);
    for (int j = 0; 2 * j <= order; ++j) {
        CompensatedSum even, odd;
        for (int l = 0; l <= j; ++l) {
            double common = ((j - l) % 2 ? -1.0 : 1.0) / (std::pow(4.0, j - l) * std::tgamma(j - l + 1.0));
            even.add(common * std::pow(2.0, l) / std::tgamma(2.0 * l + 1) *
                     std::tgamma(l + (2 * a + 1) / 4));
            odd.add(common * std::pow(2.0, l + 0.5) / std::tgamma(2.0 * l + 2) *
                    std::tgamma(l + (2 * a + 3) / 4));
        }
        m.series.c[2 * j] = pre * even.value();
        if (2 * j + 1 <= order) m.series.c[2 * j + 1] = -pre * odd.value();
    }

    const double c0 = m.series.c[0].real();
    AsymExpansion t(2.0, 1, 1, depth, 0.0, std::log(c0));
    t.set(0, 0, -0.25);
    t.set(2, 1, -(a + 0.5));
    const int nmax = (depth - 2) / 2;
    std::vector<cplx> C(std::max(nmax, 0));
    double Cn = 1.0;
    for (int n = 1; n <= nmax; ++n) {
        Cn *= -(2.0 * n + a - 0.5) * (2.0 * n + a - 1.5) / (2.0 * n);
        C[n - 1] = Cn;
    }
    std::vector<cplx> h = log_compose(C);
    for (int n = 1; n <= nmax; ++n) t.set(2 * n + 2, 0, h[n - 1]);
    m.asym = t;

    const double ga = std::tgamma(a + 0.5);
    m.eval = [a, ga](cplx z) -> ScaledValue {
        cplx I0 = pcf_integral(a - 0.5, z) / ga;
        cplx I1 = pcf_integral(a + 0.5, z) / ga;
        return {I0, -0.5 * z * I0 - I1, -0.25 * z * z};
    };
    m.notes.push_back("zeros are complex-conjugate pairs; no zero list is generated");

    const double X = std::sqrt(2.0) * std::tgamma((2 * a + 3) / 4) / std::tgamma((2 * a + 1) / 4);
    const double r = X / std::sqrt(2.0);  // Gamma((2a+3)/4)/Gamma((2a+1)/4)
    const double s2 = std::sqrt(2.0);
    m.closed_forms[0] = {"-a - 1/2", -a - 0.5};
    m.closed_forms[1] = {"2^(1/2) G((2a+3)/4)/G((2a+1)/4)", X};
    m.closed_forms[2] = {"-a - 1/2 + 2 G^2((2a+3)/4)/G^2((2a+1)/4)", -a - 0.5 + 2 * r * r};
    m.closed_forms[3] = {"2 sqrt2 r^3 - sqrt2 a r", 2 * s2 * std::pow(r, 3) - s2 * a * r};
    m.closed_forms[4] = {"4 r^4 - 8a/3 r^2 + (4a^2 - 1)/12",
                         4 * std::pow(r, 4) - 8 * a / 3 * r * r + (4 * a * a - 1) / 12};
    m.closed_forms[5] = {"4 sqrt2 r^5 - 10 sqrt2 a/3 r^3 + sqrt2 (16a^2 - 1)/24 r",
                         4 * s2 * std::pow(r, 5) - 10 * s2 * a / 3 * std::pow(r, 3) +
                             s2 / 24 * (16 * a * a - 1) * r};
    const double A = 2 * a + 1, B = 2 * a + 3;
    const double hp[7] = {0.0,
                          -A * B / 8,
                          (2 + a) * A * B / 8,
                          -A * B * (20 * a * a + 88 * a + 99) / 96,
                          A * B * (28 * a * a * a + 200 * a * a + 489 * a + 408) / 64,
                          -A * B * (336 * std::pow(a, 4) + 3424 * std::pow(a, 3) + 13480 * a * a + 24232 * a + 16713) / 320,
                          A * B * (528 * std::pow(a, 5) + 7136 * std::pow(a, 4) + 39848 * std::pow(a, 3) +
                                   114632 * a * a + 169245 * a + 102096) / 192};
    for (int k = 1; k <= 6 && 2 * k + 2 <= depth; ++k) {
        m.closed_forms[-2 * k] = {"-" + std::to_string(2 * k) + " h_" + std::to_string(k), -2.0 * k * hp[k]};
        m.closed_forms[-2 * k + 1] = {"0", 0.0};
    }
    m.closed_prime0 = ClosedForm{"(-a - 1/2) i pi - ln(sqrt(pi) 2^(-(2a+1)/4)/G((2a+3)/4))",
                                 (-a - 0.5) * I * pi -
                                     std::log(std::sqrt(pi) * std::pow(2.0, -(2 * a + 1) / 4) /
                                              std::tgamma((2 * a + 3) / 4))};
    return m;
}

CatalogModel chf_model(cplx a, cplx b, int depth) {
    if (is_nonpositive_int(a) || is_nonpositive_int(b) || is_nonpositive_int(b - a))
        throw DomainError("chf_model: a, b and b - a must not be nonpositive integers");
    if (depth < 2 || depth > 40) throw RangeError("chf_model: depth must be in [2, 40]");
    CatalogModel m;
    m.name = "chf";
    m.params["a"] = a;
    m.params["b"] = b;
    constexpr int order = 30;
    m.series.c.assign(order + 1, 0.0);
    cplx c = 1.0;
    for (int n = 0; n <= order; ++n) {
        m.series.c[n] = c;
        c *= (a + double(n)) / ((b + double(n)) * double(n + 1));
    }

    AsymExpansion t(1.0, 1, 1, depth, 0.0, 0.0);
    t.set(0, 0, 1.0);
    t.set(1, 1, a - b);
    t.set(1, 0, log_gamma(b) - log_gamma(a));
    const int nmax = depth - 1;
    std::vector<cplx> C(nmax);
    cplx Cn = 1.0;
    for (int n = 1; n <= nmax; ++n) {
        Cn *= (double(n) - a) * (b - a + double(n - 1)) / double(n);
        C[n - 1] = Cn;
    }
    std::vector<cplx> f = log_compose(C);
    for (int j = 1; j <= nmax; ++j) t.set(j + 1, 0, f[j - 1]);
    m.asym = t;

    m.eval = [a, b](cplx z) { return chf_eval(a, b, z); };
    m.notes.push_back("ln F(0) = 2 pi i k with k path dependent; k = 0 is used");
    m.notes.push_back("branch angle 0 is assumed to avoid the zeros; no zero list is generated to check it");

    m.closed_forms[0] = {"a - b", a - b};
    m.closed_forms[1] = {"1 - a/b", 1.0 - a / b};
    m.closed_forms[2] = {"a(a-b)/(b^2(b+1))", a * (a - b) / (b * b * (b + 1.0))};
    m.closed_forms[3] = {"a(a-b)(b-2a)/(b^3(b+1)(b+2))",
                         a * (a - b) * (b - 2.0 * a) / (b * b * b * (b + 1.0) * (b + 2.0))};
    m.closed_forms[4] = {"a(a-b)(a^2(5b+6) - ab(5b+6) + b^2(b+1))/(b^4(b+1)^2(b+2)(b+3))",
                         a * (a - b) * (a * a * (5.0 * b + 6.0) - a * b * (5.0 * b + 6.0) + b * b * (b + 1.0)) /
                             (std::pow(b, 4) * (b + 1.0) * (b + 1.0) * (b + 2.0) * (b + 3.0))};
    m.closed_forms[5] = {"a(a-b)(b-2a)(a^2(7b+12) - ab(7b+12) + b^2(b+1))/(b^5(b+1)^2(b+2)(b+3)(b+4))",
                         a * (a - b) * (b - 2.0 * a) *
                             (a * a * (7.0 * b + 12.0) - a * b * (7.0 * b + 12.0) + b * b * (b + 1.0)) /
                             (std::pow(b, 5) * (b + 1.0) * (b + 1.0) * (b + 2.0) * (b + 3.0) * (b + 4.0))};
    const cplx fp[5] = {
        0.0, (a - 1.0) * (a - b), -0.5 * (a - 1.0) * (a - b) * (2.0 * a - b - 2.0),
        (a - 1.0) * (a - b) * (5.0 * a * a - a * (5.0 * b + 11.0) + b * (b + 6.0) + 6.0) / 3.0,
        -0.25 * (a - 1.0) * (a - b) *
            (14.0 * a * a * a - a * a * (21.0 * b + 50.0) + a * (9.0 * b * b + 53.0 * b + 60.0) -
             b * (b * b + 12.0 * b + 34.0) - 24.0)};
    for (int j = 1; j <= 4 && j + 1 <= depth; ++j)
        m.closed_forms[-j] = {"-" + std::to_string(j) + " f_" + std::to_string(j), -double(j) * fp[j]};
    m.closed_prime0 = ClosedForm{"(a - b) i pi + ln(G(b)/G(a))", (a - b) * I * pi + log_gamma(b) - log_gamma(a)};
    return m;
}

CatalogModel derivative_series_model(const CatalogModel& model) {
    CatalogModel m;
    m.name = model.name + "'";
    m.params = model.params;
    const int N = model.series.order();
    m.series.c.assign(std::max(N, 1), 0.0);
    for (int k = 0; k + 1 <= N; ++k) m.series.c[k] = double(k + 1) * model.series.c[k + 1];
    m.asym = AsymExpansion(model.asym.alpha, model.asym.m, 0, 0, model.asym.psi, 0.0);
    m.notes.push_back("Taylor side only; values at n <= alpha are not available");
    if (model.name == "airy") {
        m.closed_forms[2] = {"G(1/3)/(3^(1/3) G(2/3))",
                             std::tgamma(1.0 / 3.0) / (std::cbrt(3.0) * std::tgamma(2.0 / 3.0))};
        m.closed_forms[3] = {"1", 1.0};
    }
    return m;
}

ZetaValue special_value(const CatalogModel& model, int n) {
    if (n == 0) {
        PoleReport r = classify_poles(model.asym);
        if (r.zeta0_status == ZeroStatus::Pole) {
            for (const Pole& p : r.poles)
                if (p.location == 0.0) throw PoleError("s = 0 is a pole", 0.0, p.residue);
        }
        if (r.zeta0_status == ZeroStatus::Indeterminate)
            throw DomainError("s = 0: the residue vanishes to working precision, value not determined");
        return {r.zeta0, "continuation"};
    }
    if (double(n) > model.alpha() + 1e-12)
        return {zeta_pos_int(model.series, n, model.alpha()), "recursion"};
    if (model.asym.N == 0 && model.asym.M == 0 && model.asym.d(0, 0) == 0.0)
        throw RangeError("special_value: the model has no large-z table for n <= alpha");
    const int jt = model.asym.index_of(double(n));
    const bool structural = n < 0 && (jt < 0 || model.asym.top_log_power(jt) < 0);
    LogCoeffs lc;
    if (n >= 1) lc = log_coeffs(model.series);
    cplx v = zeta_int_leq_alpha(model.asym, lc, n);
    if (structural) v = 0.0;
    return {v, structural ? "structural-zero" : "continuation"};
}

cplx special_prime0(const CatalogModel& model) {
    if (model.m_neg && model.name == "hurwitz")
        return zeta_prime_zero_real(model.asym, *model.m_neg);
    return zeta_prime_zero(model.asym);
}

}  // namespace zk
