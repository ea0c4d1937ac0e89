#pragma once

#include <complex>
#include <functional>
#include <numbers>

namespace zk {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = std::numbers::egamma;
inline constexpr cplx I{0.0, 1.0};

// Neumaier compensated accumulator.
class CompensatedSum {
public:
    void add(cplx x);
    cplx value() const { return sum_ + comp_; }

private:
    cplx sum_{0.0, 0.0};
    cplx comp_{0.0, 0.0};
};

cplx gamma(cplx z);
double gamma(double x);
// Logarithm of Gamma; equals the principal-branch continuation for Re z >= 1/2,
// and is correct modulo 2*pi*i elsewhere.
cplx log_gamma(cplx z);
cplx digamma(cplx z);
// k-th derivative of the digamma function.
cplx polygamma(int k, cplx z);

// B_n with B_1 = -1/2.
double bernoulli_number(int n);
cplx bernoulli_poly(int n, cplx a);
// Signed Stirling numbers of the first kind, 0 <= k <= n <= 40.
double stirling_first(int n, int k);
cplx binomial_general(cplx x, int n);

// log with the cut on the ray arg = psi: imaginary part in (psi - 2*pi, psi].
cplx log_branch(cplx z, double psi);
// z^p on the same branch.
cplx pow_branch(cplx z, cplx p, double psi);

// F = f * exp(log_scale), F' = df * exp(log_scale). Keeps huge or tiny values representable.
struct ScaledValue {
    cplx f = 0.0;
    cplx df = 0.0;
    cplx log_scale = 0.0;

    cplx value() const { return f * std::exp(log_scale); }
    cplx deriv() const { return df * std::exp(log_scale); }
    cplx log_deriv() const { return df / f; }
    cplx log_value() const { return std::log(f) + log_scale; }
};

using RealToComplex = std::function<cplx(double)>;

// Estimate of sum_{n>=N} f(n): integral_N^inf f + f(N)/2 - f'(N)/12 + f'''(N)/720.
cplx euler_maclaurin_tail(const RealToComplex& f, const RealToComplex& df,
                          const RealToComplex& d3f, double N);

}  // namespace zk
