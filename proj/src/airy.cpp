#include "zetakit/airy.hpp"

#include <array>
#include <cmath>
#include <string>

#include "zetakit/errors.hpp"

namespace zk::airy {

namespace {

constexpr double strip_lo = 0.25;
constexpr double strip_hi = 9.25;
constexpr double strip_half_width = 0.5;
constexpr double centre_step = 0.5;
constexpr int n_centres = 20;  // centres 0, 0.5, ..., 9.5

struct Centre {
    double F;
    double dF;
};

// Taylor coefficients g_n of F about c, from F'' = -z F:
// (n+2)(n+1) g_{n+2} = -(c g_n + g_{n-1}).
template <class T>
void centre_coeffs(T c, T F, T dF, int count, T* g) {
    g[0] = F;
    g[1] = dF;
    for (int n = 0; n + 2 < count; ++n) {
        T prev = n >= 1 ? g[n - 1] : T(0);
        g[n + 2] = -(c * g[n] + prev) / (T(n + 2) * T(n + 1));
    }
}

const std::array<Centre, n_centres>& centres() {
    static const std::array<Centre, n_centres> table = [] {
        std::array<Centre, n_centres> t{};
        long double F = ai0, dF = -(long double)aip0;
        constexpr int K = 60;
        long double g[K];
        for (int i = 0; i < n_centres; ++i) {
            t[i] = {double(F), double(dF)};
            long double c = (long double)centre_step * i;
            centre_coeffs<long double>(c, F, dF, K, g);
            long double h = centre_step, Fn = 0, dFn = 0, hp = 1;
            for (int n = 0; n < K; ++n) {
                Fn += g[n] * hp;
                if (n + 1 < K) dFn += (n + 1) * g[n + 1] * hp;
                hp *= h;
            }
            F = Fn;
            dF = dFn;
        }
        return t;
    }();
    return table;
}

// u_k of the Airy asymptotic series; v_k = -(6k+1)/(6k-1) u_k.
struct UV {
    std::array<double, 40> u{}, v{};
    UV() {
        u[0] = 1.0;
        v[0] = 1.0;
        for (int k = 1; k < 40; ++k) {
            u[k] = u[k - 1] * (6.0 * k - 5) * (6.0 * k - 3) * (6.0 * k - 1) /
                   ((2.0 * k - 1) * 216.0 * k);
            v[k] = -(6.0 * k + 1) / (6.0 * k - 1) * u[k];
        }
    }
};

const UV& uv() {
    static const UV t;
    return t;
}

// sum_k (-1)^k c_{2k+odd} xi^{-(2k+odd)}, truncated at the smallest term
cplx alt_sum(const std::array<double, 40>& c, cplx xi, int odd) {
    CompensatedSum s;
    double last = INFINITY;
    cplx xinv = 1.0 / xi;
    cplx p = odd ? xinv : cplx(1.0);
    cplx xinv2 = xinv * xinv;
    for (int k = 0; 2 * k + odd < 40; ++k) {
        cplx term = ((k % 2) ? -1.0 : 1.0) * c[2 * k + odd] * p;
        double mag = std::abs(term);
        if (mag > last) break;
        s.add(term);
        if (mag < 1e-17 * std::abs(s.value())) break;
        last = mag;
        p *= xinv2;
    }
    return s.value();
}

// sum_k (-1)^k c_k xi^{-k}
cplx plain_sum(const std::array<double, 40>& c, cplx xi) {
    CompensatedSum s;
    double last = INFINITY;
    cplx p = 1.0, xinv = -1.0 / xi;
    for (int k = 0; k < 40; ++k) {
        cplx term = c[k] * p;
        double mag = std::abs(term);
        if (mag > last) break;
        s.add(term);
        if (mag < 1e-17 * std::abs(s.value())) break;
        last = mag;
        p *= xinv;
    }
    return s.value();
}

}  // namespace

ScaledValue taylor_origin(cplx z) {
    // Ai(w) = Ai(0) f(w) + Ai'(0) g(w), w = -z
    const cplx w = -z;
    const cplx w3 = w * w * w;
    CompensatedSum f, df, g, dg;
    cplx tf = 1.0, tg = w;
    for (int k = 0; k < 60; ++k) {
        f.add(tf);
        g.add(tg);
        if (k > 0) df.add(3.0 * k * tf / w);
        dg.add(double(3 * k + 1) * tg / w);
        double mag = std::abs(tf) + std::abs(tg);
        if (k > 2 && mag < 1e-18 * (std::abs(f.value()) + std::abs(g.value()))) break;
        tf *= w3 / ((3.0 * k + 2) * (3.0 * k + 3));
        tg *= w3 / ((3.0 * k + 3) * (3.0 * k + 4));
    }
    // derivative series written so that w = 0 is safe
    cplx Ai = ai0 * f.value() + aip0 * g.value();
    cplx dAi;
    if (w == 0.0) {
        dAi = aip0;
    } else {
        dAi = ai0 * df.value() + aip0 * dg.value();
    }
    return {Ai, -dAi, 0.0};
}

bool in_real_axis_strip(cplx z) {
    return z.real() >= strip_lo && z.real() <= strip_hi && std::abs(z.imag()) <= strip_half_width;
}

ScaledValue taylor_real_axis(cplx z) {
    if (!in_real_axis_strip(z)) throw DomainError("airy::taylor_real_axis: outside the strip");
    int i = int(std::lround(z.real() / centre_step));
    i = std::clamp(i, 0, n_centres - 1);
    const Centre& c = centres()[i];
    constexpr int K = 60;
    double g[K];
    centre_coeffs<double>(centre_step * i, c.F, c.dF, K, g);
    const cplx h = z - centre_step * i;
    CompensatedSum F, dF;
    cplx hp = 1.0;
    for (int n = 0; n < K; ++n) {
        F.add(g[n] * hp);
        if (n + 1 < K) dF.add(double(n + 1) * g[n + 1] * hp);
        hp *= h;
    }
    return {F.value(), dF.value(), 0.0};
}

ScaledValue asymptotic(cplx z) {
    const auto& t = uv();
    if (std::abs(std::arg(z)) < 0.5 * pi) {
        const cplx xi = 2.0 / 3.0 * std::pow(z, 1.5);
        const cplx phi = xi - pi / 4.0;
        const cplx P = alt_sum(t.u, xi, 0), Q = alt_sum(t.u, xi, 1);
        const cplx Rv = alt_sum(t.v, xi, 0), Sv = alt_sum(t.v, xi, 1);
        const cplx e = std::exp(phi.imag() >= 0 ? 2.0 * I * phi : -2.0 * I * phi);
        cplx cosr, sinr, scale;
        if (phi.imag() >= 0) {  // e^{-i phi} dominates
            cosr = 0.5 * (1.0 + e);
            sinr = 0.5 * I * (1.0 - e);
            scale = -I * phi;
        } else {
            cosr = 0.5 * (1.0 + e);
            sinr = (1.0 - e) / (2.0 * I);
            scale = I * phi;
        }
        const cplx q = std::pow(z, 0.25);
        const double rsp = 1.0 / std::sqrt(pi);
        cplx Ai = rsp / q * (cosr * P + sinr * Q);
        cplx dAi = rsp * q * (sinr * Rv - cosr * Sv);  // Ai'(-z)
        return {Ai, -dAi, scale};
    }
    const cplx w = -z;
    const cplx xi = 2.0 / 3.0 * std::pow(w, 1.5);
    const cplx q = std::pow(w, 0.25);
    const double c = 0.5 / std::sqrt(pi);
    cplx Ai = c / q * plain_sum(t.u, xi);
    cplx dAi = -c * q * plain_sum(t.v, xi);
    return {Ai, -dAi, -xi};
}

ScaledValue ai_neg(cplx z) {
    if (in_real_axis_strip(z)) return taylor_real_axis(z);
    const double r = std::abs(z);
    // the Maclaurin series cancels badly where Ai(-z) decays
    if (r <= 8.0 && !(r > 6.0 && std::abs(std::arg(z)) > 2.0 * pi / 3.0)) return taylor_origin(z);
    return asymptotic(z);
}

cplx zero_asymptotic(cplx n) {
    const cplx t = 3.0 * pi / 8.0 * (4.0 * n - 1.0);
    const cplx t2 = 1.0 / (t * t);
    cplx corr = 1.0 + t2 * (5.0 / 48.0 + t2 * (-5.0 / 36.0 +
                                                 t2 * (77125.0 / 82944.0 + t2 * (-108056875.0 / 6967296.0))));
    return std::pow(t, 2.0 / 3.0) * corr;
}

double zero_refined(int n) {
    if (n < 1) throw DomainError("airy::zero_refined: n must be >= 1");
    double x = zero_asymptotic(double(n)).real();
    for (int it = 0; it < 50; ++it) {
        ScaledValue v = ai_neg(x);
        double step = (v.f / v.df).real();
        x -= step;
        if (std::abs(step) <= 1e-14 * x) {
            ScaledValue c = ai_neg(x);
            x -= (c.f / c.df).real();
            c = ai_neg(x);
            double F = std::abs(c.value()), dF = std::abs(c.deriv());
            if (F > 1e-12 * std::max(1.0, dF))
                throw RefinementError("airy::zero_refined: residual too large at zero " +
                                      std::to_string(n));
            return x;
        }
    }
    throw RefinementError("airy::zero_refined: Newton did not converge for zero " + std::to_string(n));
}

}  // namespace zk::airy
