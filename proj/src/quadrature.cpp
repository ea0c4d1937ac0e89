#include "zetakit/quadrature.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <queue>

namespace zk {

namespace {

constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b;
    cplx value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const RealToComplex& f, double a, double b) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    cplx fc = f(c);
    cplx kron = fc * wgk[7];
    cplx gauss = fc * wg[3];
    for (int i = 0; i < 7; ++i) {
        cplx s = f(c - h * xgk[i]) + f(c + h * xgk[i]);
        kron += wgk[i] * s;
        if (i % 2 == 1) gauss += wg[i / 2] * s;
    }
    return {a, b, kron * h, std::abs((kron - gauss) * h)};
}

}  // namespace

QuadResult integrate_gk(const RealToComplex& f, const std::vector<double>& breaks,
                        const QuadOptions& opt) {
    std::priority_queue<Segment> heap;
    cplx total = 0.0;
    double err = 0.0;
    for (size_t i = 0; i + 1 < breaks.size(); ++i) {
        Segment s = gk15(f, breaks[i], breaks[i + 1]);
        total += s.value;
        err += s.error;
        heap.push(s);
    }
    int count = int(heap.size());
    while (err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total)) &&
           count < opt.max_intervals) {
        Segment s = heap.top();
        heap.pop();
        double mid = 0.5 * (s.a + s.b);
        if (mid <= s.a || mid >= s.b) {  // interval cannot be split further
            heap.push({s.a, s.b, s.value, 0.0});
            err -= s.error;
            continue;
        }
        Segment l = gk15(f, s.a, mid), r = gk15(f, mid, s.b);
        total += l.value + r.value - s.value;
        err += l.error + r.error - s.error;
        heap.push(l);
        heap.push(r);
        ++count;
    }
    // recompute the sum from the leaves to shed accumulated update rounding
    CompensatedSum sum;
    double e = 0.0;
    bool finite = true;
    while (!heap.empty()) {
        sum.add(heap.top().value);
        e += heap.top().error;
        finite = finite && std::isfinite(std::abs(heap.top().value));
        heap.pop();
    }
    QuadResult r{sum.value(), e, false};
    r.converged = finite && e <= std::max(opt.abs_tol, opt.rel_tol * std::abs(r.value));
    return r;
}

QuadResult integrate_gk(const RealToComplex& f, double a, double b, const QuadOptions& opt) {
    return integrate_gk(f, std::vector<double>{a, b}, opt);
}

QuadResult integrate_tanh_sinh(const RealToComplex& f, double abs_tol, double rel_tol) {
    // x = 1/(1 + exp(-2y)), y = (pi/2) sinh(tau); dx/dtau = pi cosh(tau) x (1 - x)
    constexpr double tau_max = 6.1;
    auto node = [&](double tau) -> cplx {
        double y = 0.5 * pi * std::sinh(tau);
        double x, xc;
        if (y >= 0) {
            double e = std::exp(-2.0 * y);
            x = 1.0 / (1.0 + e);
            xc = e / (1.0 + e);
        } else {
            double e = std::exp(2.0 * y);
            x = e / (1.0 + e);
            xc = 1.0 / (1.0 + e);
        }
        if (x <= 0.0 || xc <= 0.0) return 0.0;
        double w = pi * std::cosh(tau) * x * xc;
        if (w == 0.0) return 0.0;
        cplx v = f(x);
        if (v == 0.0) return 0.0;
        return w * v;
    };
    double h = 1.0;
    CompensatedSum s;
    s.add(node(0.0));
    for (int i = 1; i * h <= tau_max; ++i) {
        s.add(node(i * h));
        s.add(node(-i * h));
    }
    cplx prev = s.value() * h;
    for (int level = 1; level <= 12; ++level) {
        h *= 0.5;
        for (int i = 1; i * h <= tau_max; i += 2) {
            s.add(node(i * h));
            s.add(node(-i * h));
        }
        cplx cur = s.value() * h;
        double err = std::abs(cur - prev);
        if (!std::isfinite(err)) return {cur, err, false};
        if (level >= 3 && err <= std::max(abs_tol, rel_tol * std::abs(cur))) {
            // a non-negligible contribution at the truncation points means a divergent integral
            double edge = std::max(std::abs(node(-tau_max)), std::abs(node(tau_max)));
            bool ok = edge <= std::max(abs_tol, rel_tol * std::abs(cur));
            return {cur, std::max(err, edge), ok};
        }
        prev = cur;
    }
    return {prev, std::abs(prev), false};
}

std::vector<cplx> cauchy_derivatives(const std::function<cplx(cplx)>& f, cplx x0, double r,
                                     int count, int points) {
    std::vector<CompensatedSum> acc(count);
    for (int p = 0; p < points; ++p) {
        double th = 2.0 * pi * p / points;
        cplx v = f(x0 + r * std::exp(I * th));
        for (int k = 0; k < count; ++k) acc[k].add(v * std::exp(-I * (k * th)));
    }
    std::vector<cplx> out(count);
    double fact = 1.0;
    for (int k = 0; k < count; ++k) {
        if (k > 0) fact *= k;
        out[k] = acc[k].value() / double(points) * fact / std::pow(r, k);
    }
    return out;
}

double default_quad_tol() {
    if (const char* env = std::getenv("ZETAKIT_QUAD_TOL")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0.0 && std::isfinite(v)) return v;
    }
    return 1e-10;
}

}  // namespace zk
