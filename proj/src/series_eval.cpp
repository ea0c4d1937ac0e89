#include "zetakit/series_eval.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "zetakit/errors.hpp"
#include "zetakit/quadrature.hpp"

namespace zk {

cplx zeta_series(const ZeroSequence& zeros, cplx s, long n_terms, double psi) {
    if (!(s.real() > zeros.alpha + 0.25))
        throw DivergenceError("zeta_series: need Re s > alpha + 0.25 for a reliable tail");
    if (n_terms < 1) throw DomainError("zeta_series: n_terms must be positive");
    if (!zeros.asymptotic) throw DomainError("zeta_series: the zero sequence has no asymptotic formula");
    CompensatedSum sum;
    for (long n = 1; n <= n_terms; ++n) sum.add(pow_branch(zeros.at(n), -s, psi));

    auto g = [&](cplx x) { return pow_branch(zeros.asymptotic(x), -s, psi); };
    auto f = [&](double x) -> cplx { return g(x); };
    auto deriv = [&](double x, int k) {
        return cauchy_derivatives(g, x, 0.5 * x, k + 1)[size_t(k)];
    };
    auto df = [&](double x) { return deriv(x, 1); };
    auto d3f = [&](double x) { return deriv(x, 3); };
    sum.add(euler_maclaurin_tail(f, df, d3f, double(n_terms + 1)));
    return sum.value();
}

namespace {

double default_radius(const CatalogModel& model) {
    if (model.zeros) return 0.7 * std::abs(model.zeros->at(1));
    return 0.5;
}

std::vector<double> geometric_breaks(double a, double b) {
    std::vector<double> br{a};
    for (double t = 2.0 * a; t < b; t *= 2.0) br.push_back(t);
    br.push_back(b);
    return br;
}

struct Setup {
    double R;
    double t_max;
    double tol;
};

Setup resolve(const CatalogModel& model, const ContourOptions& opt, cplx s) {
    // for Re s < 0 the weight t^{-s} amplifies roundoff at large t; the table handles the tail
    const double t_max = opt.t_max > 0.0 ? opt.t_max : (s.real() >= 0.0 ? 400.0 : 30.0);
    Setup st{opt.R > 0.0 ? opt.R : default_radius(model), t_max, opt.tol > 0.0 ? opt.tol : default_quad_tol()};
    if (!(st.t_max > st.R)) throw DomainError("contour: t_max must exceed R");
    if (model.zeros && st.R >= std::abs(model.zeros->at(1)))
        throw DomainError("contour: R must be smaller than the modulus of the first zero");
    if (!model.eval) throw DomainError("contour: the model has no evaluator");
    return st;
}

// Roundoff floor of the integral of g, a few ulps of |g| per unit length.
double noise_floor(const RealToComplex& g, const std::vector<double>& br) {
    double acc = 0.0;
    for (size_t i = 0; i + 1 < br.size(); ++i)
        acc += (br[i + 1] - br[i]) * std::max(std::abs(g(br[i])), std::abs(g(br[i + 1])));
    return 8.0 * std::numeric_limits<double>::epsilon() * acc;
}

cplx ray_quad(const RealToComplex& f, double a, double b, double tol, double floor = 0.0) {
    QuadOptions q;
    q.abs_tol = std::max(tol, floor);
    q.rel_tol = 1e-13;
    q.max_intervals = 20000;
    QuadResult r = integrate_gk(f, geometric_breaks(a, b), q);
    if (!r.converged) {
        std::ostringstream os;
        os << "ray quadrature did not converge (error estimate " << r.error << ")";
        throw AccuracyError(os.str());
    }
    return r.value;
}

}  // namespace

cplx circle_term(const CatalogModel& model, cplx s, double R, double tol) {
    const double psi = model.asym.psi;
    auto f = [&](double th) -> cplx {
        cplx e = std::exp(I * th);
        return std::exp(-I * s * th) * I * R * e * model.log_deriv(R * e);
    };
    std::vector<double> br;
    for (int i = 0; i <= 8; ++i) br.push_back(psi - 2.0 * pi + 2.0 * pi * i / 8.0);
    QuadOptions q;
    q.abs_tol = tol * 1e-2;
    q.rel_tol = 1e-14;
    QuadResult r = integrate_gk(f, br, q);
    if (!r.converged) throw AccuracyError("circle quadrature did not converge");
    return -std::exp(-s * std::log(R)) / (2.0 * pi * I) * r.value;
}

cplx contour_zeta(const CatalogModel& model, cplx s, const ContourOptions& opt) {
    if (!(s.real() > model.alpha())) throw RangeError("contour_zeta: need Re s > alpha");
    const Setup st = resolve(model, opt, s);
    const AsymExpansion& A = model.asym;
    const cplx pref = ray_prefactor(s, A.psi);
    cplx ray = 0.0;
    if (pref != 0.0) {
        const cplx eps = std::exp(I * A.psi);
        auto f = [&](double t) -> cplx {
            return std::exp(-s * std::log(t)) * eps * model.log_deriv(t * eps);
        };
        ray = pref * ray_quad(f, st.R, st.t_max, st.tol);
        // beyond t_max the integrand is replaced by its large-t expansion
        ray += l_asy_partial(A, s, st.t_max, 0, A.N);
    }
    return ray + circle_term(model, s, st.R, st.tol);
}

ContinuedParts continued_parts(const CatalogModel& model, cplx s, const ContourOptions& opt) {
    const Setup st = resolve(model, opt, s);
    const AsymExpansion& A = model.asym;
    if (!(s.real() > A.alpha - double(A.N) / A.m - A.delta))
        throw RangeError("continued_zeta: s lies left of the strip covered by the large-z table");
    // subtract rows until the remainder decays faster than t^{-2}
    int n_use = -1;
    while (!(A.beta(n_use + 1) < s.real() - 1.0)) ++n_use;
    if (n_use + 1 > A.N)
        throw RangeError("continued_zeta: large-z table too short for this s; raise the depth");

    const cplx pref = ray_prefactor(s, A.psi);
    const cplx eps = std::exp(I * A.psi);
    ContinuedParts out{0.0, 0.0, 0.0, n_use};
    if (pref != 0.0) {
        auto f = [&](double t) -> cplx {
            const cplx L(std::log(t), A.psi);
            CompensatedSum sub;
            for (int j = 0; j <= n_use; ++j) {
                const double b = A.beta(j);
                const cplx zb = std::exp((b - 1.0) * L);
                for (int k = 0; k <= A.M; ++k) {
                    const cplx d = A.d(j, k);
                    if (d == 0.0) continue;
                    cplx v = b * std::pow(L, k);
                    if (k >= 1) v += double(k) * std::pow(L, k - 1);
                    sub.add(d * zb * v);
                }
            }
            const cplx raw = eps * model.log_deriv(t * eps);
            return std::exp(-s * std::log(t)) * (raw - eps * sub.value());
        };
        auto g = [&](double t) -> cplx { return std::exp(-s * std::log(t)) * model.log_deriv(t * eps); };
        const double floor = noise_floor(g, geometric_breaks(st.R, st.t_max));
        out.ray = pref * ray_quad(f, st.R, st.t_max, st.tol, floor) + l_asy_partial(A, s, st.t_max, n_use + 1, A.N);
    }
    out.asym = l_asy_partial(A, s, st.R, 0, n_use);
    out.circle = circle_term(model, s, st.R, st.tol);
    return out;
}

cplx continued_zeta(const CatalogModel& model, cplx s, const ContourOptions& opt,
                    std::vector<std::string>* warnings) {
    if (warnings) {
        for (const Pole& p : classify_poles(model.asym).poles) {
            if (std::abs(s - p.location) < 1e-3) {
                std::ostringstream os;
                os << "s is within 1e-3 of the pole at " << p.location << "; result is ill-conditioned";
                warnings->push_back(os.str());
            }
        }
    }
    ContinuedParts p = continued_parts(model, s, opt);
    return p.ray + p.asym + p.circle;
}

}  // namespace zk
