#include "zetakit/aaa.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "zetakit/errors.hpp"

namespace zk {

namespace {

struct NumDen {
    cplx N;
    cplx D;
};

NumDen num_den(const BarycentricModel& m, cplx s) {
    CompensatedSum n, d;
    for (size_t j = 0; j < m.support.size(); ++j) {
        cplx c = m.weights[j] / (s - m.support[j]);
        n.add(c * m.values[j]);
        d.add(c);
    }
    return {n.value(), d.value()};
}

// Fix the global phase so that real data gives real weights.
void normalize_phase(std::vector<cplx>& w) {
    size_t big = 0;
    for (size_t j = 1; j < w.size(); ++j)
        if (std::abs(w[j]) > std::abs(w[big])) big = j;
    if (std::abs(w[big]) == 0.0) return;
    cplx ph = std::conj(w[big]) / std::abs(w[big]);
    for (cplx& x : w) x *= ph;
}

}  // namespace

BarycentricModel aaa_fit(const std::vector<double>& points, const std::vector<cplx>& samples,
                         double rel_tol, int max_degree) {
    const size_t M = points.size();
    if (samples.size() != M) throw DomainError("aaa_fit: points and samples differ in length");
    std::vector<double> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::unique(sorted.begin(), sorted.end()) - sorted.begin() < 4)
        throw DomainError("aaa_fit: need at least 4 distinct points");
    double fmax = 0.0;
    for (const cplx& f : samples) {
        if (!std::isfinite(f.real()) || !std::isfinite(f.imag()))
            throw DomainError("aaa_fit: non-finite sample");
        fmax = std::max(fmax, std::abs(f));
    }
    const double scale = fmax > 0.0 ? fmax : 1.0;

    std::vector<bool> in_support(M, false);
    std::vector<size_t> sup;
    std::vector<cplx> R(M);
    cplx mean = 0.0;
    for (const cplx& f : samples) mean += f;
    mean /= double(M);
    std::fill(R.begin(), R.end(), mean);

    BarycentricModel best;
    double best_err = std::numeric_limits<double>::infinity();
    std::vector<double> history;

    for (int deg = 0; deg <= max_degree && sup.size() < M; ++deg) {
        size_t pick = 0;
        double worst = -1.0;
        for (size_t i = 0; i < M; ++i) {
            if (in_support[i]) continue;
            double e = std::abs(samples[i] - R[i]);
            if (e > worst) {
                worst = e;
                pick = i;
            }
        }
        in_support[pick] = true;
        sup.push_back(pick);
        const size_t m = sup.size();

        std::vector<size_t> rows;
        for (size_t i = 0; i < M; ++i)
            if (!in_support[i]) rows.push_back(i);
        Eigen::MatrixXcd C(rows.size(), m), L(rows.size(), m);
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t k = 0; k < m; ++k) {
                cplx c = 1.0 / (points[rows[r]] - points[sup[k]]);
                C(r, k) = c;
                L(r, k) = samples[rows[r]] * c - c * samples[sup[k]];
            }
        std::vector<cplx> w(m);
        if (rows.empty() || m == 1) {
            std::fill(w.begin(), w.end(), 0.0);
            w[0] = 1.0;
        } else {
            Eigen::JacobiSVD<Eigen::MatrixXcd> svd(L, Eigen::ComputeFullV);
            Eigen::VectorXcd v = svd.matrixV().col(m - 1);
            for (size_t k = 0; k < m; ++k) w[k] = v(k);
        }
        normalize_phase(w);

        BarycentricModel cur;
        for (size_t k = 0; k < m; ++k) {
            cur.support.push_back(points[sup[k]]);
            cur.values.push_back(samples[sup[k]]);
        }
        cur.weights = w;

        double err = 0.0;
        for (size_t i = 0; i < M; ++i) {
            if (in_support[i]) {
                R[i] = samples[i];
                continue;
            }
            NumDen nd = num_den(cur, points[i]);
            R[i] = nd.N / nd.D;
            err = std::max(err, std::abs(samples[i] - R[i]));
        }
        if (!std::isfinite(err)) err = std::numeric_limits<double>::infinity();
        history.push_back(err / scale);
        if (err < best_err) {
            best_err = err;
            best = cur;
        }
        if (err <= rel_tol * scale) break;
    }
    best.max_residual = best_err / scale;
    best.residual_history = history;
    best.reached_tolerance = best_err <= rel_tol * scale;
    return best;
}

cplx bary_eval(const BarycentricModel& model, cplx s) {
    for (size_t j = 0; j < model.support.size(); ++j)
        if (s == cplx(model.support[j])) return model.values[j];
    NumDen nd = num_den(model, s);
    if (nd.D == 0.0) return {std::numeric_limits<double>::infinity(), 0.0};
    return nd.N / nd.D;
}

RealFeatures find_real_features(const BarycentricModel& model, double lo, double hi, double step) {
    if (!(hi > lo) || !(step > 0.0)) throw DomainError("find_real_features: need lo < hi and step > 0");
    constexpr double mask = 1e-6;
    auto masked = [&](double a, double b) {
        for (double z : model.support)
            if (z >= a - mask && z <= b + mask) return true;
        return false;
    };
    auto Nr = [&](double x) { return num_den(model, x).N.real(); };
    auto Dr = [&](double x) { return num_den(model, x).D.real(); };
    auto bisect = [](const auto& f, double a, double b) {
        double fa = f(a);
        while (b - a > 1e-10) {
            double c = 0.5 * (a + b);
            double fc = f(c);
            if ((fc < 0) == (fa < 0)) {
                a = c;
                fa = fc;
            } else {
                b = c;
            }
        }
        return 0.5 * (a + b);
    };
    RealFeatures out;
    const long n = long(std::ceil((hi - lo) / step));
    double x0 = lo, N0 = Nr(lo), D0 = Dr(lo);
    for (long i = 1; i <= n; ++i) {
        double x1 = std::min(hi, lo + i * step);
        double N1 = Nr(x1), D1 = Dr(x1);
        if (!masked(x0, x1)) {
            if ((N0 < 0) != (N1 < 0)) {
                double z = bisect(Nr, x0, x1);
                if (std::abs(num_den(model, z).D) > 0.0) out.zeros.push_back(z);
            }
            if ((D0 < 0) != (D1 < 0)) {
                double p = bisect(Dr, x0, x1);
                if (std::abs(num_den(model, p).N) > 0.0) out.poles.push_back(p);
            }
        }
        x0 = x1;
        N0 = N1;
        D0 = D1;
    }
    return out;
}

cplx derivative_at(const BarycentricModel& model, double s, double h) {
    return (bary_eval(model, s + h) - bary_eval(model, s - h)) / (2.0 * h);
}

}  // namespace zk
