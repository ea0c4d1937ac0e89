#pragma once

#include <vector>

#include "zetakit/numerics.hpp"

namespace zk {

// r(s) = N(s)/D(s), N = sum w_j f_j/(s - z_j), D = sum w_j/(s - z_j).
struct BarycentricModel {
    std::vector<double> support;
    std::vector<cplx> values;
    std::vector<cplx> weights;
    double max_residual = 0.0;             // relative to max |samples|
    std::vector<double> residual_history;  // one entry per greedy step
    bool reached_tolerance = true;

    int degree() const { return int(support.size()) - 1; }
};

BarycentricModel aaa_fit(const std::vector<double>& points, const std::vector<cplx>& samples,
                         double rel_tol = 1e-13, int max_degree = 100);

// Infinite value at a pole of the approximant.
cplx bary_eval(const BarycentricModel& model, cplx s);

struct RealFeatures {
    std::vector<double> zeros;
    std::vector<double> poles;
};

RealFeatures find_real_features(const BarycentricModel& model, double lo, double hi, double step = 1e-3);

cplx derivative_at(const BarycentricModel& model, double s, double h = 1e-6);

}  // namespace zk
