#pragma once

#include <functional>
#include <vector>

#include "zetakit/numerics.hpp"

namespace zk {

struct QuadResult {
    cplx value;
    double error;
    bool converged;
};

struct QuadOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_intervals = 4000;
};

// Globally adaptive 7/15-point Gauss-Kronrod on [a, b].
QuadResult integrate_gk(const RealToComplex& f, double a, double b, const QuadOptions& opt = {});

// Same, but [a, b] is first split at the given interior breakpoints.
QuadResult integrate_gk(const RealToComplex& f, const std::vector<double>& breaks,
                        const QuadOptions& opt = {});

// Tanh-sinh rule on (0, 1]; tolerant of integrable endpoint singularities.
QuadResult integrate_tanh_sinh(const RealToComplex& f, double abs_tol, double rel_tol);

// Derivatives f^(0..count-1)(x0) from the trapezoid rule on a circle of radius r.
std::vector<cplx> cauchy_derivatives(const std::function<cplx(cplx)>& f, cplx x0, double r,
                                     int count, int points = 64);

// Default tolerance, overridable through ZETAKIT_QUAD_TOL.
double default_quad_tol();

}  // namespace zk
