#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zetakit/asym.hpp"
#include "zetakit/numerics.hpp"
#include "zetakit/taylor.hpp"

namespace zk {

// a_1, a_2, ... : stored values first, then the asymptotic formula.
struct ZeroSequence {
    double alpha = 0.0;
    std::vector<cplx> values;
    int n_exact = 0;
    std::function<cplx(cplx)> asymptotic;  // continuous in n

    cplx at(long n) const;  // 1-based
};

struct ClosedForm {
    std::string text;
    cplx value;
};

struct CatalogModel {
    std::string name;
    std::map<std::string, cplx> params;
    PowerSeries series;
    AsymExpansion asym;
    std::optional<ZeroSequence> zeros;
    std::function<ScaledValue(cplx)> eval;
    // zeta(n) = -n b_n may be used at n <= alpha (only where the large-z block is known not to contribute)
    bool allow_extended = false;
    std::optional<int> m_neg;  // negative terms of a real sequence
    std::map<int, ClosedForm> closed_forms;
    std::optional<ClosedForm> closed_prime0;
    std::vector<std::string> notes;

    cplx log_deriv(cplx z) const { return eval(z).log_deriv(); }
    double alpha() const { return asym.alpha; }
};

CatalogModel riemann_model(int asym_depth = 16);
CatalogModel hurwitz_model(cplx a, int asym_depth = 16);
CatalogModel airy_model(int depth = 30);
ZeroSequence airy_zeros(int count, int n_exact);
CatalogModel pcf_model(double a, int depth = 14);
CatalogModel chf_model(cplx a, cplx b, int depth = 12);

// Riemann zeta at integer k >= 2 by direct summation plus an Euler-Maclaurin tail.
double riemann_zeta_direct(int k);

struct ZetaValue {
    cplx value;
    std::string method;  // recursion | continuation | structural-zero
};

// zeta(n) at an integer n through the Taylor side (n > alpha) or the large-z table.
ZetaValue special_value(const CatalogModel& model, int n);

// zeta'(0); uses the real-sequence variant when the model counts its negative terms.
cplx special_prime0(const CatalogModel& model);

// Taylor-side model for the zeros of F': coefficients (m+1) c_{m+1}. No large-z table.
CatalogModel derivative_series_model(const CatalogModel& model);

}  // namespace zk
