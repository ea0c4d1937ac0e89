#pragma once

#include <string>
#include <vector>

#include "zetakit/catalog.hpp"

namespace zk {

// Direct sum over the first n_terms zeros plus an Euler-Maclaurin tail on the asymptotic zeros.
// Powers use the branch cut at angle psi.
cplx zeta_series(const ZeroSequence& zeros, cplx s, long n_terms, double psi);

struct ContourOptions {
    double R = 0.0;       // circle radius; 0 picks 0.7 |a_1| (or 0.5 when no zero list)
    double t_max = 0.0;  // 0: 400 for Re s >= 0, 30 otherwise
    double tol = 0.0;     // 0 picks the default quadrature tolerance
};

// Ray integral plus circle term; needs Re s > alpha.
cplx contour_zeta(const CatalogModel& model, cplx s, const ContourOptions& opt = {});

// Continued representation valid for Re s > alpha - N/m - delta. Warnings (pole proximity)
// are appended to *warnings when given.
cplx continued_zeta(const CatalogModel& model, cplx s, const ContourOptions& opt = {},
                    std::vector<std::string>* warnings = nullptr);

// The pieces of the continued representation, for inspection.
struct ContinuedParts {
    cplx ray;     // asymptotics-subtracted ray integral
    cplx asym;    // closed-form block of the subtracted terms
    cplx circle;  // circle term
    int n_used;   // rows of the large-z table that were subtracted
};
ContinuedParts continued_parts(const CatalogModel& model, cplx s, const ContourOptions& opt = {});

// Circle term -(R^{-s}/2 pi i) int_{psi-2pi}^{psi} e^{-i s theta} d/dtheta ln F(R e^{i theta}) dtheta.
cplx circle_term(const CatalogModel& model, cplx s, double R, double tol);

}  // namespace zk
