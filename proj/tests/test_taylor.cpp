#include <doctest.h>

#include "support.hpp"
#include "zetakit/catalog.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/taylor.hpp"

using namespace zk;
using namespace zt;

namespace {

PowerSeries one_minus_z(int order) {
    PowerSeries s;
    s.c.assign(size_t(order) + 1, 0.0);
    s.c[0] = 1.0;
    s.c[1] = -1.0;
    return s;
}

PowerSeries random_series(int order) {
    PowerSeries s;
    double r = uniform(0.5, 2.0), th = uniform(-pi, pi);
    s.c.push_back(std::polar(r, th));
    for (int j = 1; j <= order; ++j) {
        cplx c;
        do c = cplx(uniform(-2, 2), uniform(-2, 2));
        while (std::abs(c) > 2.0);
        s.c.push_back(c);
    }
    return s;
}

std::vector<CatalogModel> all_catalog() {
    std::vector<CatalogModel> v;
    v.push_back(riemann_model());
    v.push_back(hurwitz_model(0.25));
    v.push_back(hurwitz_model(-2.5));
    v.push_back(airy_model());
    v.push_back(derivative_series_model(airy_model()));
    for (double a : {0.0, 1.0, 2.5}) v.push_back(pcf_model(a));
    v.push_back(chf_model(0.5, 1.5));
    v.push_back(chf_model(1.2, 2.7));
    return v;
}

const double airy_G = zk::gamma(2.0 / 3.0) / zk::gamma(1.0 / 3.0);

}  // namespace

TEST_CASE("log_coeffs examples") {
    LogCoeffs b = log_coeffs(one_minus_z(12));
    REQUIRE(b.b.size() == 13);
    CHECK(b.b[0] == cplx(0.0));
    for (int j = 1; j <= 12; ++j) CHECK(near_abs(b.b[j], -1.0 / j, 1e-15));

    CatalogModel ai = airy_model();
    LogCoeffs ba = log_coeffs(ai.series);
    CHECK(near_rel(ba.b[1], std::cbrt(3.0) * airy_G, 1e-14));

    PowerSeries constant{{cplx(2.5)}};
    for (const cplx& x : log_coeffs(constant).b) CHECK(x == cplx(0.0));

    PowerSeries bad{{0.0, 1.0}};
    CHECK_THROWS_AS(log_coeffs(bad), DomainError);
}

TEST_CASE("zeta_pos_int examples") {
    CatalogModel r = riemann_model();
    CHECK(near_rel(zeta_pos_int(r.series, 2, 1.0), pi * pi / 6.0, 1e-12));
    CatalogModel ai = airy_model();
    CHECK(near_rel(zeta_pos_int(ai.series, 2, 1.5), std::pow(3.0, 2.0 / 3.0) * airy_G * airy_G, 1e-12));
    PowerSeries f = one_minus_z(15);
    for (int n = 1; n <= 15; ++n) CHECK(near_abs(zeta_pos_int(f, n, 0.0), 1.0, 1e-14));
    CHECK_THROWS_AS(zeta_pos_int(ai.series, 1, 1.5), RangeError);
    CHECK(near_rel(zeta_pos_int(ai.series, 1, 1.5, true), oracle::airy_zeta[1], 1e-13));
}

TEST_CASE("zeta_via_bell examples") {
    CatalogModel r = riemann_model();
    CHECK(near_abs(zeta_via_bell(r.series, 1), -r.series.c[1] / r.series.c[0], 1e-15));
    CHECK(near_rel(zeta_via_bell(r.series, 3), -oracle::psi2_1 / 2.0, 1e-12));
    CatalogModel ai = airy_model();
    double G = airy_G;
    double want4 = std::pow(3.0, 4.0 / 3.0) * std::pow(G, 4) - G / std::pow(3.0, 2.0 / 3.0);
    CHECK(near_rel(zeta_via_bell(ai.series, 4), want4, 1e-12));
    CHECK_THROWS_AS(zeta_via_bell(ai.series, 21), UnsupportedOrderError);
}

TEST_CASE("exact_sum_rule examples") {
    CatalogModel ai = airy_model();
    const auto& c = ai.series.c;
    std::map<int, cplx> z;
    for (int n = 1; n <= 6; ++n) z[n] = oracle::airy_zeta[std::min(n, 5)];
    z[6] = zeta_pos_int(ai.series, 6, 1.5);
    cplx z1 = z[1];
    cplx want2 = std::pow(c[1], -2) * (c[1] * c[1] - 2.0 * c[2] * c[0]) * z1 * z1;
    CHECK(near_abs(exact_sum_rule(ai.series, 2, z), want2, 1e-14));
    cplx want3 = z[2] * z1 - std::pow(c[1], -3) * (c[2] * c[1] * c[0] - 3.0 * c[3] * c[0] * c[0]) * z1 * z1 * z1;
    CHECK(near_abs(exact_sum_rule(ai.series, 3, z), want3, 1e-14));
    for (int n = 2; n <= 6; ++n) CHECK(near_abs(exact_sum_rule(ai.series, n, z), z[n], 1e-9));
    // c_2 = 0 for Airy: the n = 2 rule reduces to zeta(1)^2
    CHECK(near_abs(exact_sum_rule(ai.series, 2, z), z1 * z1, 1e-14));

    PowerSeries even{{1.0, 0.0, -0.5, 0.0}};
    CHECK_THROWS_AS(exact_sum_rule(even, 2, z), DomainError);
}

TEST_CASE("hadamardize examples") {
    PowerSeries f{{2.0, -3.0, 0.5}};
    PowerSeries h = hadamardize(f, 0.5);
    for (size_t j = 0; j < f.c.size(); ++j) CHECK(near_abs(h.c[j], f.c[j] / 2.0, 1e-16));

    CatalogModel r = riemann_model();
    PowerSeries hr = hadamardize(r.series, 1.0);
    // e^{gamma z}/Gamma(1-z) = exp(-sum_{k>=2} zeta(k) z^k / k)
    CHECK(near_abs(hr.c[0], 1.0, 1e-15));
    CHECK(near_abs(hr.c[1], 0.0, 1e-15));
    CHECK(near_rel(hr.c[2], -pi * pi / 12.0, 1e-13));
    CHECK(near_rel(hr.c[3], -riemann_zeta_direct(3) / 3.0, 1e-13));

    CatalogModel ai = airy_model();
    PowerSeries ha = hadamardize(ai.series, 1.5);
    CHECK(near_abs(log_coeffs(ha).b[1], 0.0, 1e-15));
    for (int n = 2; n <= 12; ++n)
        CHECK(near_rel(zeta_pos_int(ha, n, 1.5), zeta_pos_int(ai.series, n, 1.5), 1e-10));
}

TEST_CASE("exp and log are inverse on truncated series") {
    for (int t = 0; t < 100; ++t) {
        PowerSeries s = random_series(30);
        PowerSeries back = exp_series(log_coeffs(s), s.c[0]);
        REQUIRE(back.c.size() == s.c.size());
        double scale = 0.0;
        for (const cplx& x : s.c) scale = std::max(scale, std::abs(x));
        for (size_t j = 0; j < s.c.size(); ++j) CHECK(std::abs(back.c[j] - s.c[j]) <= 1e-12 * scale);
    }
}

TEST_CASE("Bell polynomials agree with the recursion on every catalog series") {
    for (const CatalogModel& m : all_catalog()) {
        for (int n = 1; n <= 12; ++n) {
            cplx rec = zeta_pos_int(m.series, n, m.alpha(), true);
            CHECK_MESSAGE(near_rel(zeta_via_bell(m.series, n), rec, 1e-9), m.name << " n=" << n);
        }
    }
}

TEST_CASE("scaling invariance") {
    PowerSeries s = random_series(20);
    PowerSeries t = s;
    const cplx k(-3.0, 0.7);
    for (cplx& x : t.c) x *= k;
    LogCoeffs a = log_coeffs(s), b = log_coeffs(t);
    for (size_t j = 0; j < a.b.size(); ++j) CHECK(near_abs(a.b[j], b.b[j], 1e-12 * std::max(1.0, std::abs(a.b[j]))));
    for (int n = 1; n <= 10; ++n) CHECK(near_abs(zeta_pos_int(s, n, 0.0), zeta_pos_int(t, n, 0.0), 1e-10 * std::max(1.0, std::abs(zeta_pos_int(s, n, 0.0)))));
}

TEST_CASE("hadamardize is idempotent") {
    for (double alpha : {0.5, 1.0, 1.5, 2.0}) {
        PowerSeries s = random_series(25);
        PowerSeries h1 = hadamardize(s, alpha), h2 = hadamardize(h1, alpha);
        for (size_t j = 0; j < h1.c.size(); ++j) CHECK(near_abs(h2.c[j], h1.c[j], 1e-12 * std::max(1.0, std::abs(h1.c[j]))));
    }
}

TEST_CASE("Hadamard-form fast path") {
    for (int fa : {1, 2}) {
        PowerSeries s = random_series(12);
        s.c[0] = 1.0;
        for (int j = 1; j <= fa; ++j) s.c[j] = 0.0;
        LogCoeffs b = log_coeffs(s);
        for (int j = fa + 1; j <= 2 * fa + 1; ++j) CHECK(near_abs(b.b[j], s.c[j], 1e-15));
    }
}
