#include <doctest.h>

#include "support.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/json_io.hpp"

using namespace zk;
using namespace zt;

TEST_CASE("complex numbers") {
    const cplx z(0.1, -1e-300);
    CHECK(cplx_from_json(to_json(z)) == z);
    CHECK(cplx_from_json(json(2.5)) == cplx(2.5));
    CHECK_THROWS_AS(cplx_from_json(json("x")), DomainError);
}

TEST_CASE("large-z tables round trip bit-exactly") {
    for (const CatalogModel& m : {riemann_model(), airy_model(), pcf_model(1.0), chf_model(0.5, 1.5)}) {
        json j = json::parse(to_json(m.asym).dump());
        AsymExpansion back = asym_from_json(j);
        CHECK(back.alpha == m.asym.alpha);
        CHECK(back.m == m.asym.m);
        CHECK(back.M == m.asym.M);
        CHECK(back.N == m.asym.N);
        CHECK(back.psi == m.asym.psi);
        CHECK(back.lnF0 == m.asym.lnF0);
        CHECK(back.delta == m.asym.delta);
        CHECK(back.table == m.asym.table);
    }
}

TEST_CASE("table schema") {
    json j = to_json(airy_model().asym);
    for (const char* key : {"alpha", "m", "M", "N", "psi", "lnF0", "delta", "d"}) CHECK(j.contains(key));
    REQUIRE(j["d"].is_array());
    for (const json& e : j["d"]) {
        CHECK(e.contains("j"));
        CHECK(e.contains("k"));
        CHECK(e.contains("re"));
        CHECK(e.contains("im"));
    }
    json bad = j;
    bad["d"].push_back(json{{"j", 999}, {"k", 0}, {"re", 1.0}, {"im", 0.0}});
    CHECK_THROWS_AS(asym_from_json(bad), DomainError);
    json missing = j;
    missing.erase("alpha");
    CHECK_THROWS_AS(asym_from_json(missing), DomainError);
}

TEST_CASE("barycentric models round trip") {
    BarycentricModel m;
    m.support = {1.0, 2.5, 3.0};
    m.values = {cplx(1, 2), cplx(-0.3, 0), cplx(7, 1e-17)};
    m.weights = {cplx(0.5, 0), cplx(-0.25, 0.1), cplx(0.125, 0)};
    BarycentricModel back = bary_from_json(json::parse(to_json(m).dump()));
    CHECK(back.support == m.support);
    CHECK(back.values == m.values);
    CHECK(back.weights == m.weights);
    json j = to_json(m);
    j["weights"].erase(0);
    CHECK_THROWS_AS(bary_from_json(j), DomainError);
}

TEST_CASE("model specs") {
    CHECK(model_from_spec(json{{"model", "riemann"}}).name == "riemann");
    CHECK(model_from_spec(json{{"model", "hurwitz"}, {"a", 0.25}}).params.at("a") == cplx(0.25));
    CHECK(model_from_spec(json{{"model", "chf"}, {"a", 0.5}, {"b", 1.5}}).name == "chf");
    CHECK(model_from_spec(json{{"model", "airy"}, {"depth", 12}}).asym.N == 12);
    CHECK_THROWS_AS(model_from_spec(json{{"model", "nope"}}), DomainError);
    CHECK_THROWS_AS(model_from_spec(json{{"model", "chf"}, {"a", 0.5}}), DomainError);
    CHECK_THROWS_AS(model_from_spec(json{{"name", "airy"}}), DomainError);
    json s = model_summary(model_from_spec(json{{"model", "airy"}}));
    CHECK(s["alpha"] == 1.5);
    CHECK(s["has_zeros"] == true);
}
