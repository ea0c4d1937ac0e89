#include "zetakit/json_io.hpp"

#include "zetakit/errors.hpp"

namespace zk {

json to_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

cplx cplx_from_json(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_object() && j.contains("re")) return {j.at("re").get<double>(), j.value("im", 0.0)};
    throw DomainError("expected a number or {re, im}");
}

json to_json(const AsymExpansion& a) {
    json d = json::array();
    for (int j = 0; j <= a.N; ++j)
        for (int k = 0; k <= a.M; ++k) {
            const cplx v = a.d(j, k);
            if (v != 0.0) d.push_back(json{{"j", j}, {"k", k}, {"re", v.real()}, {"im", v.imag()}});
        }
    return json{{"alpha", a.alpha}, {"m", a.m},       {"M", a.M},
                {"N", a.N},         {"psi", a.psi},   {"lnF0", to_json(a.lnF0)},
                {"delta", a.delta}, {"d", d}};
}

AsymExpansion asym_from_json(const json& j) {
    try {
        AsymExpansion a(j.at("alpha").get<double>(), j.at("m").get<int>(), j.at("M").get<int>(),
                        j.at("N").get<int>(), j.at("psi").get<double>(),
                        j.contains("lnF0") ? cplx_from_json(j.at("lnF0")) : cplx(0.0));
        if (j.contains("delta")) a.delta = j.at("delta").get<double>();
        for (const json& e : j.at("d")) {
            const int r = e.at("j").get<int>(), k = e.at("k").get<int>();
            if (r < 0 || r > a.N || k < 0 || k > a.M) throw DomainError("asym table: entry index out of range");
            a.set(r, k, {e.at("re").get<double>(), e.value("im", 0.0)});
        }
        a.validate();
        return a;
    } catch (const json::exception& e) {
        throw DomainError(std::string("asym table: ") + e.what());
    }
}

json to_json(const BarycentricModel& m) {
    json v = json::array(), w = json::array();
    for (const cplx& x : m.values) v.push_back(to_json(x));
    for (const cplx& x : m.weights) w.push_back(to_json(x));
    return json{{"support", m.support}, {"values", v}, {"weights", w}};
}

BarycentricModel bary_from_json(const json& j) {
    try {
        BarycentricModel m;
        m.support = j.at("support").get<std::vector<double>>();
        for (const json& x : j.at("values")) m.values.push_back(cplx_from_json(x));
        for (const json& x : j.at("weights")) m.weights.push_back(cplx_from_json(x));
        if (m.values.size() != m.support.size() || m.weights.size() != m.support.size())
            throw DomainError("barycentric model: support, values and weights differ in length");
        return m;
    } catch (const json::exception& e) {
        throw DomainError(std::string("barycentric model: ") + e.what());
    }
}

CatalogModel model_from_spec(const json& spec) {
    if (!spec.is_object() || !spec.contains("model") || !spec.at("model").is_string())
        throw DomainError("model spec needs a \"model\" name");
    const std::string name = spec.at("model").get<std::string>();
    auto num = [&](const char* key) -> cplx {
        if (!spec.contains(key)) throw DomainError("model \"" + name + "\" needs parameter " + key);
        return cplx_from_json(spec.at(key));
    };
    auto depth = [&](int def) { return spec.contains("depth") ? spec.at("depth").get<int>() : def; };
    if (name == "riemann") return riemann_model(depth(16));
    if (name == "hurwitz") return hurwitz_model(num("a"), depth(16));
    if (name == "airy") return airy_model(depth(30));
    if (name == "airy-prime") return derivative_series_model(airy_model(depth(30)));
    if (name == "pcf") {
        cplx a = num("a");
        if (a.imag() != 0.0) throw DomainError("pcf: a must be real");
        return pcf_model(a.real(), depth(14));
    }
    if (name == "chf") return chf_model(num("a"), num("b"), depth(12));
    throw DomainError("unknown model \"" + name + "\" (riemann, hurwitz, airy, airy-prime, pcf, chf)");
}

json model_summary(const CatalogModel& m) {
    json params = json::object();
    for (const auto& [k, v] : m.params) params[k] = to_json(v);
    json c = json::array();
    for (int i = 0; i <= std::min(m.series.order(), 8); ++i) c.push_back(to_json(m.series.c[i]));
    json nonzero = json::array();
    for (int j = 0; j <= m.asym.N; ++j)
        for (int k = 0; k <= m.asym.M; ++k)
            if (std::abs(m.asym.d(j, k)) > coefficient_zero_threshold)
                nonzero.push_back(json{{"j", j}, {"k", k}, {"value", to_json(m.asym.d(j, k))}});
    return json{{"name", m.name},
                {"params", params},
                {"alpha", m.asym.alpha},
                {"m", m.asym.m},
                {"M", m.asym.M},
                {"N", m.asym.N},
                {"psi", m.asym.psi},
                {"lnF0", to_json(m.asym.lnF0)},
                {"taylor", c},
                {"asym_nonzero", nonzero},
                {"has_zeros", m.zeros.has_value()},
                {"notes", m.notes}};
}

}  // namespace zk
