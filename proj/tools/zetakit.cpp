#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zetakit/aaa.hpp"
#include "zetakit/catalog.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/json_io.hpp"
#include "zetakit/series_eval.hpp"
#include "zetakit/shift.hpp"
#include "zetakit/taylor.hpp"

using namespace zk;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

cplx parse_complex(std::string s) {
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s.empty()) throw UsageError("empty number");
    try {
        if (s.back() != 'i') {
            size_t pos = 0;
            double v = std::stod(s, &pos);
            if (pos != s.size()) throw UsageError("bad number '" + s + "'");
            return v;
        }
        std::string body = s.substr(0, s.size() - 1);
        size_t split = std::string::npos;
        for (size_t i = 1; i < body.size(); ++i)
            if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') split = i;
        std::string re = split == std::string::npos ? "0" : body.substr(0, split);
        std::string im = split == std::string::npos ? body : body.substr(split);
        if (im == "" || im == "+") im = "1";
        if (im == "-") im = "-1";
        size_t p1 = 0, p2 = 0;
        double r = std::stod(re, &p1), m = std::stod(im, &p2);
        if (p1 != re.size() || p2 != im.size()) throw UsageError("bad number '" + s + "'");
        return {r, m};
    } catch (const std::logic_error&) {
        throw UsageError("bad number '" + s + "'");
    }
}

std::vector<int> parse_range(const std::string& s) {
    std::vector<int> out;
    try {
        size_t dots = s.find("..");
        if (dots != std::string::npos) {
            int a = std::stoi(s.substr(0, dots)), b = std::stoi(s.substr(dots + 2));
            if (b < a) throw UsageError("empty range '" + s + "'");
            for (int n = a; n <= b; ++n) out.push_back(n);
            return out;
        }
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            size_t pos = 0;
            out.push_back(std::stoi(item, &pos));
            if (pos != item.size()) throw UsageError("bad integer '" + item + "'");
        }
    } catch (const std::logic_error&) {
        throw UsageError("bad range '" + s + "'");
    }
    if (out.empty()) throw UsageError("empty range");
    return out;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::string fmt(cplx z) {
    if (std::abs(z.imag()) <= 1e-15 * std::max(1.0, std::abs(z.real()))) return fmt(z.real());
    return fmt(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt(std::abs(z.imag())) + "i";
}

struct Options {
    std::string model;
    std::string a, b, A = "1", B = "0", n, s;
    int depth = -1;
    double R = 0.0, tmax = 0.0, tol = 0.0;
    long nterms = 10000;
    double lo = 2.0, hi = 8.0, scan_lo = -3.0, scan_hi = 0.0;
    int points = 100;
    std::string table;
    bool json = false, check = false;
};

json spec_of(const Options& o) {
    if (o.model.empty()) throw UsageError("--model is required");
    json spec{{"model", o.model}};
    auto put = [&](const char* key, const std::string& v) {
        if (v.empty()) return;
        cplx z = parse_complex(v);
        spec[key] = z.imag() == 0.0 ? json(z.real()) : to_json(z);
    };
    put("a", o.a);
    put("b", o.b);
    if (o.depth > 0) spec["depth"] = o.depth;
    return spec;
}

CatalogModel load_model(const Options& o) {
    try {
        return model_from_spec(spec_of(o));
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    } catch (const RangeError& e) {
        throw UsageError(e.what());
    }
}

ContourOptions contour_opts(const Options& o) { return {o.R, o.tmax, o.tol}; }

cplx require_s(const Options& o) {
    if (o.s.empty()) throw UsageError("--s is required");
    return parse_complex(o.s);
}

struct Report {
    json doc;
    std::vector<std::string> errors;
};

int finish(const Options& o, Report& r, const std::string& text) {
    if (!r.errors.empty()) r.doc["errors"] = r.errors;
    if (o.json)
        std::cout << r.doc.dump(2) << "\n";
    else
        std::cout << text;
    for (const std::string& e : r.errors) std::cerr << "error: " << e << "\n";
    return r.errors.empty() ? 0 : 1;
}

json check_entry(const std::string& path, cplx other, cplx value) {
    return json{{"path", path}, {"value", to_json(other)}, {"discrepancy", std::abs(other - value)}};
}

std::string check_text(const json& c) {
    return "  check[" + c["path"].get<std::string>() + "] " + fmt(cplx_from_json(c["value"])) +
           " (diff " + fmt(c["discrepancy"].get<double>()) + ")";
}

// --- values -------------------------------------------------------------

int cmd_values(const Options& o) {
    if (o.n.empty()) throw UsageError("--n is required");
    const std::vector<int> ns = parse_range(o.n);
    CatalogModel m = load_model(o);
    Report r;
    r.doc = {{"command", "values"}, {"spec", spec_of(o)}, {"results", json::array()}};
    std::ostringstream text;
    for (int n : ns) {
        try {
            ZetaValue v = special_value(m, n);
            json item{{"n", n}, {"value", to_json(v.value)}, {"method", v.method}};
            text << "zeta(" << n << ") = " << fmt(v.value) << "  [" << v.method << "]";
            if (m.closed_forms.count(n)) {
                const ClosedForm& cf = m.closed_forms.at(n);
                item["closed_form"] = cf.text;
                item["closed_value"] = to_json(cf.value);
                text << "  closed form " << cf.text << " = " << fmt(cf.value);
            }
            if (o.check) {
                json checks = json::array();
                if (v.method == "recursion") {
                    if (n <= 20) checks.push_back(check_entry("bell", zeta_via_bell(m.series, n), v.value));
                    if (m.zeros && n > m.alpha() + 0.25)
                        checks.push_back(check_entry(
                            "series", zeta_series(*m.zeros, double(n), o.nterms, m.asym.psi), v.value));
                } else if (m.zeros && m.eval) {
                    checks.push_back(check_entry("continued", continued_zeta(m, double(n), contour_opts(o)), v.value));
                }
                if (m.closed_forms.count(n))
                    checks.push_back(check_entry("closed-form", m.closed_forms.at(n).value, v.value));
                item["checks"] = checks;
                for (const json& c : checks) text << "\n" << check_text(c);
            }
            text << "\n";
            r.doc["results"].push_back(item);
        } catch (const Error& e) {
            r.errors.push_back("zeta(" + std::to_string(n) + "): " + e.what());
        }
    }
    return finish(o, r, text.str());
}

// --- poles --------------------------------------------------------------

json report_json(const PoleReport& rep) {
    json poles = json::array();
    for (const Pole& p : rep.poles)
        poles.push_back({{"location", p.location},
                         {"order", p.order},
                         {"residue", to_json(p.residue)},
                         {"possible_cancellation", p.possible_cancellation}});
    const char* status = rep.zeta0_status == ZeroStatus::Value  ? "value"
                         : rep.zeta0_status == ZeroStatus::Pole ? "pole"
                                                                : "indeterminate";
    json out{{"poles", poles}, {"zeta0_status", status}};
    if (rep.zeta0_status == ZeroStatus::Value) out["zeta0"] = to_json(rep.zeta0);
    if (rep.has_zeta_prime0) out["zeta_prime0"] = to_json(rep.zeta_prime0);
    return out;
}

std::string report_text(const PoleReport& rep) {
    std::ostringstream t;
    t << "poles:\n";
    for (const Pole& p : rep.poles) {
        t << "  s = " << fmt(p.location) << "  order " << p.order << "  residue " << fmt(p.residue);
        if (p.possible_cancellation) t << "  (leading coefficient tiny: possible cancellation)";
        t << "\n";
    }
    if (rep.poles.empty()) t << "  none in the table range\n";
    if (rep.zeta0_status == ZeroStatus::Value) t << "zeta(0) = " << fmt(rep.zeta0) << "\n";
    else if (rep.zeta0_status == ZeroStatus::Pole) t << "zeta(0): pole\n";
    else t << "zeta(0): indeterminate\n";
    if (rep.has_zeta_prime0) t << "zeta'(0) = " << fmt(rep.zeta_prime0) << "\n";
    return t.str();
}

int cmd_poles(const Options& o) {
    Report r;
    std::ostringstream text;
    std::optional<CatalogModel> m;
    AsymExpansion table;
    if (!o.table.empty()) {
        std::ifstream in(o.table);
        if (!in) throw UsageError("cannot open " + o.table);
        json j;
        try {
            in >> j;
            table = asym_from_json(j);
        } catch (const json::exception& e) {
            throw UsageError(std::string("bad table file: ") + e.what());
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
        r.doc = {{"command", "poles"}, {"table", o.table}};
    } else {
        m = load_model(o);
        table = m->asym;
        r.doc = {{"command", "poles"}, {"spec", spec_of(o)}};
    }
    PoleReport rep = classify_poles(table);
    if (m && m->m_neg && m->name == "hurwitz" && rep.has_zeta_prime0)
        rep.zeta_prime0 = special_prime0(*m);
    r.doc["report"] = report_json(rep);
    text << report_text(rep);
    if (o.check && m && m->zeros && m->eval) {
        json checks = json::array();
        for (const Pole& p : rep.poles) {
            if (p.order != 1) continue;
            try {
                const double h = 1e-3;
                cplx up = h * continued_zeta(*m, p.location + h, contour_opts(o));
                cplx dn = -h * continued_zeta(*m, p.location - h, contour_opts(o));
                json c = check_entry("residue-quadrature", 0.5 * (up + dn), p.residue);
                c["location"] = p.location;
                checks.push_back(c);
                text << check_text(c) << " at s = " << fmt(p.location) << "\n";
            } catch (const RangeError&) {
                // outside the table strip
            } catch (const Error& e) {
                r.errors.push_back("check at " + fmt(p.location) + ": " + e.what());
            }
        }
        if (rep.zeta0_status == ZeroStatus::Value) {
            try {
                json c = check_entry("zeta0-quadrature", continued_zeta(*m, 0.0, contour_opts(o)), rep.zeta0);
                checks.push_back(c);
                text << check_text(c) << " at s = 0\n";
            } catch (const Error& e) {
                r.errors.push_back(std::string("check at 0: ") + e.what());
            }
        }
        r.doc["checks"] = checks;
    }
    return finish(o, r, text.str());
}

// --- shift --------------------------------------------------------------

int cmd_shift(const Options& o) {
    CatalogModel m = load_model(o);
    ShiftParams sh{parse_complex(o.A), parse_complex(o.B)};
    if (sh.A == 0.0) throw UsageError("--A must be nonzero");
    const cplx mu = sh.mu();
    cplx lnF_shift = m.asym.lnF0;
    if (mu != 0.0) {
        if (!m.eval) throw UsageError("model has no evaluator for F(-B/A)");
        lnF_shift = m.eval(-mu).log_value();
    }
    Report r;
    std::ostringstream text;
    r.doc = {{"command", "shift"}, {"spec", spec_of(o)}, {"A", to_json(sh.A)}, {"B", to_json(sh.B)}};
    try {
        ShiftedResult res = shifted_values(m.asym, sh, lnF_shift);
        json omega = json::array();
        text << "Omega table (nonzero entries):\n";
        for (int j = 0; j <= res.omega.N; ++j)
            for (int k = 0; k <= res.omega.M; ++k) {
                cplx v = res.omega.d(j, k);
                if (std::abs(v) <= coefficient_zero_threshold) continue;
                omega.push_back({{"j", j}, {"k", k}, {"value", to_json(v)}});
                text << "  Omega[" << j << "," << k << "] = " << fmt(v) << "\n";
            }
        r.doc["omega"] = omega;
        r.doc["report"] = report_json(res.report);
        text << report_text(res.report);
        json neg = json::array();
        for (int n = 1; n <= 5 && n + 1 <= res.omega.N; ++n) {
            cplx v = shifted_zeta_int(res, sh, nullptr, -n);
            neg.push_back({{"n", -n}, {"value", to_json(v)}});
            text << "zeta(" << -n << ") = " << fmt(v) << "\n";
        }
        r.doc["negative_integers"] = neg;
        if (o.check) {
            json checks = json::array();
            if (m.name == "riemann" && sh.A == 1.0 && sh.B.imag() == 0.0) {
                const cplx a = 1.0 + sh.B;
                for (int j = 2; j <= std::min(8, res.omega.N); ++j) {
                    cplx want = bernoulli_poly(j, a) / (double(j) * (j - 1));
                    json c = check_entry("B_j(a)/(j(j-1)) j=" + std::to_string(j), want, res.omega.d(j, 0));
                    checks.push_back(c);
                    text << check_text(c) << "\n";
                }
            }
            try {
                RightmostPoleCheck rc = rightmost_pole_check(m.asym, sh);
                cplx want = std::exp(-m.alpha() * std::log(sh.A));
                json c = check_entry("residue ratio A^-alpha", want, rc.residue_ratio);
                checks.push_back(c);
                text << check_text(c) << "\n";
            } catch (const DomainError&) {
                // s = alpha is not a pole for this model
            }
            r.doc["checks"] = checks;
        }
    } catch (const Error& e) {
        r.errors.push_back(e.what());
    }
    return finish(o, r, text.str());
}

// --- series / contour / continue ----------------------------------------

int scalar_command(const Options& o, const std::string& name) {
    CatalogModel m = load_model(o);
    const cplx s = require_s(o);
    Report r;
    std::ostringstream text;
    r.doc = {{"command", name}, {"spec", spec_of(o)}, {"s", to_json(s)}};
    try {
        cplx v;
        std::vector<std::string> warnings;
        if (name == "series") {
            if (!m.zeros) throw DomainError("model has no zero sequence");
            v = zeta_series(*m.zeros, s, o.nterms, m.asym.psi);
        } else if (name == "contour") {
            v = contour_zeta(m, s, contour_opts(o));
        } else {
            v = continued_zeta(m, s, contour_opts(o), &warnings);
        }
        r.doc["value"] = to_json(v);
        r.doc["warnings"] = warnings;
        for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
        text << "zeta(" << fmt(s) << ") = " << fmt(v) << "\n";
        if (o.check) {
            json checks = json::array();
            auto add = [&](const std::string& path, cplx other) {
                json c = check_entry(path, other, v);
                checks.push_back(c);
                text << check_text(c) << "\n";
            };
            if (name == "series") {
                add("contour", contour_zeta(m, s, contour_opts(o)));
            } else if (name == "contour") {
                if (m.zeros && s.real() > m.alpha() + 0.25)
                    add("series", zeta_series(*m.zeros, s, o.nterms, m.asym.psi));
                else
                    add("continued", continued_zeta(m, s, contour_opts(o)));
            } else {
                if (s.real() > m.alpha())
                    add("contour", contour_zeta(m, s, contour_opts(o)));
                ContourOptions alt = contour_opts(o);
                double R0 = alt.R > 0 ? alt.R : (m.zeros ? 0.7 * std::abs(m.zeros->at(1)) : 0.5);
                alt.R = 0.75 * R0;
                add("continued R=" + fmt(alt.R), continued_zeta(m, s, alt));
            }
            r.doc["checks"] = checks;
        }
    } catch (const Error& e) {
        r.errors.push_back(e.what());
    }
    return finish(o, r, text.str());
}

// --- aaa ----------------------------------------------------------------

int cmd_aaa(const Options& o) {
    CatalogModel m = load_model(o);
    if (!m.zeros) throw UsageError("aaa needs a model with a zero sequence (riemann, hurwitz, airy)");
    if (o.points < 4) throw UsageError("--points must be at least 4");
    Report r;
    std::ostringstream text;
    r.doc = {{"command", "aaa"}, {"spec", spec_of(o)}};
    try {
        std::vector<double> pts;
        std::vector<cplx> samples;
        for (int i = 0; i < o.points; ++i) {
            double s = o.lo + (o.hi - o.lo) * i / (o.points - 1);
            pts.push_back(s);
            samples.push_back(zeta_series(*m.zeros, s, o.nterms, m.asym.psi));
        }
        const double tol = o.tol > 0.0 ? o.tol : 1e-13;
        BarycentricModel bm = aaa_fit(pts, samples, tol, 100);
        RealFeatures feat = find_real_features(bm, o.scan_lo, o.scan_hi);
        r.doc["degree"] = bm.degree();
        r.doc["max_residual"] = bm.max_residual;
        r.doc["reached_tolerance"] = bm.reached_tolerance;
        r.doc["zeros"] = feat.zeros;
        r.doc["poles"] = feat.poles;
        r.doc["model"] = to_json(bm);
        text << "degree " << bm.degree() << ", max relative residual " << fmt(bm.max_residual)
             << (bm.reached_tolerance ? "" : " (tolerance not reached)") << "\n";
        text << "real zeros in [" << fmt(o.scan_lo) << ", " << fmt(o.scan_hi) << "]:";
        for (double z : feat.zeros) text << " " << fmt(z);
        text << "\nreal poles in [" << fmt(o.scan_lo) << ", " << fmt(o.scan_hi) << "]:";
        for (double p : feat.poles) text << " " << fmt(p);
        text << "\n";
        struct Item {
            std::string label;
            cplx value;
        };
        std::vector<Item> items = {{"zeta(1)", bary_eval(bm, 1.0)},
                                   {"zeta(0)", bary_eval(bm, 0.0)},
                                   {"zeta'(0)", derivative_at(bm, 0.0, 1e-6)},
                                   {"zeta(-1/2)", bary_eval(bm, -0.5)}};
        json vals = json::array();
        for (const Item& it : items) {
            json v{{"label", it.label}, {"value", to_json(it.value)}};
            text << it.label << " = " << fmt(it.value);
            if (o.check) {
                cplx ref;
                std::string path;
                if (it.label == "zeta(1)") ref = special_value(m, 1).value, path = "special-value";
                else if (it.label == "zeta(0)") ref = special_value(m, 0).value, path = "special-value";
                else if (it.label == "zeta'(0)") ref = special_prime0(m), path = "special-value";
                else ref = continued_zeta(m, -0.5, contour_opts(o)), path = "continued";
                v["check"] = check_entry(path, ref, it.value);
                text << check_text(v["check"]);
            }
            text << "\n";
            vals.push_back(v);
        }
        r.doc["values"] = vals;
    } catch (const Error& e) {
        r.errors.push_back(e.what());
    }
    return finish(o, r, text.str());
}

// --- catalog ------------------------------------------------------------

int cmd_catalog(const Options& o) {
    Report r;
    std::ostringstream text;
    if (o.model.empty()) {
        json list = json::array({json{{"model", "riemann"}, {"params", json::array()}},
                                 json{{"model", "hurwitz"}, {"params", {"a"}}},
                                 json{{"model", "airy"}, {"params", json::array()}},
                                 json{{"model", "airy-prime"}, {"params", json::array()}},
                                 json{{"model", "pcf"}, {"params", {"a"}}},
                                 json{{"model", "chf"}, {"params", {"a", "b"}}}});
        r.doc = {{"command", "catalog"}, {"models", list}};
        text << "riemann          zeros 1, 2, 3, ...\n"
                "hurwitz --a A    zeros n + a - 1\n"
                "airy             zeros of Ai(-z)\n"
                "airy-prime       zeros of Ai'(-z) (Taylor side only)\n"
                "pcf --a A        zeros of U(a, z), a > -1/2 (no zero list)\n"
                "chf --a A --b B  zeros of M(a, b, z) (no zero list)\n";
        return finish(o, r, text.str());
    }
    CatalogModel m = load_model(o);
    json s = model_summary(m);
    r.doc = {{"command", "catalog"}, {"spec", spec_of(o)}, {"summary", s}};
    text << "model " << m.name << "\n";
    for (const auto& [k, v] : m.params) text << "  " << k << " = " << fmt(v) << "\n";
    text << "alpha " << fmt(m.asym.alpha) << ", m " << m.asym.m << ", M " << m.asym.M << ", N " << m.asym.N
         << ", psi " << fmt(m.asym.psi) << ", ln F(0) " << fmt(m.asym.lnF0) << "\n";
    text << "Taylor coefficients:";
    for (int i = 0; i <= std::min(6, m.series.order()); ++i) text << " " << fmt(m.series.c[i]);
    text << "\nlarge-z table (nonzero):\n";
    for (int j = 0; j <= m.asym.N; ++j)
        for (int k = 0; k <= m.asym.M; ++k)
            if (std::abs(m.asym.d(j, k)) > coefficient_zero_threshold)
                text << "  d[" << j << "," << k << "] = " << fmt(m.asym.d(j, k)) << "\n";
    if (m.zeros) {
        text << "first zeros:";
        for (int n = 1; n <= 5; ++n) text << " " << fmt(m.zeros->at(n));
        text << "\n";
    }
    for (const std::string& n : m.notes) text << "note: " << n << "\n";
    return finish(o, r, text.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zetakit: zeta functions of zero sequences"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* c) {
        c->add_option("--model", o.model, "riemann | hurwitz | airy | airy-prime | pcf | chf");
        c->add_option("--a", o.a, "model parameter a (complex as x+yi)");
        c->add_option("--b", o.b, "model parameter b");
        c->add_option("--depth", o.depth, "large-z table depth");
        c->add_flag("--json", o.json, "emit JSON");
        c->add_flag("--check", o.check, "re-derive by an independent path");
    };
    auto quad = [&](CLI::App* c) {
        c->add_option("--R", o.R, "circle radius (default 0.7 |a_1|)");
        c->add_option("--tmax", o.tmax, "ray cut-off (default 400, or 30 when Re s < 0)");
        c->add_option("--tol", o.tol, "quadrature tolerance");
    };

    CLI::App* values = app.add_subcommand("values", "zeta at integers");
    common(values);
    values->add_option("--n", o.n, "integers: 3, 1..5 or 1,2,4");
    values->add_option("--nterms", o.nterms, "terms for the series check");
    quad(values);

    CLI::App* poles = app.add_subcommand("poles", "poles, zeta(0) and zeta'(0)");
    common(poles);
    poles->add_option("--table", o.table, "JSON file with a user large-z table");
    quad(poles);

    CLI::App* shift = app.add_subcommand("shift", "linear transformation A a_n + B");
    common(shift);
    shift->add_option("--A", o.A, "scale A");
    shift->add_option("--B", o.B, "shift B");

    CLI::App* series = app.add_subcommand("series", "direct summation");
    common(series);
    series->add_option("--s", o.s, "argument");
    series->add_option("--nterms", o.nterms, "number of terms summed explicitly");
    quad(series);

    CLI::App* contour = app.add_subcommand("contour", "contour integral representation");
    common(contour);
    contour->add_option("--s", o.s, "argument");
    contour->add_option("--nterms", o.nterms, "terms for the series check");
    quad(contour);

    CLI::App* cont = app.add_subcommand("continue", "continued representation");
    common(cont);
    cont->add_option("--s", o.s, "argument");
    quad(cont);

    CLI::App* aaa = app.add_subcommand("aaa", "rational continuation from series samples");
    common(aaa);
    aaa->add_option("--lo", o.lo, "sample interval start");
    aaa->add_option("--hi", o.hi, "sample interval end");
    aaa->add_option("--points", o.points, "number of samples");
    aaa->add_option("--nterms", o.nterms, "terms summed per sample");
    aaa->add_option("--scan-lo", o.scan_lo, "feature scan start");
    aaa->add_option("--scan-hi", o.scan_hi, "feature scan end");
    aaa->add_option("--tol", o.tol, "relative interpolation tolerance");
    aaa->add_option("--R", o.R, "circle radius for the check");
    aaa->add_option("--tmax", o.tmax, "ray cut-off for the check");

    CLI::App* catalog = app.add_subcommand("catalog", "list models or describe one");
    common(catalog);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*values) return cmd_values(o);
        if (*poles) return cmd_poles(o);
        if (*shift) return cmd_shift(o);
        if (*series) return scalar_command(o, "series");
        if (*contour) return scalar_command(o, "contour");
        if (*cont) return scalar_command(o, "continue");
        if (*aaa) return cmd_aaa(o);
        if (*catalog) return cmd_catalog(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
