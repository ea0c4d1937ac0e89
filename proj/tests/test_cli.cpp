#include <doctest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "support.hpp"
#include "zetakit/json_io.hpp"

using namespace zk;
using namespace zt;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::string& args) {
    const std::string err_file = std::string(ZETAKIT_TEST_TMP) + "/cli_stderr.txt";
    const std::string cmd = std::string(ZETAKIT_BIN) + " " + args + " 2>" + err_file;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    std::ifstream ef(err_file);
    std::stringstream es;
    es << ef.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, es.str()};
}

json run_json(const std::string& args) {
    Run r = run(args + " --json");
    INFO(args << "\n" << r.err);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

// Key names and value types; arrays are described by their first element.
json skeleton(const json& j) {
    if (j.is_object()) {
        json o = json::object();
        for (auto it = j.begin(); it != j.end(); ++it) o[it.key()] = skeleton(it.value());
        return o;
    }
    if (j.is_array()) return j.empty() ? json::array() : json::array({skeleton(j.front())});
    if (j.is_number()) return "number";
    if (j.is_string()) return "string";
    if (j.is_boolean()) return "boolean";
    return "null";
}

void check_golden(const std::string& name, const json& doc) {
    const std::string path = std::string(ZETAKIT_GOLDEN_DIR) + "/" + name + ".json";
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
    json golden = json::parse(in);
    CHECK_MESSAGE(skeleton(doc) == golden, name << ": schema changed\n" << skeleton(doc).dump(2));
}

cplx value_of(const json& j) { return cplx_from_json(j); }

}  // namespace

TEST_CASE("values: Airy zeta at 1..5") {
    json doc = run_json("values --model airy --n 1..5");
    REQUIRE(doc["results"].size() == 5);
    for (int n = 1; n <= 5; ++n) {
        const json& r = doc["results"][n - 1];
        CHECK(r["n"] == n);
        CHECK(near_rel(value_of(r["value"]), oracle::airy_zeta[n], 1e-12));
        CHECK(r.contains("closed_form"));
    }
    CHECK(doc["results"][0]["method"] == "continuation");
    CHECK(doc["results"][1]["method"] == "recursion");
    check_golden("values", doc);
    check_golden("values_check", run_json("values --model airy --n 2,3 --check"));
}

TEST_CASE("values: text output") {
    Run r = run("values --model chf --a 0.5 --b 1.5 --n 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("zeta(2) = -0.0888888888888889") != std::string::npos);
    CHECK(r.out.find("a(a-b)/(b^2(b+1))") != std::string::npos);
    Run m = run("values --model riemann --n -1");
    CHECK(m.code == 0);
    CHECK(m.out.find("zeta(-1) = -0.0833333333333333") != std::string::npos);
    CHECK(m.out.find("-B_2/2") != std::string::npos);
}

TEST_CASE("poles: Airy") {
    json doc = run_json("poles --model airy");
    const json& poles = doc["report"]["poles"];
    REQUIRE(poles.size() >= 3);
    CHECK(poles[0]["location"] == 1.5);
    CHECK(near_abs(value_of(poles[0]["residue"]), 1.0 / pi, 1e-15));
    for (size_t i = 1; i < poles.size(); ++i) CHECK(poles[i]["location"] == -1.5 - 3.0 * double(i - 1));
    CHECK(value_of(doc["report"]["zeta0"]) == cplx(-0.25));
    check_golden("poles", doc);
    json chk = run_json("poles --model airy --check");
    for (const json& c : chk["checks"]) CHECK(c["discrepancy"].get<double>() < 1e-3);
}

TEST_CASE("poles: user table") {
    const std::string path = std::string(ZETAKIT_TEST_TMP) + "/user_table.json";
    {
        std::ofstream out(path);
        out << to_json(airy_model().asym).dump();
    }
    json doc = run_json("poles --table " + path);
    CHECK(doc["report"]["poles"][0]["location"] == 1.5);
    CHECK(value_of(doc["report"]["zeta0"]) == cplx(-0.25));
    {
        std::ofstream out(path);
        out << "{\"alpha\": 1}";
    }
    CHECK(run("poles --table " + path).code == 2);
}

TEST_CASE("shift: Riemann to Hurwitz a = 1/4") {
    json doc = run_json("shift --model riemann --A 1 --B -0.75");
    const double a = 0.25;
    CHECK(near_abs(value_of(doc["report"]["zeta0"]), 0.5 - a, 1e-14));
    CHECK(near_abs(value_of(doc["report"]["zeta_prime0"]), oracle::hurwitz_prime0[0].value, 1e-12));
    for (const json& e : doc["omega"]) {
        int j = e["j"], k = e["k"];
        if (k == 0 && j >= 2)
            CHECK(near_abs(value_of(e["value"]), bernoulli_poly(j, a) / (double(j) * (j - 1)), 1e-12));
    }
    for (const json& e : doc["negative_integers"]) {
        int n = -e["n"].get<int>();
        CHECK(near_abs(value_of(e["value"]), -bernoulli_poly(n + 1, a) / double(n + 1), 1e-12));
    }
    check_golden("shift", doc);
}

TEST_CASE("series, contour and continue") {
    json s = run_json("series --model airy --s 3");
    json c = run_json("contour --model airy --s 3");
    json k = run_json("continue --model airy --s -0.5");
    CHECK(near_abs(value_of(s["value"]), oracle::airy_zeta[3], 1e-12));
    CHECK(near_abs(value_of(c["value"]), oracle::airy_zeta[3], 1e-10));
    CHECK(near_abs(value_of(k["value"]), oracle::airy_zeta_mhalf, 1e-10));
    json z = run_json("continue --model airy --s 1.2+0.7i --check");
    CHECK(near_abs(value_of(z["value"]), oracle::airy_zeta_c, 1e-10));
    for (const json& e : z["checks"]) CHECK(e["discrepancy"].get<double>() < 1e-9);
    check_golden("series", s);
    check_golden("continue", k);
    check_golden("continue_check", z);
}

TEST_CASE("aaa: Airy") {
    json doc = run_json("aaa --model airy");
    CHECK(doc["max_residual"].get<double>() <= 1e-12);
    int zeros = 0, poles = 0;
    for (const json& z : doc["zeros"]) zeros += (z >= -1.05 && z <= -0.95);
    for (const json& p : doc["poles"]) poles += (p >= -1.45 && p <= -1.39);
    CHECK(zeros == 1);
    CHECK(poles == 1);
    cplx half = value_of(doc["values"][3]["value"]);
    CHECK(half.real() >= -0.141);
    CHECK(half.real() <= -0.138);
    check_golden("aaa", doc);
}

TEST_CASE("catalog") {
    check_golden("catalog_list", run_json("catalog"));
    json d = run_json("catalog --model pcf --a 1");
    CHECK(d["summary"]["alpha"] == 2.0);
    check_golden("catalog_model", d);
}

TEST_CASE("exit codes") {
    Run unknown = run("values --model nope --n 1");
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("unknown model") != std::string::npos);
    CHECK(run("values --model airy").code == 2);
    CHECK(run("values --model airy --n x..y").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("values --model pcf --a -1 --n 1").code == 2);
    CHECK(run("series --model airy --s 1+").code == 2);

    Run partial = run("values --model riemann --n 0..2");
    CHECK(partial.code == 1);
    CHECK(partial.out.find("zeta(0) = -0.5") != std::string::npos);
    CHECK(partial.out.find("zeta(2) = 1.64493406684823") != std::string::npos);
    CHECK(partial.err.find("zeta(1)") != std::string::npos);

    CHECK(run("series --model airy --s 1").code == 1);
    CHECK(run("help").code == 2);
    CHECK(run("--help").code == 0);
}
