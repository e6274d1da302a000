#include "doctest.h"

#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"
#include "json.hpp"

using namespace jetob;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    const Run r = run(args);
    REQUIRE_MESSAGE(r.code == 0, r.err);
    return Json::parse(r.out);
}

const std::vector<std::string> kKT = {"--builtin", "kodaira-thurston"};

std::vector<std::string> with(std::vector<std::string> head, std::vector<std::string> tail) {
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
}

} // namespace

TEST_CASE("cohomology command") {
    const Json j = run_json(with({"cohomology"}, kKT));
    CHECK(j["betti"] == Json::array({1, 3, 4, 3, 1}));
    CHECK(j["degrees"][2]["basis"] == Json::array({"A*C", "A*T", "B*C", "B*T"}));
    const Json t = run_json({"cohomology", "--builtin", "torus-4", "--degree", "2"});
    CHECK(t["degrees"][0]["dimension"] == 6);
    CHECK(run(with({"cohomology"}, kKT)).out.find("betti numbers: 1 3 4 3 1") != std::string::npos);
}

TEST_CASE("input errors exit with 2") {
    const Run bad = run({"cohomology", "--model", testing::data_path("broken.dga")});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("axiom-violation") != std::string::npos);
    CHECK(run({"cohomology"}).code == 2);
    CHECK(run({"cohomology", "--builtin", "torus-4", "--model", "x.dga"}).code == 2);
    CHECK(run({"cohomology", "--builtin", "nope"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"vspace", "--builtin", "torus-4", "--eta", "A", "--degree", "1", "--jet", "x"}).code == 2);
    CHECK(run({"cohomology", "--builtin", "torus-4", "--format", "yaml"}).code == 2);
    CHECK(run({"cohomology", "--model", testing::data_path("even_degree.dga")}).code == 2);
}

TEST_CASE("resource guard exits with 3") {
    const Run r = run({"cohomology", "--model", testing::data_path("wide.dga")});
    CHECK(r.code == 3);
    CHECK(run({"cohomology", "--model", testing::data_path("wide.dga"), "--max-generators", "40"}).code == 2);
}

TEST_CASE("help exits cleanly") { CHECK(run({"--help"}).code == 0); }

TEST_CASE("vspace command") {
    const Json v1 = run_json(with({"vspace", "--eta", "A", "--degree", "2", "--jet", "1"}, kKT));
    CHECK(v1["basis"] == Json::array({"A*C", "A*T", "B*T"}));
    const Json v2 = run_json(with({"vspace", "--eta", "A", "--degree", "2", "--jet", "2"}, kKT));
    CHECK(v2["basis"] == Json::array({"A*C", "A*T"}));
    const Json v0 = run_json(with({"vspace", "--eta", "0", "--degree", "2", "--jet", "3"}, kKT));
    CHECK(v0["dimension"] == 4);
    const Json inf = run_json({"vspace", "--builtin", "torus-6", "--eta", "A*B*C", "--degree", "2", "--jet", "inf"});
    CHECK(inf["jet"] == "inf");
    CHECK(inf["computed_level"] == 1);
    CHECK(inf["dimension"] == 12);
    CHECK(run(with({"vspace", "--eta", "A", "--degree", "2", "--jet", "inf"}, kKT)).code == 2);
}

TEST_CASE("jets command") {
    const Json bt = run_json(with({"jets", "--alpha", "B*T", "--eta", "A", "--witness"}, kKT));
    CHECK(bt["max_level"] == 1);
    CHECK(bt["result"] == "MAX_LEVEL");
    CHECK(bt["witness"]["level"] == 1);
    CHECK(bt["witness"]["coefficients"][0] == "B*T");
    const Json ac = run_json(with({"jets", "--alpha", "A*C", "--eta", "A", "--cutoff", "5"}, kKT));
    CHECK(ac["result"] == "AT_LEAST_CUTOFF");
    CHECK(ac["max_level"].is_null());
    CHECK(ac["witness"].is_null());
    const Run nc = run(with({"jets", "--alpha", "C", "--eta", "A"}, kKT));
    CHECK(nc.code == 2);
    CHECK(nc.err.find("not-a-cocycle") != std::string::npos);
    CHECK(run(with({"jets", "--alpha", "B*T", "--eta", "A", "--expect-pass"}, kKT)).code == 1);
}

TEST_CASE("obstruct command") {
    const Json a = run_json(with({"obstruct", "--alpha", "A*C + B*T", "--pd", "A", "--cutoff", "5"}, kKT));
    CHECK(a["cup_ok"] == true);
    CHECK(a["conclusion"] == "OBSTRUCTED");
    CHECK(a["obstruction_level"] == 2);
    CHECK(a["obstruction_bullet"] == 1);
    CHECK(a["alpha_along_pd"]["max_level"] == 1);
    const Json b = run_json(with({"obstruct", "--alpha", "A*C + B*T", "--pd", "B"}, kKT));
    CHECK(b["cup_ok"] == false);
    CHECK(b["obstruction_bullet"] == 3);
    const Json z = run_json(with({"obstruct", "--alpha", "A*C + B*T", "--pd", "0", "--codim", "1"}, kKT));
    CHECK(z["conclusion"] == "PASSES_DEFINITIVELY");
    CHECK(run(with({"obstruct", "--alpha", "A*C + B*T", "--pd", "A", "--expect-pass"}, kKT)).code == 1);
    CHECK(run(with({"obstruct", "--alpha", "A*C + B*T", "--pd", "0", "--codim", "1", "--expect-pass"}, kKT)).code ==
          0);
}

TEST_CASE("scan command") {
    const Json g = run_json(with({"scan", "--alpha", "A*C + B*T", "--codim", "1", "--cutoff", "3", "--geometric"}, kKT));
    CHECK(g["cup_kernel"]["basis"] == Json::array({"A"}));
    CHECK(g["directions"].size() == 1);
    CHECK(g["directions"][0]["conclusion"] == "OBSTRUCTED");
    CHECK(g["directions"][0]["obstruction_level"] == 2);
    CHECK(g["geometric_summary"].get<std::string>().find("admits no non-separating exact hypersurface") !=
          std::string::npos);
    const Json p = run_json(with({"scan", "--alpha", "A*C + B*T", "--codim", "1", "--cutoff", "3"}, kKT));
    CHECK(p["geometric_summary"].is_null());
    const Json t = run_json({"scan", "--builtin", "torus-4", "--alpha", "A*B + C*D", "--codim", "1"});
    CHECK(t["cup_kernel"]["dimension"] == 0);
    CHECK(t["summary"] == "all directions obstructed by cup product");
    CHECK(run(with({"scan", "--alpha", "A*C + B*T", "--codim", "1", "--cutoff", "3", "--expect-pass"}, kKT)).code ==
          1);
}

TEST_CASE("check command") {
    const Run r = run(with({"check", "--trials", "20", "--seed", "5"}, kKT));
    CHECK(r.code == 0);
    CHECK(r.out.find("all properties hold") != std::string::npos);
    const Json j = run_json({"check", "--builtin", "torus-4", "--trials", "10"});
    CHECK(j["ok"] == true);
}

TEST_CASE("JSON output is byte-identical across runs") {
    const std::vector<std::vector<std::string>> invocations = {
        with({"cohomology"}, kKT),
        with({"scan", "--alpha", "A*C + B*T", "--codim", "1", "--cutoff", "3", "--geometric"}, kKT),
        {"scan", "--builtin", "torus-4", "--alpha", "A*B", "--codim", "1", "--cutoff", "2"},
        with({"check", "--trials", "16"}, kKT),
        with({"obstruct", "--alpha", "A*C + B*T", "--pd", "A", "--witness"}, kKT),
    };
    for (auto args : invocations) {
        args.push_back("--format");
        args.push_back("json");
        const Run a = run(args);
        const Run b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}
