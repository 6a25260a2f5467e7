#include "qplane/cli.hpp"
#include "qplane/version.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

using namespace qplane;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("normalize prints the canonical form") {
    CliResult r = cli({"normalize", "--algebra", "gamma", "y*dx"});
    CHECK(r.code == 0);
    CHECK(r.out == "q^-1*dx*y + (q^-1 - 1)*dy*x\n");
    CliResult s = cli({"normalize", "x*xi"});
    CHECK(s.code == 0);
    CHECK(s.out == "1\n");
    CliResult t = cli({"normalize", "--algebra", "omega", "phi*theta"});
    CHECK(t.code == 0);
    CHECK(t.out == "-q^-1*theta*phi\n");
}

TEST_CASE("normalize accepts tensor expressions") {
    CliResult r = cli({"normalize", "--algebra", "A", "y (x) 1 + x (x) y"});
    CHECK(r.code == 0);
    CHECK(r.out == "y (x) 1 + x (x) y\n");
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"normalize"}).code == 2);
    CHECK(cli({"normalize", "--algebra", "su2", "x"}).code == 2);
    CHECK(cli({"normalize", "x +"}).code == 2);
    CHECK(cli({"apply", "x"}).code == 2);
    CHECK(cli({"apply", "--map", "frob", "x"}).code == 2);
    CHECK(cli({"check", "--suite", "nope"}).code == 2);
    CHECK(cli({"check", "--max-degree", "1"}).code == 2);
    CHECK(cli({"check", "--format", "yaml"}).code == 2);
    CliResult r = cli({"normalize", "x$"});
    CHECK(r.code == 2);
    CHECK(r.err.find("parse error") != std::string::npos);
}

TEST_CASE("apply dispatches the structure maps") {
    CliResult delta = cli({"apply", "--map", "delta", "--algebra", "A", "y"});
    CHECK(delta.code == 0);
    CHECK(delta.out == "y (x) 1 + x (x) y\n");
    CliResult anti = cli({"apply", "--map", "antipode", "--algebra", "gamma", "dx"});
    CHECK(anti.code == 0);
    CHECK(anti.out == "-q*dx*xi^2\n");
    CliResult d = cli({"apply", "--map", "d", "--algebra", "gamma", "x*y"});
    CHECK(d.code == 0);
    CHECK(d.out == "dx*y + dy*x\n");
    CliResult eps = cli({"apply", "--map", "epsilon", "--algebra", "A", "3*x^2 + y"});
    CHECK(eps.code == 0);
    CHECK(eps.out == "3\n");
    CliResult dr = cli({"apply", "--map", "delta-r", "--algebra", "gamma", "dy"});
    CHECK(dr.code == 0);
    CHECK(dr.out == "dy (x) 1 + dx (x) y\n");
    CliResult dl = cli({"apply", "--map", "delta-l", "--algebra", "gamma", "dy"});
    CHECK(dl.code == 0);
    CHECK(dl.out == "x (x) dy\n");
}

TEST_CASE("maps undefined for an algebra exit with code 2") {
    CHECK(cli({"apply", "--map", "delta-r", "--algebra", "omega", "theta"}).code == 2);
    CHECK(cli({"apply", "--map", "d", "--algebra", "borel", "K"}).code == 2);
}

TEST_CASE("check emits a schema-stable json report") {
    CliResult r = cli({"check", "--suite", "confluence", "--format", "json"});
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["suite"] == "confluence");
    CHECK(j["algebra"] == "all");
    CHECK(j["seed"] == 7);
    CHECK(j["pass"] == true);
    CHECK(j["version"] == kToolVersion);
    REQUIRE(j["checks"].is_array());
    REQUIRE(j["checks"].size() == 5);
    std::string prev;
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("id"));
        CHECK(c.contains("paper_eq"));
        CHECK(c["instances"].is_number_integer());
        CHECK(c["failures"] == 0);
        CHECK(c["witness"].is_null());
        std::string id = c["id"];
        CHECK(prev < id);
        prev = id;
    }
    CHECK(j["informational"].is_array());
}

TEST_CASE("check reports are deterministic for a fixed seed") {
    CliResult a = cli({"check", "--suite", "hopf-A", "--seed", "11", "--format", "json"});
    CliResult b = cli({"check", "--suite", "hopf-A", "--seed", "11", "--format", "json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("the informational probe section never fails the suite") {
    CliResult r = cli({"check", "--suite", "hopf-A", "--format", "json"});
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    REQUIRE(j["informational"].size() == 2);
    for (const auto& rec : j["informational"]) {
        CHECK(rec.contains("derived"));
        CHECK(rec.contains("stated"));
        CHECK(rec.contains("agrees"));
        CHECK(rec["paper_eq"] == "(7)");
    }
    CHECK(j["informational"][0]["agrees"] == true);
    CHECK(j["informational"][1]["agrees"] == false);
    CHECK(j["informational"][1]["derived"] == "q");
    CHECK(j["informational"][1]["stated"] == "q^-1");
    CHECK(j["pass"] == true);
}

TEST_CASE("text format prints one line per check") {
    CliResult r = cli({"check", "--suite", "confluence"});
    CHECK(r.code == 0);
    CHECK(r.out.find("confluence") != std::string::npos);
    CHECK(r.out.find("result: PASS") != std::string::npos);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("QPLANE_SEED overrides the seed flag") {
    setenv("QPLANE_SEED", "123", 1);
    CliResult r = cli({"check", "--suite", "confluence", "--seed", "9", "--format", "json"});
    unsetenv("QPLANE_SEED");
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["seed"] == 123);
    setenv("QPLANE_SEED", "not-a-number", 1);
    CliResult bad = cli({"check", "--suite", "confluence"});
    unsetenv("QPLANE_SEED");
    CHECK(bad.code == 2);
}

TEST_CASE("version and help are printable") {
    CliResult v = cli({"--version"});
    CHECK(v.code == 0);
    CHECK(v.out == std::string(kToolVersion) + "\n");
    CliResult h = cli({"--help"});
    CHECK(h.code == 0);
    CHECK_FALSE(h.out.empty());
}
