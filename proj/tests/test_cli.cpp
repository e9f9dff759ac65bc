#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bettilab/cli.hpp"

using namespace bettilab;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("bettilab-cli-" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

} // namespace

TEST_CASE("predict for the twisted cubic at 20 points") {
    const Run r = run({"predict", "--g", "0", "--r", "3", "--d", "3", "--gamma", "20", "--no-store"});
    CHECK(r.code == 0);
    CHECK(r.out.find("u=7") != std::string::npos);
    CHECK(r.out.find("delta=(2,3,0,-1)") != std::string::npos);
    CHECK(r.out.find("igc generators: 0") != std::string::npos);
}

TEST_CASE("predict as json") {
    const Run r = run({"predict", "--g", "0", "--r", "3", "--d", "7", "--gamma", "28", "--format", "json", "--no-store"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "predict");
    CHECK(j["outputs"]["prediction"]["igc_generators"] == 4);
}

TEST_CASE("mrc-check on the twisted cubic passes at two primes") {
    const Run r = run({"mrc-check", "--curve", "twisted-cubic", "--gamma", "20", "--format", "json", "--no-store"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["agreement"]["tables_agree"] == true);
    REQUIRE(j["outputs"]["runs"].size() == 2);
    for (const auto& run : j["outputs"]["runs"]) CHECK(run["verdict"]["mrc_pass"] == true);
    CHECK(j["config"]["primes"][0] != j["config"]["primes"][1]);
}

TEST_CASE("mrc-check reports the failing diagonal of an unbalanced quintic") {
    const Run r = run({"mrc-check", "--curve", "monomial", "--d", "5", "--exponents", "0,1,4,5", "--gamma", "23", "--no-store"});
    CHECK(r.code == 0);
    CHECK(r.out.find("MRC fail") != std::string::npos);
    CHECK(r.out.find("failing diagonal i=2") != std::string::npos);
}

TEST_CASE("chow commands agree with the oracle") {
    for (const std::string kind : {"twisted-cubic", "quadric-01", "quadric-sum"}) {
        const Run r = run({"chow", "--curve", kind, "--samples", "20", "--format", "json", "--no-store"});
        REQUIRE(r.code == 0);
        CHECK(nlohmann::json::parse(r.out)["agreement"]["all_ok"] == true);
    }
}

TEST_CASE("gonal, property-r, splitting and oracle-compare run") {
    CHECK(run({"gonal", "--samples", "3", "--no-store"}).code == 0);
    CHECK(run({"property-r", "--trials", "20", "--no-store"}).code == 0);
    const Run s = run({"splitting", "--curve", "monomial", "--d", "5", "--exponents", "0,1,4,5", "--no-store"});
    CHECK(s.out.find("O(1) + O(1) + O(3)") != std::string::npos);
    const Run o = run({"oracle-compare", "--r", "2", "--gamma", "6", "--instances", "2", "--no-store"});
    CHECK(o.code == 0);
    CHECK(o.out.find("4/4 match") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"predict", "--bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"mrc-check", "--curve", "nonsense"}).code == 2);
    CHECK(run({"betti", "--format", "yaml"}).code == 2);
    CHECK(run({"mrc-check", "--curve", "monomial", "--d", "4", "--exponents", "0,1,1,4", "--no-store"}).code == 2);
    CHECK(run({"predict", "--format", "csv", "--no-store"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("identical configurations give identical output and one stored record") {
    const auto dir = scratch("determinism");
    const std::vector<std::string> args{"betti", "--source", "curve", "--curve", "random", "--r", "3", "--d", "5",
                                        "--gamma", "14", "--seed", "9", "--format", "json", "--store", dir.string()};
    const Run a = run(args);
    const Run b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    std::size_t files = 0;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        ++files;
        std::ifstream in(e.path());
        std::stringstream ss;
        ss << in.rdbuf();
        CHECK(ss.str() == a.out);
    }
    CHECK(files == 1);
    const Run c = run({"betti", "--source", "curve", "--curve", "random", "--r", "3", "--d", "5", "--gamma", "14",
                       "--seed", "10", "--format", "json", "--store", dir.string()});
    CHECK(c.out != a.out);
    std::filesystem::remove_all(dir);
}

TEST_CASE("the run store honours the environment") {
    const auto dir = scratch("env");
    ::setenv("BETTILAB_RUN_STORE", dir.string().c_str(), 1);
    CHECK(default_run_store() == dir);
    CHECK(run({"predict"}).code == 0);
    CHECK(std::filesystem::exists(dir));
    ::unsetenv("BETTILAB_RUN_STORE");
    std::filesystem::remove_all(dir);
}
