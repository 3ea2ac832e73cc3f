#include "cli.hpp"

#include "doctest.h"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = morikit::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args) {
    const CliResult r = run_cli(args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("facts --m 3 reports the three-fold invariants") {
    const json j = run_json({"facts", "--m", "3"});
    CHECK(j.at("schema") == 1);
    CHECK(j.at("singular_count") == "10");
    CHECK(j.at("degree") == "3");
    CHECK(j.at("aut_order") == "720");
    CHECK(j.at("canonical_multiple") == -2);
}

TEST_CASE("hilbert --sigma-even 1 is the degree-five surface") {
    const json j = run_json({"hilbert", "--sigma-even", "1"});
    CHECK(j.at("degree") == "5");
    CHECK(j.at("N") == "5");
}

TEST_CASE("cremona of a hyperplane under the space Cremona") {
    const json j =
        run_json({"cremona", "--m", "3", "--divisor", "1,0,0,0,0", "--base", "1,2,3,4"});
    CHECK(j.at("result_degree") == "3");
    CHECK(j.at("result_mults") == json({"2", "2", "2", "2"}));
}

TEST_CASE("phi reproduces the weight conversions") {
    const json j = run_json({"phi", "--m", "3", "--divisor", "4,-2,-2,-2,-2,-2"});
    CHECK(j.at("weights") == json({"1/3", "1/3", "1/3", "1/3", "1/3", "1/3"}));
}

TEST_CASE("identical invocations are byte-identical") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"walls", "--m", "4"},
          {"cones", "--m", "2", "--which", "eff", "--rays"},
          {"ne-rays", "--g", "2"},
          {"facts", "--m", "8"}}) {
        const CliResult a = run_cli(args), b = run_cli(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("exit codes") {
    CHECK(run_cli({"frobnicate"}).code == morikit::cli::kExitUnknownCommand);
    CHECK(run_cli({"facts"}).code == morikit::cli::kExitValidation);
    CHECK(run_cli({"locate", "--m", "4", "--divisor", "1,ZZZ"}).code ==
          morikit::cli::kExitValidation);
    CHECK(run_cli({"hilbert", "--system", "2,3,1,1,1,1,1"}).code ==
          morikit::cli::kExitValidation); // s > n+2
    CHECK(run_cli({"kumar", "--b", "9,1,1,1,1"}).code == morikit::cli::kExitValidation);
    CHECK(run_cli({"--help"}).code == 0);

    setenv("MORIKIT_RAY_CAP", "2", 1);
    CHECK(run_cli({"cones", "--m", "4", "--which", "fano", "--rays"}).code ==
          morikit::cli::kExitResourceCap);
    setenv("MORIKIT_RAY_CAP", "banana", 1);
    CHECK(run_cli({"cones", "--m", "2", "--rays"}).code == morikit::cli::kExitValidation);
    unsetenv("MORIKIT_RAY_CAP");
}

TEST_CASE("csv format") {
    const CliResult r = run_cli({"facts", "--m", "2", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("degree,5\n") != std::string::npos);
    CHECK(r.out.find("aut_order,120\n") != std::string::npos);

    const CliResult w = run_cli({"walls", "--m", "2", "--format", "csv"});
    CHECK(w.out.rfind("k,kind,I,normal\n", 0) == 0);
}

TEST_CASE("locate reports sides for the anticanonical class") {
    const json j = run_json({"locate", "--m", "4", "--divisor", "5,-3,-3,-3,-3,-3,-3"});
    CHECK(j.at("in_eff").at("side") == "INTERIOR");
    CHECK(j.at("in_nef").at("side") == "OUTSIDE");
    CHECK(j.at("in_fano").at("side") == "INTERIOR");
    CHECK(j.at("active_walls").empty());
}

TEST_CASE("golden fixtures replay byte-for-byte") {
    const std::string dir = MORIKIT_FIXTURES_DIR;
    std::ifstream manifest(dir + "/manifest.txt");
    REQUIRE(manifest.good());
    std::string line;
    int fixtures = 0;
    while (std::getline(manifest, line)) {
        if (line.empty() || line[0] == '#') continue;
        const std::size_t tab = line.find('\t');
        REQUIRE(tab != std::string::npos);
        const std::string file = line.substr(0, tab);
        std::vector<std::string> args;
        std::istringstream rest(line.substr(tab + 1));
        std::string tok;
        while (rest >> tok) args.push_back(tok);

        std::ifstream fx(dir + "/" + file, std::ios::binary);
        REQUIRE(fx.good());
        std::ostringstream expected;
        expected << fx.rdbuf();

        const CliResult r = run_cli(args);
        CHECK(r.code == 0);
        CHECK(r.out == expected.str());
        ++fixtures;
    }
    CHECK(fixtures >= 5);
}

} // TEST_SUITE
