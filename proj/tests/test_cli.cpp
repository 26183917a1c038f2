#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef EHP_CLI_PATH
#error "EHP_CLI_PATH must point at the ehp binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    std::string base = "/tmp/ehp_cli_" + std::to_string(getpid()) + "_" + std::to_string(counter++);
    std::string out_path = base + ".out";
    std::string err_path = base + ".err";
    std::string command = env_prefix + std::string(EHP_CLI_PATH) + " " + args + " > " + out_path +
                          " 2> " + err_path;
    int status = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

}  // namespace

TEST_CASE("compute: naphthalene JSON report") {
    RunResult r = run_cli("compute 2 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["spec"] == "2");
    CHECK(j["method"] == "recurrence");
    CHECK(j["coefficients"] ==
          nlohmann::ordered_json::array({"11", "14", "18", "16", "6", "1"}));
    CHECK(j["edge_count"] == "11");
    CHECK(j["degree"] == "5");
    CHECK(j["edge_wiener"] == "127");
    CHECK(j["edge_hyper_wiener"] == "239");
    CHECK(j["warnings"].empty());
}

TEST_CASE("compute: JSON output reserializes byte-identically") {
    RunResult r = run_cli("compute 5:LSR --format json --method oracle");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j.dump(2) + "\n" == r.out);
}

TEST_CASE("compute: text report carries the polynomial and indices") {
    RunResult r = run_cli("compute 1");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("6 + 6x + 6x^2 + 3x^3") != std::string::npos);
    CHECK(r.out.find("edge-Wiener:       27") != std::string::npos);
    CHECK(r.out.find("edge-hyper-Wiener: 42") != std::string::npos);
}

TEST_CASE("compute: methods agree on a polyacene") {
    RunResult closed = run_cli("compute 4:SS --method closed-form --format json");
    RunResult recur = run_cli("compute 4:SS --method recurrence --format json");
    RunResult brute = run_cli("compute 4:SS --method oracle --format json");
    REQUIRE(closed.exit_code == 0);
    REQUIRE(recur.exit_code == 0);
    REQUIRE(brute.exit_code == 0);
    auto jc = nlohmann::ordered_json::parse(closed.out);
    auto jr = nlohmann::ordered_json::parse(recur.out);
    auto jb = nlohmann::ordered_json::parse(brute.out);
    CHECK(jc["coefficients"] == jr["coefficients"]);
    CHECK(jb["coefficients"] == jr["coefficients"]);
}

TEST_CASE("compute: parse and usage failures exit with code 2") {
    CHECK(run_cli("compute 3:X").exit_code == 2);
    CHECK(run_cli("compute 4:SS --method nonsense").exit_code == 2);
    CHECK(run_cli("compute").exit_code == 2);
    CHECK(run_cli("compute 99999999999999999999").exit_code == 2);
    CHECK(run_cli("nonsense-subcommand").exit_code == 2);
    // Closed form is only defined for all-S chains.
    CHECK(run_cli("compute 3:L --method closed-form").exit_code == 2);
}

TEST_CASE("compute: helicene-like chain reports the overlap warning") {
    RunResult r = run_cli("compute 6:LLLL --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::ordered_json::parse(r.out);
    REQUIRE(j["warnings"].size() == 1);
    std::string warning = j["warnings"][0];
    CHECK(warning.find("self-overlap") != std::string::npos);
}

TEST_CASE("compute: --emit-graph writes the edge list") {
    std::string path = "/tmp/ehp_cli_graph_" + std::to_string(getpid()) + ".txt";
    RunResult r = run_cli("compute 1 --emit-graph " + path);
    REQUIRE(r.exit_code == 0);
    std::string contents = slurp(path);
    std::remove(path.c_str());
    int lines = 0;
    for (char c : contents) lines += c == '\n';
    CHECK(lines == 6);
    CHECK(contents.find("0 1") != std::string::npos);
}

TEST_CASE("verify: small sweep passes") {
    RunResult r = run_cli("verify --max-h 3");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("chains checked: 5") != std::string::npos);
    CHECK(r.out.find("failures:       0") != std::string::npos);
}

TEST_CASE("verify: cap guards exhaustive enumeration") {
    CHECK(run_cli("verify --max-h 9").exit_code == 2);
    CHECK(run_cli("verify --max-h 3", "EHP_VERIFY_CAP=2 ").exit_code == 2);
    CHECK(run_cli("verify --max-h 3", "EHP_VERIFY_CAP=3 ").exit_code == 0);
    CHECK(run_cli("verify --max-h 0").exit_code == 2);
}

TEST_CASE("bench: methods agree on the smoke chain") {
    RunResult r = run_cli("bench 1 2");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("agree") != std::string::npos);
    CHECK(r.out.find("MISMATCH") == std::string::npos);
}

TEST_CASE("bench: restricted method reports the degree law") {
    RunResult r = run_cli("bench 100 --method closed-form");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("201") != std::string::npos);  // degree 2h+1
    CHECK(r.out.find("oracle") == std::string::npos);
}
