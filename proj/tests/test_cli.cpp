#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(KLMS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof(buf), pipe)) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// The JSON payload is the last nonempty line.
json last_json(const std::string& out) {
    size_t end = out.find_last_not_of('\n');
    REQUIRE(end != std::string::npos);
    size_t start = out.rfind('\n', end);
    return json::parse(out.substr(start == std::string::npos ? 0 : start + 1,
                                  end - (start == std::string::npos ? 0 : start + 1) + 1));
}

} // namespace

TEST_CASE("kl subcommand values and exit codes") {
    RunResult r = run_cli("kl --n 4 --x 1234 --y 3412");
    CHECK(r.exit_code == 0);
    json j = last_json(r.out);
    CHECK(j["pretty"] == "1 + q");
    CHECK(j["poly"] == json::parse("[[0,1],[2,1]]"));
    CHECK(j["mu"] == 0);

    r = run_cli("kl --n 3 --x 123 --y 321 --quiet");
    CHECK(r.exit_code == 0);
    CHECK(last_json(r.out)["pretty"] == "1");

    r = run_cli("kl --n 3 --x 321 --y 123");
    CHECK(r.exit_code == 0);
    CHECK(last_json(r.out)["pretty"] == "0");
}

TEST_CASE("kl with generator sets uses the double-parabolic polynomial") {
    RunResult r = run_cli("kl --n 4 --x 1234 --y 1324 --j1 1,3 --j2 1,3 --quiet");
    CHECK(r.exit_code == 0);
    CHECK(last_json(r.out)["pretty"] == "1 + q");
}

TEST_CASE("pkl subcommand") {
    RunResult r = run_cli("pkl --n 3 --j 1 --v1 123 --v2 231 --quiet");
    CHECK(r.exit_code == 0);
    CHECK(last_json(r.out)["pretty"] == "1");
    // v1 not a minimal coset representative.
    CHECK(run_cli("pkl --n 3 --j 1 --v1 213 --v2 231").exit_code == 3);
}

TEST_CASE("exit code 2 on parse errors") {
    CHECK(run_cli("kl --n 3 --x 999 --y 123").exit_code == 2);
    CHECK(run_cli("poset \"[2,1]\"").exit_code == 2);
    CHECK(run_cli("verify --suite bogus").exit_code == 2);
    CHECK(run_cli("nosuchcommand").exit_code == 2);
}

TEST_CASE("exit code 3 on precondition violations") {
    CHECK(run_cli("kl --n 3 --x 213 --y 123 --j1 1").exit_code == 3);   // not a min rep
    CHECK(run_cli("kl --n 9 --x 123456789 --y 123456789").exit_code == 3);  // engine cap
}

TEST_CASE("poset subcommand") {
    RunResult r = run_cli("poset \"[1,2]+[2,3]\" --quiet");
    CHECK(r.exit_code == 0);
    json j = last_json(r.out);
    CHECK(j["size"] == 2);
    CHECK(j["covers"].size() == 1);
    CHECK(j["minimum"] == "[1,3]+[2,2]");

    r = run_cli("poset \"2*[0,1]+2*[1,2]\" --quiet");
    CHECK(last_json(r.out)["size"] == 3);

    r = run_cli("poset \"[1,2]\" --quiet");
    json single = last_json(r.out);
    CHECK(single["size"] == 1);
    CHECK(single["covers"].empty());
}

TEST_CASE("poset --dot writes a loadable graph") {
    std::string path = "cli_test_poset.dot";
    std::remove(path.c_str());
    RunResult r = run_cli("poset \"[1,2]+[2,3]\" --dot " + path + " --quiet");
    CHECK(r.exit_code == 0);
    std::ifstream f(path);
    REQUIRE(f.good());
    std::string dot((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("enumeration cap from the environment gives exit 4") {
    CHECK(run_cli("poset \"[0,1]+[1,2]+[2,3]\"", "KLMS_ENUM_CAP=2").exit_code == 4);
    CHECK(run_cli("poset \"[0,1]+[1,2]+[2,3]\"", "KLMS_ENUM_CAP=bogus").exit_code == 2);
}

TEST_CASE("phi and phiinv round-trip on the worked example") {
    RunResult r = run_cli(
        "phi --n 4 --j2 1,3 --w 2314 --baseline \"[1,3]+[1,4]+[2,5]+[2,6]\" --quiet");
    CHECK(r.exit_code == 0);
    CHECK(last_json(r.out)["multisegment"] == "[1,4]+[1,5]+[2,3]+[2,6]");

    r = run_cli(
        "phiinv --n 4 --j2 1,3 --ms \"[1,4]+[1,5]+[2,3]+[2,6]\" "
        "--baseline \"[1,3]+[1,4]+[2,5]+[2,6]\" --quiet");
    CHECK(r.exit_code == 0);
    CHECK(last_json(r.out)["w"] == "2314");
}

TEST_CASE("reduce subcommand") {
    RunResult r = run_cli("reduce \"[1,2]+[3,4]\" --quiet");
    CHECK(r.exit_code == 0);
    json j = last_json(r.out);
    CHECK(j["parabolic"] == "[1,3]+[3,4]");
    CHECK(j["chain"] == json::parse("[\"[3,3]\"]"));
    CHECK(j["realization_verified"] == true);

    r = run_cli("reduce \"[1,2]+[2,3]\" --quiet");
    CHECK(last_json(r.out)["chain"].empty());

    r = run_cli("reduce \"[1,3]+[1,4]+[2,5]+[2,6]\" --quiet");
    j = last_json(r.out);
    CHECK(j["masks"]["j1"] == "");
    CHECK(j["masks"]["j2"] == "1,3");
    CHECK(j["chain"].empty());
}

TEST_CASE("verify subcommand exits 0 on clean suites") {
    RunResult r = run_cli("verify --suite relations --n 3 --quiet");
    CHECK(r.exit_code == 0);
    json j = last_json(r.out);
    CHECK(j["failures_total"] == 0);

    r = run_cli("verify --suite param --n 3 --quiet");
    CHECK(r.exit_code == 0);

    r = run_cli("verify --suite realization --max-segments 2 --span 0..3 --quiet");
    CHECK(r.exit_code == 0);
}

TEST_CASE("repeated invocations are byte-identical") {
    for (const char* cmd :
         {"kl --n 4 --x 1234 --y 4231", "poset \"2*[0,1]+2*[1,2]\"",
          "reduce \"[0,0]+[2,2]\"", "verify --suite param --n 3"}) {
        RunResult a = run_cli(cmd);
        RunResult b = run_cli(cmd);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
    }
}
