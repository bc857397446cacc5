#include "doctest.h"

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

// Integration tests against the installed CLI binary (path injected by CMake).

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(LTLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("qsym mul matches the documented output byte for byte") {
    auto r = run_cli("qsym mul \"(1)\" \"(1)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2*M(1,1) + M(2)\n");
}

TEST_CASE("fgl emits a passing p-typical report") {
    auto r = run_cli("fgl --p 2 --n 1 --degree 8 --check-ptypical");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"ptypical\": \"pass\"") != std::string::npos);
    CHECK(r.out.find("\"schema\": \"1\"") != std::string::npos);
}

TEST_CASE("deterministic bytes for fixed config and seed") {
    auto a = run_cli("fgl --p 3 --n 1 --degree 6 --check-ptypical --seed 7");
    auto b = run_cli("fgl --p 3 --n 1 --degree 6 --check-ptypical --seed 7");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    auto c = run_cli("divalg --p 3 --n 2 --prec 8 --check-relations --seed 11");
    auto d = run_cli("divalg --p 3 --n 2 --prec 8 --check-relations --seed 11");
    CHECK(c.exit_code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("exit codes: 2 on usage error, 1 on domain error") {
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("qsym frobulate \"(1)\"").exit_code == 2);
    CHECK(run_cli("mzv zeta 1").exit_code == 1);          // pole at 1
    CHECK(run_cli("fgl --p 4 --n 1").exit_code == 2);     // p not prime
    CHECK(run_cli("mzv mzv \"(1,2)\"").exit_code == 1);   // non-admissible
}

TEST_CASE("divalg expression trees") {
    auto r = run_cli("divalg --p 2 --n 2 --prec 8 --expr "
                     "'{\"op\":\"mul\",\"args\":[{\"atom\":\"F\"},{\"atom\":\"F\"}]}' "
                     "--check-center");
    CHECK(r.exit_code == 0);
    // F^2 = p when n = 2: central, in o_D, not a unit
    CHECK(r.out.find("\"central\": true") != std::string::npos);
    CHECK(r.out.find("\"in_od\": true") != std::string::npos);
    CHECK(r.out.find("\"unit\": false") != std::string::npos);
    CHECK(r.out.find("\"valuation\": \"1\"") != std::string::npos);
}

TEST_CASE("flatconn reports a flat connection") {
    auto r = run_cli("flatconn --beta \"1*e1+2*e2\" --degree 4 --check");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"flat\": true") != std::string::npos);
    CHECK(r.out.find("\"u0_regular\": true") != std::string::npos);
}

TEST_CASE("environment variable overrides with the LTLAB_ prefix") {
    // run through the shell so the env assignment applies
    std::string cmd = std::string("LTLAB_FORMAT=json ") + LTLAB_CLI_PATH + " qsym mul \"(1)\" \"(2)\" 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
    pclose(pipe);
    CHECK(out.find("\"schema\": \"1\"") != std::string::npos);  // json, not text
}

TEST_CASE("criterion 8: selftest --seed 42 exits 0 within budget") {
    auto t0 = std::chrono::steady_clock::now();
    auto r = run_cli("selftest --seed 42");
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("all criteria passed") != std::string::npos);
    CHECK(secs < 300.0);
}
