#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hypcert/cli.hpp"
#include "hypcert/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using hypcert::Json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "hypcert");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = hypcert::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_code = 0) {
    args.push_back("--json");
    auto r = run(args);
    REQUIRE_MESSAGE(r.code == expected_code, r.err);
    return Json::parse(r.out);
}

}  // namespace

TEST_CASE("series solve reproduces the printed expansion") {
    auto j = run_json({"series", "solve", "--operator", "krammer", "--init", "1,0", "--terms", "5"});
    const auto& c = j["coefficients"];
    REQUIRE(c.size() == 6);
    CHECK(c[2] == "-5/2952");
    CHECK(c[3] == "-889/726192");
    CHECK(c[4] == "-1851985/2143718784");
    CHECK(c.back() == "-110984489/175784940288");
}

TEST_CASE("series solve for a hypergeometric operator") {
    // 2F1(1/2, 1/2; 1; z) = sum binom(2n, n)^2 (z/16)^n
    auto j = run_json({"series", "solve", "--operator", "hyp", "--a", "1/2,1/2", "--b", "1,1", "--init", "1,1/4", "--terms", "3"});
    CHECK(j["coefficients"] == Json::array({"1", "1/4", "9/64", "25/256"}));
}

TEST_CASE("certificate exit codes") {
    CHECK(run({"certify", "quadratic", "--d", "7"}).code == 0);
    CHECK(run_json({"certify", "quadratic", "--d", "7"})["verdict"] == "pass");
    auto k = run_json({"certify", "krammer", "--primes", "2,3"}, 1);
    CHECK(k["verdict"] == "fail");
    CHECK(run({"certify", "krammer", "--primes", "3,5"}).code == 0);
    CHECK(run({"certify", "quadratic", "--d", "5"}).code == 1);
    CHECK(run({"certify", "cubic", "--disc", "148"}).code == 0);
    CHECK(run({"certify", "cubic", "--disc", "49"}).code == 1);
    CHECK(run({"certify", "singularities"}).code == 0);
    auto q = run_json({"certify", "quadratic", "--d", "9"}, 1);
    CHECK(q.contains("stopped"));
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"certify", "quadratic", "--d", "7", "--bogus"}).code == 2);
    CHECK(run({"certify", "quadratic"}).code == 2);
    CHECK(run({"certify", "quadratic", "--d", "seven"}).code == 2);
    CHECK(run({"certify", "krammer", "--primes", "3,,5"}).code == 2);
    CHECK(run({"enumerate", "--workers", "0"}).code == 2);
    CHECK(run({"series", "solve", "--operator", "mystery"}).code == 2);
}

TEST_CASE("malformed rationals exit 2 with a message") {
    for (const char* bad : {"1/0", "a/b", "1/-2", "1/", "/3", "1//2", "1.5", ""}) {
        auto r = run({"hyper", "classify", "--a", std::string(bad) + ",1/2", "--b", "0,0"});
        CHECK_MESSAGE(r.code == 2, bad);
        CHECK_FALSE(r.err.empty());
    }
    CHECK(run({"hyper", "classify", "--a", "1/2", "--b", "0,0"}).code == 2);
}

TEST_CASE("help exits 0") {
    auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("certify") != std::string::npos);
    CHECK(run({"certify", "quadratic", "--help"}).code == 0);
}

TEST_CASE("hyper and field subcommands") {
    auto c = run_json({"hyper", "classify", "--a", "1/5,4/5", "--b", "1/2,0"});
    CHECK(c["classification"] == "finite");
    CHECK(c["triangle_signature"] == "(5, 2, 2)");
    auto m = run_json({"hyper", "monodromy", "--a", "1/3,2/3", "--b", "0,1/2"});
    CHECK(m["verdict"] == "pass");
    for (const auto& [k, v] : m["checks"].items()) CHECK_MESSAGE(v == true, k);
    auto f = run_json({"field", "trace", "--a", "1/5,4/5", "--b", "1/2,0"});
    CHECK(f["degree"] == 2);
    CHECK(f["quadratic_subfields"] == Json::array({5}));
    CHECK(f["abelian"] == true);
    std::vector<std::string> keys;
    for (const auto& [k, v] : f.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"conductor", "stabilizer", "degree", "quadratic_subfields", "abelian"});
    auto a = run_json({"field", "adjoint", "--a", "1/5,4/5", "--b", "1/2,0"});
    CHECK(a.contains("generator_field"));
    CHECK(run({"field", "adjoint", "--a", "0,0", "--b", "0,0"}).code == 2);
}

TEST_CASE("midconv verify") {
    auto j = run_json({"midconv", "verify", "--m", "7", "--s", "1", "--t", "2", "--label", "lambda=-1"});
    CHECK(j["verdict"] == "pass");
    CHECK(j["output_rank"] == 2);
    CHECK(j["trace_field"]["degree"] == 3);
    CHECK(j["label"] == "lambda=-1");
    // character of order 2: reducible input, reported as a failure
    CHECK(run({"midconv", "verify", "--m", "2", "--s", "1", "--t", "1"}).code == 1);
    CHECK(run({"midconv", "verify", "--m", "0", "--s", "1", "--t", "1"}).code == 2);
}

TEST_CASE("enumerate writes rows and a summary") {
    const std::string path = "test_cli_rows.jsonl";
    auto s = run_json({"enumerate", "--conductor-max", "12", "--out", path, "--workers", "2"});
    CHECK(s["verdict"] == "pass");
    CHECK(s["forbidden_quadratic_rows"].empty());
    std::ifstream f(path);
    std::string line;
    std::size_t n = 0;
    while (std::getline(f, line)) {
        auto row = Json::parse(line);
        CHECK(row["conductor"].get<long>() <= 12);
        ++n;
    }
    CHECK(n == s["rows"].get<std::size_t>());
    std::remove(path.c_str());
}

TEST_CASE("JSON outputs round-trip") {
    const std::vector<std::vector<std::string>> commands = {
        {"series", "solve", "--operator", "krammer", "--terms", "12"},
        {"series", "audit", "--from", "10", "--to", "40"},
        {"hyper", "classify", "--a", "1/5,4/5", "--b", "1/2,0"},
        {"hyper", "monodromy", "--a", "1/7,3/7,5/7", "--b", "0,1/3,2/3"},
        {"field", "adjoint", "--a", "1/8,3/8", "--b", "0,1/4"},
        {"midconv", "verify", "--m", "5", "--s", "1", "--t", "1"},
        {"certify", "krammer", "--primes", "3,5"},
        {"certify", "cubic", "--disc", "148"},
        {"enumerate", "--conductor-max", "8"},
    };
    for (auto c : commands) {
        c.push_back("--json");
        auto r = run(c);
        REQUIRE(r.code == 0);
        const auto once = Json::parse(r.out).dump(2) + "\n";
        CHECK(once == r.out);
        CHECK(Json::parse(once).dump(2) + "\n" == once);
        // deterministic
        CHECK(run(c).out == r.out);
    }
}
