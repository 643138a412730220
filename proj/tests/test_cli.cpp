#include <catch2/catch_amalgamated.hpp>

#include <initializer_list>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gradpos/cli.hpp"

namespace {

// Redirect std::cout / std::cerr into string streams for the lifetime of the
// object.
struct Capture {
    std::ostringstream out, err;
    std::streambuf* old_out;
    std::streambuf* old_err;
    Capture()
        : old_out(std::cout.rdbuf(out.rdbuf())), old_err(std::cerr.rdbuf(err.rdbuf())) {}
    ~Capture() {
        std::cout.rdbuf(old_out);
        std::cerr.rdbuf(old_err);
    }
};

int run_cli(std::initializer_list<const char*> args, std::string* out = nullptr,
            std::string* err = nullptr) {
    std::vector<const char*> argv{"gradpos"};
    argv.insert(argv.end(), args.begin(), args.end());
    Capture cap;
    int rc = gradpos::cli::run(static_cast<int>(argv.size()), argv.data());
    if (out) *out = cap.out.str();
    if (err) *err = cap.err.str();
    return rc;
}

int count_occurrences(const std::string& s, const std::string& needle) {
    int c = 0;
    for (std::size_t pos = s.find(needle); pos != std::string::npos;
         pos = s.find(needle, pos + needle.size()))
        ++c;
    return c;
}

} // namespace

TEST_CASE("poset dot output lists one node per weight") {
    std::string out;
    int rc = run_cli({"poset", "--type", "F4", "--grading", "standard:1", "--format", "dot"}, &out);
    CHECK(rc == 0);
    CHECK(out.rfind("digraph", 0) == 0);
    CHECK(count_occurrences(out, "[label=") == 8);
    CHECK(count_occurrences(out, " -> ") > 0);
}

TEST_CASE("poset text output for a disconnected instance") {
    std::string out;
    int rc = run_cli({"poset", "--type", "A3", "--grading", "extra-special"}, &out);
    CHECK(rc == 0);
    CHECK(out.find("size: 4") != std::string::npos);
    // Two disjoint 2-chains: exactly two cover relations.
    CHECK(count_occurrences(out, " < ") == 2);
}

TEST_CASE("poset json output carries the instance size") {
    std::string out;
    int rc = run_cli({"poset", "--type", "E8", "--grading", "standard:1", "--format", "json"}, &out);
    REQUIRE(rc == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["instance"]["size"] == 64);
    CHECK(j["elements"].size() == 64);
}

TEST_CASE("bare integer grading argument") {
    std::string out;
    int rc = run_cli({"poset", "--type", "B3", "--grading", "1"}, &out);
    CHECK(rc == 0);
    CHECK(out.find("size: 5") != std::string::npos);
}

TEST_CASE("report emits polynomial and involution data") {
    std::string out;
    int rc = run_cli({"report", "--type", "A2", "--grading", "standard:1"}, &out);
    REQUIRE(rc == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["instance"]["size"] == 2);
    CHECK(j["polynomials"]["m"] == nlohmann::json({1, 1, 1}));
    CHECK(j["polynomials"]["n"] == nlohmann::json({1, 2}));
    CHECK(j["csp"]["holds"] == true);
    CHECK(j["involution"]["self_complementary"] == 1);
}

TEST_CASE("report matches frozen values for larger instances") {
    std::string out;
    int rc = run_cli({"report", "--type", "E7", "--grading", "standard:2"}, &out);
    REQUIRE(rc == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["polynomials"]["n"] == nlohmann::json({1, 35, 140, 140, 35, 1}));

    std::string out2;
    rc = run_cli({"report", "--type", "E8", "--grading", "standard:8"}, &out2);
    REQUIRE(rc == 0);
    auto j2 = nlohmann::json::parse(out2);
    CHECK(j2["orbits"]["summary"] == "29 x 8");
    CHECK(j2["csp"]["holds"] == true);
}

TEST_CASE("report output is byte-identical across runs") {
    std::string a, b;
    REQUIRE(run_cli({"report", "--type", "D4", "--grading", "standard:2"}, &a) == 0);
    REQUIRE(run_cli({"report", "--type", "D4", "--grading", "standard:2"}, &b) == 0);
    CHECK(a == b);
    CHECK(!a.empty());
}

TEST_CASE("extra-special report has null involution") {
    std::string out;
    int rc = run_cli({"report", "--type", "C3", "--grading", "extra-special"}, &out);
    REQUIRE(rc == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["involution"].is_null());
}

TEST_CASE("verify runs a named theorem group") {
    std::string out, err;
    int rc = run_cli({"verify", "--theorem", "M-poly", "--max-rank", "3"}, &out, &err);
    CHECK(rc == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["failed"] == 0);
    CHECK(j["ok"] == true);
    CHECK(j["total"].get<int>() >= 1);
    // Progress goes to stderr, never stdout.
    CHECK(out.find("...") == std::string::npos);
}

TEST_CASE("verify rejects an unknown selector") {
    std::string out, err;
    int rc = run_cli({"verify", "--theorem", "bogus"}, &out, &err);
    CHECK(rc == 2);
    CHECK(err.find("unknown theorem") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    std::string out, err;
    CHECK(run_cli({"poset", "--type", "Z9"}, &out, &err) == 2);
    CHECK(run_cli({"poset"}, &out, &err) == 2);
    CHECK(run_cli({"poset", "--type", "A3", "--grading", "standard:9"}, &out, &err) == 2);
    CHECK(run_cli({}, &out, &err) == 2);
}
