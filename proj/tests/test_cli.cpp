#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

// Drives the installed binary end to end: output bytes and exit codes.

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
    const std::string cmd = std::string(GDBTOOL_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("bwt subcommand emits the worked example") {
    const RunResult r = run("bwt --word 220120011");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "{\"schema_version\":1,\"word\":\"001122012\",\"necklace\":\"[001122012]\","
          "\"bwt\":\"202001121\",\"cycle\":[0,1,3,5,8,7,2,4,6]}\n");
}

TEST_CASE("words subcommand lists the four ternary words") {
    const RunResult r = run("words --k 3 --length 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "{\"schema_version\":1,\"count\":4,\"necklaces\":"
          "[\"[001221]\",\"[002121]\",\"[010122]\",\"[010212]\"]}\n");
}

TEST_CASE("round trip through the binary") {
    CHECK(run("ibwt --word 202001121").out.find("[001122012]") != std::string::npos);
    CHECK(run("ibwt --word 1100").out.find("\"kind\":\"power\"") != std::string::npos);
    CHECK(run("ibwt --word 10011010 --balanced --k 2").out.find("[00010111]") != std::string::npos);
}

TEST_CASE("stdperm serializes one-line and cycle forms") {
    const RunResult r = run("stdperm --word 10011010");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"one_line\":[4,0,1,5,6,2,7,3]") != std::string::npos);
    CHECK(r.out.find("\"cycles\":[[0,4,6,7,3,5,2,1]]") != std::string::npos);
    CHECK(r.out.find("\"is_cycle\":true") != std::string::npos);
}

TEST_CASE("counts match the published sequences") {
    CHECK(run("count --k 2 --length 16").out.find("\"count\":\"16\"") != std::string::npos);
    CHECK(run("count --k 3 --length 18").out.find("\"count\":\"1728\"") != std::string::npos);
    CHECK(run("count --k 2 --length 8 --what lyn").out.find("\"count\":\"30\"") != std::string::npos);
    CHECK(run("count --k 2 --length 8 --what neck").out.find("\"count\":\"36\"") != std::string::npos);
}

TEST_CASE("graph subcommands") {
    CHECK(run("graph kappa --k 2 --n 6").out.find("\"count\":\"4\"") != std::string::npos);
    const RunResult dot = run("graph edges --k 2 --n 3 --format dot");
    CHECK(dot.out.find("digraph DB_2_3 {") == 0);
    CHECK(dot.out.find("  1 -> 2;") != std::string::npos);
    const RunResult ham = run("graph hamiltonian --k 3 --n 6");
    CHECK(ham.out.find("[[0,1,3,5,4,2],[0,1,5,3,4,2],[0,2,1,3,5,4],[0,2,1,5,3,4]]") != std::string::npos);
    CHECK(run("graph laplacian --k 2 --n 6 --reduced").out.find("\"rows\":[[1,-1,0,0,0]") != std::string::npos);
    CHECK(run("graph words --k 2 --length 12").out.find("[000010111101]") != std::string::npos);
}

TEST_CASE("inv subcommands") {
    CHECK(run("inv list --p 2 --n 4").out.find("[\"[0001]\",\"[0111]\"]") != std::string::npos);
    CHECK(run("inv count --p 2 --n 8").out.find("\"phi\":\"128\"") != std::string::npos);
    CHECK(run("inv count --p 2 --n 8").out.find("\"invertible_necklaces\":\"16\"") != std::string::npos);
    CHECK(run("inv mul --p 2 --a 1110 --b 1110").out.find("\"product\":\"[0001]\"") != std::string::npos);
    CHECK(run("inv act --p 2 --a 11010 --v 11000").out.find("\"result\":\"[01111]\"") != std::string::npos);
    CHECK(run("inv dichotomy --p 2 --n 8").out.find("\"all_invertible\":true") != std::string::npos);
}

TEST_CASE("snf subcommand accepts graphs and explicit matrices") {
    CHECK(run("snf --k 3 --n 6").out.find("\"invariant_factors\":[\"1\",\"1\",\"3\",\"3\",\"3\",\"0\"]") !=
          std::string::npos);
    CHECK(run("snf --matrix [[2,0],[0,3]]").out.find("\"invariant_factors\":[\"1\",\"6\"]") != std::string::npos);
}

TEST_CASE("group subcommands") {
    CHECK(run("group sandpile --k 3 --n 6").out.find("\"factors\":[\"3\",\"3\",\"3\"]") != std::string::npos);
    CHECK(run("group reutenauer --p 2 --n 8").out.find("\"factors\":[\"2\",\"2\",\"4\"]") != std::string::npos);
    CHECK(run("group primepower --p 2 --d 3").out.find("\"factors\":[\"2\",\"2\",\"4\"]") != std::string::npos);
}

TEST_CASE("verify subcommands pass and exit zero") {
    CHECK(run("verify tables --max-n 5").exit_code == 0);
    CHECK(run("verify bijection --p 2 --n 6").exit_code == 0);
    CHECK(run("verify dichotomy --p 2 --max-n 8").exit_code == 0);
    const RunResult csv = run("verify dichotomy --p 2 --max-n 4 --format csv");
    CHECK(csv.out.find("name,expected,actual,result") == 0);
    CHECK(csv.out.find("dichotomy p=2 n=4,AllInvertible,AllInvertible,pass") != std::string::npos);
}

TEST_CASE("exit codes") {
    const RunResult domain = run("ibwt --word 01", /*merge_stderr=*/true);
    CHECK(domain.exit_code == 1);
    CHECK(domain.out.find("\"kind\":\"NotABwtImage\"") != std::string::npos);

    CHECK(run("bwt --word 012 --k 2", true).exit_code == 1);
    CHECK(run("inv mul --p 2 --a 1100 --b 1110", true).exit_code == 1);
    CHECK(run("count --k 2 --length 9", true).exit_code == 1);

    CHECK(run("--bogus", true).exit_code == 2);
    CHECK(run("words --k 3", true).exit_code == 2);          // missing --length
    CHECK(run("words --k 3 --length 6 --bound 8", true).exit_code == 2);  // below minimum bound
    CHECK(run("count --k 2 --length 8 --what weird", true).exit_code == 2);

    // Bounded enumeration surfaces as a domain error, not a crash.
    const RunResult bound = run("words --k 2 --length 40 --bound 1024", true);
    CHECK(bound.exit_code == 1);
    CHECK(bound.out.find("BoundExceeded") != std::string::npos);
}

TEST_CASE("output is byte-deterministic") {
    const std::string args = "verify tables --max-n 5";
    CHECK(run(args).out == run(args).out);
    CHECK(run("words --k 2 --length 12").out == run("words --k 2 --length 12").out);
}

TEST_CASE("every json object carries the schema version") {
    for (const std::string& args :
         {std::string("bwt --word 011"), std::string("count --k 2 --length 8"),
          std::string("graph hamiltonian --k 2 --n 4"), std::string("inv list --p 3 --n 3"),
          std::string("group sandpile --k 2 --n 6"), std::string("verify bijection --p 2 --n 4")}) {
        const RunResult r = run(args);
        CAPTURE(args);
        CHECK(r.out.find("\"schema_version\":1") != std::string::npos);
    }
}
