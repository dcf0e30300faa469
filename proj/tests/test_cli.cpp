#include <catch_amalgamated.hpp>

#include "cli.hpp"

#include <sstream>

using namespace petersen;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string sample(const std::string& name)
{
    return std::string(SAMPLES_DIR) + "/" + name;
}

} // namespace

TEST_CASE("cert verify on the bundled K6 certificate", "[cli]")
{
    const auto r = run_cli({"cert", "verify", "K6", "--bundled"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verdict: PASS") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);

    const auto j = run_cli({"--format", "json", "cert", "verify", sample("k6.json"), "--bundled"});
    CHECK(j.code == 0);
    CHECK(json::parse(j.out)["pass"] == true);
}

TEST_CASE("cert verify reports the P10 Bohme failure", "[cli]")
{
    const auto r = run_cli({"cert", "verify", "P10", "--bundled"});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL bohme-system: (1,2,3,9,6,5) and (2,3,4,5,6,8)") != std::string::npos);
}

TEST_CASE("bohme-check prints a witness", "[cli]")
{
    const auto r = run_cli({"bohme-check", sample("k4.json"), sample("k4_twin_cycles.json")});
    CHECK(r.code == 1);
    CHECK(r.out.find("witness: (a,b,c,d) and (a,c,b,d) meet in 2 components") != std::string::npos);

    const auto ok = run_cli({"bohme-check", "K6", sample("k6_triangles_bohme.json")});
    CHECK(ok.code == 0);
    const auto j = run_cli({"bohme-check", sample("k4.json"), sample("k4_twin_cycles.json"), "--format", "json"});
    CHECK(j.code == 1);
    CHECK(json::parse(j.out)["witness"]["components"] == 2);
}

TEST_CASE("sphere-check", "[cli]")
{
    CHECK(run_cli({"sphere-check", "K6", sample("k6_c1_system.json")}).code == 0);
    const auto bad = run_cli({"sphere-check", "K6", sample("k6_book_system.json")});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("edge-degree") != std::string::npos);
}

TEST_CASE("family listing", "[cli]")
{
    const auto j = run_cli({"family", "--format", "json"});
    CHECK(j.code == 0);
    const auto arr = json::parse(j.out);
    REQUIRE(arr.size() == 7);
    std::multiset<std::string> names;
    for (const auto& m : arr) {
        names.insert(m["name"].get<std::string>());
        CHECK(m["edges"] == 15);
    }
    CHECK(names == std::multiset<std::string>{"K6", "P7", "K331", "P8", "K44_MINUS_E", "P9", "P10"});
    const auto t = run_cli({"family"});
    CHECK(t.code == 0);
    CHECK(t.out.rfind("K6 ", 0) == 0);
}

TEST_CASE("repeated runs are byte-identical", "[cli]")
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"family", "--format", "json"},
             {"cycles", "P9", "--induced"},
             {"cert", "search", "P8", "--max-results", "3", "--format", "json"},
             {"linking", "omega", "P10", "--seed", "4", "--trials", "3", "--format", "json"},
             {"export", "dot", "K331"}}) {
        const auto a = run_cli(args);
        const auto b = run_cli(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

TEST_CASE("cycles subcommand", "[cli]")
{
    const auto r = run_cli({"cycles", "K6", "--max-len", "3", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["count"] == 20);
    CHECK(run_cli({"cycles", "P10", "--max-len", "5", "--induced"}).out.find("12 cycles") != std::string::npos);
}

TEST_CASE("cert search", "[cli]")
{
    const auto r = run_cli({"cert", "search", "K6", "--max-base-len", "3", "--schema", "TRIANGLE_CONNECTOR",
                            "--max-results", "100", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["count"] == 20);
    CHECK(run_cli({"cert", "search", sample("c6.json")}).code == 1);
    CHECK(run_cli({"cert", "search", "K6", "--schema", "BOGUS"}).code == 2);
}

TEST_CASE("linking omega", "[cli]")
{
    const auto r = run_cli({"linking", "omega", "K6", "--trials", "5", "--mode", "triangles"});
    CHECK(r.code == 0);
    CHECK(r.out.find("parity 1: 5") != std::string::npos);
    const auto e = run_cli({"linking", "omega", "K6", "--mode", "triangles", "--embedding",
                            sample("k6_moment_embedding.json"), "--format", "json"});
    CHECK(e.code == 0);
    const auto j = json::parse(e.out);
    CHECK(j["histogram"]["1"] == 1);
    CHECK(j["trials"][0]["report"]["pairs"].size() == 10);
    // Text and JSON modes agree.
    const auto t = run_cli({"linking", "omega", "P9", "--seed", "9", "--trials", "2"});
    const auto tj = run_cli({"linking", "omega", "P9", "--seed", "9", "--trials", "2", "--format", "json"});
    CHECK(t.code == tj.code);
    CHECK(json::parse(tj.out)["histogram"]["1"] == 2);
    // A graph without disjoint cycles has parity 0, which is reported as a failure.
    CHECK(run_cli({"linking", "omega", sample("c6.json")}).code == 1);
}

TEST_CASE("export dot", "[cli]")
{
    const auto r = run_cli({"export", "dot", sample("k4.json")});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("graph \"G\" {", 0) == 0);
    CHECK(r.out.find("\"a\" -- \"b\";") != std::string::npos);
}

TEST_CASE("usage and format errors exit 2", "[cli]")
{
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"family", "--format", "xml"}).code == 2);
    CHECK(run_cli({"cert", "verify", "K6"}).code == 2);
    const auto bad = run_cli({"cycles", sample("bad_graph.json")});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("graph.edges[1]") != std::string::npos);
    const auto missing = run_cli({"cycles", sample("no_such_file.json")});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("cannot open") != std::string::npos);
    CHECK(run_cli({"--help"}).code == 0);
}
