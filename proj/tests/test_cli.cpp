#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>

#include "planargen/enumeration.hpp"
#include "planargen/graph_io.hpp"

using namespace planargen;

namespace {

struct Run {
    std::string out;
    int status = -1;
};

Run run(const std::string& args) {
    std::string cmd = std::string(PLANARGEN_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    char buf[4096];
    std::size_t k;
    while ((k = fread(buf, 1, sizeof buf, f)) > 0)
        r.out.append(buf, k);
    int st = pclose(f);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::vector<ParsedGraph> parse(const std::string& s) {
    std::istringstream in(s);
    return read_edge_lists(in);
}

EdgeVec zero_based(const LabelledGraph& g) {
    EdgeVec e;
    for (auto [u, v] : g.edges)
        e.emplace_back(u - 1, v - 1);
    return e;
}

}  // namespace

TEST_CASE("sample is deterministic in the seed") {
    Run a = run("sample --n 4 --exact --count 3 --seed 7");
    Run b = run("sample --n 4 --exact --count 3 --seed 7");
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    auto g = parse(a.out);
    REQUIRE(g.size() == 3);
    for (const auto& pg : g) {
        CHECK(pg.graph.n == 4);
        CHECK(is_planar(4, zero_based(pg.graph)));
        bool attempts = false;
        for (const auto& c : pg.comments)
            attempts |= c.rfind("attempts ", 0) == 0;
        CHECK(attempts);
    }
    Run c = run("sample --n 4 --exact --count 3 --seed 8");
    CHECK(c.out != a.out);
    Run jobs = run("sample --n 4 --exact --count 3 --seed 7 --jobs 2");
    CHECK(jobs.out == a.out);
}

TEST_CASE("size window and formats") {
    Run r = run("sample --n 60 --epsilon 0.1 --count 2 --seed 3");
    REQUIRE(r.status == 0);
    for (const auto& pg : parse(r.out)) {
        CHECK(pg.graph.n >= 54);
        CHECK(pg.graph.n <= 66);
        CHECK(is_planar_boost(pg.graph.n, zero_based(pg.graph)));
    }
    Run d = run("sample --n 5 --count 1 --seed 4 --format dot");
    REQUIRE(d.status == 0);
    CHECK(d.out.find("graph G {") != std::string::npos);
}

TEST_CASE("oracle files") {
    auto path = std::filesystem::temp_directory_path() / "planargen_cli_test.table";
    Run o = run("oracle --n 100 --mu 2 --oracle-file " + path.string());
    REQUIRE(o.status == 0);
    CHECK(std::filesystem::exists(path));
    Run s = run("sample --n 100 --mu 2 --epsilon 0.1 --seed 5 --oracle-file " + path.string());
    REQUIRE(s.status == 0);
    auto g = parse(s.out);
    REQUIRE(g.size() == 1);
    double ratio = static_cast<double>(g[0].graph.edges.size()) / g[0].graph.n;
    CHECK(ratio >= 1.8);
    CHECK(ratio <= 2.2);
    Run mismatch = run("sample --n 100 --epsilon 0.1 --seed 5 --oracle-file " + path.string());
    CHECK(mismatch.status == 2);
    std::filesystem::remove(path);
}

TEST_CASE("stats") {
    Run r = run("stats --n 30 --epsilon 0.2 --count 3 --seed 1 --edge-ratio --degree-histogram");
    REQUIRE(r.status == 0);
    CHECK(r.out.find("ratio mean") != std::string::npos);
    CHECK(r.out.find("degree\tproportion") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run("sample").status == 1);
    CHECK(run("sample --n 0").status == 1);
    CHECK(run("sample --n 5 --bogus").status == 1);
    CHECK(run("sample --n 1000 --exact --attempt-cap 1 --seed 2").status == 3);
}
