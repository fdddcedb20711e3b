#include "doctest.h"

#include <sstream>

#include "planargen/graph_io.hpp"

using namespace planargen;

namespace {

LabelledGraph triangle_plus() {
    LabelledGraph g;
    g.n = 4;
    g.edges = {{1, 2}, {1, 3}, {2, 3}};
    return g;
}

std::vector<ParsedGraph> parse(const std::string& s) {
    std::istringstream in(s);
    return read_edge_lists(in);
}

}  // namespace

TEST_CASE("edge list round trip") {
    std::ostringstream out;
    write_edge_list(out, triangle_plus(), 99, {"attempts 12", "primitive_ops 345"});
    LabelledGraph single;
    single.n = 1;
    write_edge_list(out, single, 100);
    CHECK(out.str().rfind("4 3 99\n1 2\n1 3\n2 3\n# attempts 12\n", 0) == 0);
    auto g = parse(out.str());
    REQUIRE(g.size() == 2);
    CHECK(g[0].graph.n == 4);
    CHECK(g[0].graph.edges == triangle_plus().edges);
    CHECK(g[0].seed == 99);
    REQUIRE(g[0].comments.size() == 2);
    CHECK(g[0].comments[1] == "primitive_ops 345");
    CHECK(g[1].graph.n == 1);
    CHECK(g[1].graph.edges.empty());
    CHECK(g[1].seed == 100);
}

TEST_CASE("dot output") {
    std::ostringstream out;
    write_dot(out, triangle_plus(), 5, {"attempts 1"});
    const std::string s = out.str();
    CHECK(s.find("// n=4 m=3 seed=5") != std::string::npos);
    CHECK(s.find("graph G {") != std::string::npos);
    CHECK(s.find("  4;\n") != std::string::npos);
    CHECK(s.find("  2 -- 3;\n") != std::string::npos);
    CHECK(s.find("// attempts 1") != std::string::npos);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse("# early\n3 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("3 x 1\n"), ParseError);
    CHECK_THROWS_AS(parse("3 1 1\n2 1\n"), ParseError);
    CHECK_THROWS_AS(parse("3 1 1\n1 4\n"), ParseError);
    CHECK_THROWS_AS(parse("3 1 1\n0 2\n"), ParseError);
    CHECK_THROWS_AS(parse("3 2 1\n1 2\n"), ParseError);
    CHECK(parse("").empty());
    CHECK(parse("\n2 1 0\n\n1 2\n").size() == 1);
}

TEST_CASE("degree sequence") {
    CHECK(degree_sequence(triangle_plus()) == std::vector<int>{2, 2, 2, 0});
}
