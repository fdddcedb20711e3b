// Text formats for labelled graphs: the edge list (header `n m seed`, then
// sorted 1-based `u v` pairs, `#` comment lines) and DOT.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "planargen/graph.hpp"

namespace planargen {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// comments are written after the edges as `# text`
void write_edge_list(std::ostream& out, const LabelledGraph& g, std::uint64_t seed,
                     const std::vector<std::string>& comments = {});
void write_dot(std::ostream& out, const LabelledGraph& g, std::uint64_t seed,
               const std::vector<std::string>& comments = {});

struct ParsedGraph {
    LabelledGraph graph;
    std::uint64_t seed = 0;
    std::vector<std::string> comments;
};

// reads every graph in an edge-list stream
std::vector<ParsedGraph> read_edge_lists(std::istream& in);

std::vector<int> degree_sequence(const LabelledGraph& g);

}  // namespace planargen
