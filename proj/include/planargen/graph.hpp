// Graph shapes built by the samplers: unlabelled vertices 0..n-1, an edge
// list, and the marks that distinguish vertices or edges from the atoms.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace planargen {

struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    bool poles = false;   // vertices 0 and 1 are poles or root ends, not L-atoms
    int root_edge = -1;   // index of the directed root edge 0 -> 1
    int mark = -1;        // first distinguished vertex
    int mark2 = -1;       // second distinguished vertex
    int discarded = -1;   // index of the distinguished edge

    int add_vertex() { return n++; }
    int add_edge(int u, int v) {
        edges.emplace_back(u, v);
        return static_cast<int>(edges.size()) - 1;
    }

    std::uint64_t l_size() const {
        return static_cast<std::uint64_t>(n - (poles ? 2 : 0) - (mark >= 0 ? 1 : 0) - (mark2 >= 0 ? 1 : 0));
    }
    std::uint64_t u_size() const {
        return static_cast<std::uint64_t>(static_cast<int>(edges.size()) - (root_edge >= 0 ? 1 : 0) -
                                          (discarded >= 0 ? 1 : 0));
    }
};

// Labelled output: vertices 1..n, edges as sorted pairs u < v in sorted order.
struct LabelledGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

}  // namespace planargen
