// Bicolored binary trees: rooted, unrooted and L-derived Boltzmann samplers.
#pragma once

#include <cstdint>
#include <vector>

#include "planargen/core.hpp"
#include "planargen/half_edge.hpp"
#include "planargen/params.hpp"

namespace planargen {

// Leaves are uncolored degree-1 vertices; nodes are black or white of degree 3.
struct BicoloredTree {
    HalfEdgeMap map;
    int root = -1;  // half-edge leaving the root leaf; -1 when unrooted
    int mark = -1;  // black node discarded from the L-atoms
    int black_nodes = 0, white_nodes = 0, leaves = 0;

    int nodes() const { return black_nodes + white_nodes; }
    std::uint64_t l_size() const { return static_cast<std::uint64_t>(black_nodes - (mark >= 0 ? 1 : 0)); }
    std::uint64_t u_size() const { return static_cast<std::uint64_t>(leaves - (root >= 0 ? 1 : 0)); }
};

// The same trees without a map: nodes in creation order, node 0 next to the
// root leaf. kid[0], kid[1] follow the parent in ccw order and hold a node
// index or -1 for a leaf; up is the kid slot 2i+k of the parent i holding
// the node, -1 for node 0.
struct TreeCode {
    struct Node {
        int kid[2];
        int up;
        int color;
    };
    std::vector<Node> node;
    int black_nodes = 0, white_nodes = 0;
    int mark = -1;  // node index

    int nodes() const { return black_nodes + white_nodes; }
    int leaves() const { return nodes() + 2; }
};

// rooted code; false if the early-abort coin stopped the attempt
bool grow_code(const Params& p, RandomSource& rng, TreeCode& code, bool early_abort);
void sample_K_code(const Params& p, RandomSource& rng, TreeCode& code);
void sample_K_prime_code(const Params& p, RandomSource& rng, TreeCode& code);
// the rooted tree of the code, with the numbering the direct samplers produce
void expand_code(const TreeCode& code, BicoloredTree& t);

// rooted trees whose underlying tree is asymmetric (the class K-underline)
BicoloredTree sample_uK(const Params& p, RandomSource& rng);
// unrooted asymmetric trees, by early-abort rejection
BicoloredTree sample_K(const Params& p, RandomSource& rng);
// L-derived: one black node carries the mark
BicoloredTree sample_K_prime(const Params& p, RandomSource& rng);
// as above, reusing the storage of t
void sample_K_into(const Params& p, RandomSource& rng, BicoloredTree& t);
void sample_K_prime_into(const Params& p, RandomSource& rng, BicoloredTree& t);

// structural checks: degrees, alternating colors, leaves = nodes + 2
void check_tree(const BicoloredTree& t);
// true for the four trees with a nontrivial rotation symmetry
bool is_excluded_shape(const BicoloredTree& t);

// the tree on two leaves and no node
BicoloredTree two_leaf_tree();

}  // namespace planargen
