// Irreducible dissections of the hexagon, the closure of bicolored trees,
// admissibility, the primal map and samplers for rooted 3-connected graphs.
#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "planargen/core.hpp"
#include "planargen/half_edge.hpp"
#include "planargen/params.hpp"
#include "planargen/trees.hpp"

namespace planargen {

// Outer vertices hex[0..5] in counterclockwise order, even indices black.
// outer[j] is the outer-face half-edge from hex[j-1] to hex[j].
struct Dissection {
    HalfEdgeMap map;
    std::array<int, 6> hex{};
    std::array<int, 6> outer{};
    int root = -1;  // r in {0, 2, 4}: root edge hex[r] -> hex[r+1]
    int mark = -1;  // discarded inner black vertex
    int inner_black = 0, inner_white = 0, inner_faces = 0;

    int root_half_edge() const { return outer[static_cast<std::size_t>((root + 1) % 6)]; }
    // a rooted dissection carries one more L-atom (hex[r+4]) and one more U-atom
    std::uint64_t l_size() const;
    std::uint64_t u_size() const;
};

Dissection closure(const BicoloredTree& tree);
Dissection closure(BicoloredTree&& tree);
// closure into d, taking over the storage of tree; tree is left unspecified
void closure_into(BicoloredTree& tree, Dissection& d);
// all dissection invariants; the 4-cycle irreducibility test is cubic and optional
void validate(const Dissection& d, bool check_irreducible = false);
bool is_admissible(const Dissection& d);
// is_admissible by enumerating every path of length 3; for tests
bool is_admissible_bruteforce(const Dissection& d);

// The closure worked out on a tree code without building the map: for each
// node the hexagon vertices its open stems reach (bit j for hex[j]) and the
// node-node edges made by local closures. Hexagon indices agree with closure().
struct ClosureSketch {
    std::vector<unsigned char> hexes;
    std::vector<std::pair<int, int>> links;
    std::vector<int> target;  // scratch
};
void sketch_closure(const TreeCode& code, ClosureSketch& s);
// is_admissible of the closure rooted at r
bool sketch_admissible(const TreeCode& code, const ClosureSketch& s, int r);

enum class DissectionKind { I, I_prime, J, J_prime, Ja, Ja_prime };
Dissection sample_dissection(DissectionKind kind, const Params& p, RandomSource& rng);

// Edge-rooted 3-connected graph shape. Vertices 0 -> 1 are the root ends,
// the root edge itself is not stored in edges.
struct Core3 {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;
    int mark = -1;         // discarded vertex (L-derived)
    int marked_edge = -1;  // index of the discarded edge (U-derived)

    std::uint64_t l_size() const {
        return static_cast<std::uint64_t>(num_vertices - 2 - (mark >= 0 ? 1 : 0));
    }
    std::uint64_t u_size() const {
        return static_cast<std::uint64_t>(static_cast<int>(edges.size()) - (marked_edge >= 0 ? 1 : 0));
    }
};

// root-addition then primal map; d must be rooted and admissible
Core3 primal(const Dissection& d);

enum class G3Kind { rooted, derived, u_derived };
Core3 sample_G3(G3Kind kind, const Params& p, RandomSource& rng);

}  // namespace planargen
