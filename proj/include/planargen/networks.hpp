// Networks (two poles 0 and 1, series/parallel/polyhedral decomposition),
// their L-derived versions, and edge-rooted 2-connected graphs.
#pragma once

#include "planargen/core.hpp"
#include "planargen/graph.hpp"
#include "planargen/params.hpp"

namespace planargen {

// P1: an edge in parallel with at least one component; P2: at least two
// components and no edge; S_or_H, head: the classes S+H and Z_U+P+H.
enum class NetworkKind { D, S, P, P1, P2, H, S_or_H, head };
enum class DerivedNetworkKind { D, S, P, H };

// Poles are vertices 0 and 1; poles flag set, no root edge.
Graph sample_network(NetworkKind kind, const Params& p, RandomSource& rng);
// as above with mark = the distinguished non-pole vertex
Graph sample_network_derived(DerivedNetworkKind kind, const Params& p, RandomSource& rng);

// adds the edge 0-1 unless present and roots the graph at 0 -> 1
Graph add_root_edge(Graph network);

enum class G2RootedKind { plain, derived };
Graph sample_G2_rooted(G2RootedKind kind, const Params& p, RandomSource& rng);

}  // namespace planargen
