// Brute-force oracles for tests: exhaustive enumeration of small labelled
// graphs, planarity and connectivity predicates, small trees and
// dissections, chi-square goodness of fit.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "planargen/maps3.hpp"
#include "planargen/trees.hpp"

namespace planargen {

using EdgeVec = std::vector<std::pair<int, int>>;

enum class GraphClass { planar, connected, two_connected, three_connected, network };

struct CountTable {
    GraphClass cls = GraphClass::planar;
    std::map<std::pair<int, int>, std::uint64_t> counts;  // (n, m) -> number of labelled objects

    std::uint64_t at(int n, int m) const {
        auto it = counts.find({n, m});
        return it == counts.end() ? 0 : it->second;
    }
    std::uint64_t total(int n) const;
};

// All labelled graphs on n vertices in the class, tallied by edge count.
// For networks n counts the non-pole vertices and the poles come on top.
CountTable enumerate_class(GraphClass cls, int n);
// Every edge set in the class on n vertices (0-based), in increasing bitmask order.
std::vector<EdgeVec> list_class(GraphClass cls, int n);

bool is_planar(int n, const EdgeVec& edges);
// independent Boyer-Myrvold planarity test, any size
bool is_planar_boost(int n, const EdgeVec& edges);
// 0 if disconnected, else the largest k <= 3 such that the graph is k-connected;
// the single edge counts as 2-connected and 3-connectivity needs 4 vertices
int connectivity(int n, const EdgeVec& edges);
bool is_simple(int n, const EdgeVec& edges);

struct Predicates {
    bool planar = false;
    int connectivity = 0;
};
Predicates graph_predicates(int n, const EdgeVec& edges);

// p-value of the chi-square statistic against the uniform law on the cells
double chi_square_uniform(const std::vector<std::uint64_t>& observed);
// p-value against the given cell probabilities
double chi_square(const std::vector<std::uint64_t>& observed, const std::vector<double>& probability);

// Unrooted bicolored binary trees with 1..max_nodes nodes other than the
// excluded symmetric shapes, one representative per plane-embedding class.
// Symmetries that move black nodes are broken by the labels, so such trees stay.
std::vector<BicoloredTree> enumerate_trees(int max_nodes);
// preorder code of the tree planted at the leaf half-edge h
std::string rooted_tree_code(const BicoloredTree& t, int h);
// code of the map explored breadth-first from half-edge h; equal codes iff
// the rooted maps are isomorphic
std::vector<int> map_code(const HalfEdgeMap& m, int h);
// minimum over the three rootings at a black outer vertex
std::vector<int> dissection_code(const Dissection& d);

}  // namespace planargen
