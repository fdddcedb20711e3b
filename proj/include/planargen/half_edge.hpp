// Combinatorial maps as half-edge arrays: an opposite involution and a
// counterclockwise successor around each vertex.
#pragma once

#include <vector>

namespace planargen {

enum Color : int { black = 0, white = 1, uncolored = 2 };

class HalfEdgeMap {
public:
    std::vector<int> opp, next, vert;  // per half-edge
    std::vector<int> color;            // per vertex
    std::vector<char> alive;           // per vertex; merged-away vertices are dead

    int vertex_count() const { return static_cast<int>(color.size()); }
    int half_edge_count() const { return static_cast<int>(opp.size()); }
    int live_vertex_count() const;
    int edge_count() const { return half_edge_count() / 2; }

    int add_vertex(int c) {
        color.push_back(c);
        alive.push_back(1);
        return vertex_count() - 1;
    }
    // detached half-edge at v (its own rotation successor)
    int add_half_edge(int v) {
        int h = half_edge_count();
        opp.push_back(-1);
        next.push_back(h);
        vert.push_back(v);
        return h;
    }
    // opposite pair u->v; both ends detached
    int add_edge(int u, int v) {
        int a = add_half_edge(u);
        int b = add_half_edge(v);
        pair(a, b);
        return a;
    }
    void pair(int a, int b) {
        opp[a] = b;
        opp[b] = a;
    }
    // inserts detached h right after pos in the rotation at vert[pos]
    void insert_after(int pos, int h);

    int head(int h) const { return vert[opp[h]]; }
    int face_next(int h) const { return next[opp[h]]; }

    // one half-edge per face cycle, in increasing half-edge order
    std::vector<std::vector<int>> faces() const;
    int degree(int v) const;
    // one outgoing half-edge per live vertex (-1 if isolated)
    std::vector<int> corner_of_vertices() const;

    void reserve(int vertices, int half_edges);
    void swap(HalfEdgeMap& other) noexcept {
        opp.swap(other.opp);
        next.swap(other.next);
        vert.swap(other.vert);
        color.swap(other.color);
        alive.swap(other.alive);
    }
    void clear();

    // involution without fixed points, rotations stay at one vertex,
    // every live vertex has a half-edge; throws InvariantViolation
    void check_structure() const;
    // V - E + F for the live part
    int euler_characteristic() const;
};

}  // namespace planargen
