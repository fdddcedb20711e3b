#include "planargen/half_edge.hpp"

#include <algorithm>
#include <string>

#include "planargen/core.hpp"

namespace planargen {

int HalfEdgeMap::live_vertex_count() const {
    return static_cast<int>(std::count(alive.begin(), alive.end(), 1));
}


void HalfEdgeMap::insert_after(int pos, int h) {
    next[h] = next[pos];
    next[pos] = h;
    vert[h] = vert[pos];
}

std::vector<std::vector<int>> HalfEdgeMap::faces() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(opp.size(), 0);
    for (int h = 0; h < half_edge_count(); ++h) {
        if (seen[static_cast<std::size_t>(h)])
            continue;
        std::vector<int> f;
        int e = h;
        do {
            seen[static_cast<std::size_t>(e)] = 1;
            f.push_back(e);
            e = face_next(e);
        } while (e != h);
        out.push_back(std::move(f));
    }
    return out;
}

int HalfEdgeMap::degree(int v) const {
    int d = 0;
    for (int h = 0; h < half_edge_count(); ++h)
        if (vert[static_cast<std::size_t>(h)] == v)
            ++d;
    return d;
}

std::vector<int> HalfEdgeMap::corner_of_vertices() const {
    std::vector<int> c(color.size(), -1);
    for (int h = half_edge_count() - 1; h >= 0; --h)
        c[static_cast<std::size_t>(vert[static_cast<std::size_t>(h)])] = h;
    return c;
}

void HalfEdgeMap::reserve(int vertices, int half_edges) {
    color.reserve(static_cast<std::size_t>(vertices));
    alive.reserve(static_cast<std::size_t>(vertices));
    opp.reserve(static_cast<std::size_t>(half_edges));
    next.reserve(static_cast<std::size_t>(half_edges));
    vert.reserve(static_cast<std::size_t>(half_edges));
}

void HalfEdgeMap::clear() {
    opp.clear();
    next.clear();
    vert.clear();
    color.clear();
    alive.clear();
}

void HalfEdgeMap::check_structure() const {
    const int n = half_edge_count();
    auto fail = [](const std::string& what) { throw InvariantViolation("half-edge map: " + what); };
    for (int h = 0; h < n; ++h) {
        int o = opp[static_cast<std::size_t>(h)];
        if (o < 0 || o >= n || o == h || opp[static_cast<std::size_t>(o)] != h)
            fail("opposite is not a fixed-point-free involution at " + std::to_string(h));
        int nx = next[static_cast<std::size_t>(h)];
        if (nx < 0 || nx >= n)
            fail("rotation successor out of range");
        if (vert[static_cast<std::size_t>(nx)] != vert[static_cast<std::size_t>(h)])
            fail("rotation leaves its vertex at " + std::to_string(h));
        int v = vert[static_cast<std::size_t>(h)];
        if (v < 0 || v >= vertex_count() || !alive[static_cast<std::size_t>(v)])
            fail("half-edge on a dead vertex");
    }
    // rotation must be a single cycle per vertex
    std::vector<int> degree_count(color.size(), 0), cycle_len(color.size(), -1);
    for (int h = 0; h < n; ++h)
        ++degree_count[static_cast<std::size_t>(vert[static_cast<std::size_t>(h)])];
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int h = 0; h < n; ++h) {
        if (seen[static_cast<std::size_t>(h)])
            continue;
        int v = vert[static_cast<std::size_t>(h)];
        if (cycle_len[static_cast<std::size_t>(v)] >= 0)
            fail("vertex " + std::to_string(v) + " has several rotation cycles");
        int len = 0, e = h;
        do {
            seen[static_cast<std::size_t>(e)] = 1;
            ++len;
            e = next[static_cast<std::size_t>(e)];
        } while (e != h && len <= n);
        if (e != h)
            fail("rotation is not a permutation");
        cycle_len[static_cast<std::size_t>(v)] = len;
    }
    for (int v = 0; v < vertex_count(); ++v)
        if (alive[static_cast<std::size_t>(v)] && degree_count[static_cast<std::size_t>(v)] == 0 && n > 0)
            fail("isolated live vertex " + std::to_string(v));
}

int HalfEdgeMap::euler_characteristic() const {
    return live_vertex_count() - edge_count() + static_cast<int>(faces().size());
}

}  // namespace planargen
