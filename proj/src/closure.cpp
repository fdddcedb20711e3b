#include <algorithm>
#include <string>
#include <vector>

#include "planargen/maps3.hpp"

namespace planargen {

namespace {

using idx = std::size_t;

// hexagon with half-edge pairs c_j: hex[j] -> hex[j-1] and outer[j] = opp(c_j)
std::array<int, 6> add_hexagon(Dissection& d) {
    auto& m = d.map;
    std::array<int, 6> c{};
    for (int j = 0; j < 6; ++j)
        d.hex[static_cast<idx>(j)] = m.add_vertex(j % 2 == 0 ? black : white);
    for (int j = 0; j < 6; ++j) {
        c[static_cast<idx>(j)] = m.add_half_edge(d.hex[static_cast<idx>(j)]);
        d.outer[static_cast<idx>(j)] = m.add_half_edge(d.hex[static_cast<idx>((j + 5) % 6)]);
        m.pair(c[static_cast<idx>(j)], d.outer[static_cast<idx>(j)]);
    }
    return c;
}

// rotation at hex[j]: outer[j+1], then attached half-edges last-to-first, then c_j
void set_hex_rotation(Dissection& d, const std::array<int, 6>& c, int j, const std::vector<int>& attached) {
    auto& m = d.map;
    int prev = d.outer[static_cast<idx>((j + 1) % 6)];
    for (auto it = attached.rbegin(); it != attached.rend(); ++it) {
        m.next[static_cast<idx>(prev)] = *it;
        prev = *it;
    }
    m.next[static_cast<idx>(prev)] = c[static_cast<idx>(j)];
    m.next[static_cast<idx>(c[static_cast<idx>(j)])] = d.outer[static_cast<idx>((j + 1) % 6)];
}

Dissection smallest_dissection() {
    Dissection d;
    auto c = add_hexagon(d);
    int a = d.map.add_half_edge(d.hex[0]);
    int b = d.map.add_half_edge(d.hex[3]);
    d.map.pair(a, b);
    for (int j = 0; j < 6; ++j) {
        std::vector<int> att;
        if (j == 0)
            att.push_back(a);
        if (j == 3)
            att.push_back(b);
        set_hex_rotation(d, c, j, att);
    }
    d.inner_faces = 2;
    return d;
}

}  // namespace

std::uint64_t Dissection::l_size() const {
    return static_cast<std::uint64_t>(inner_black - (mark >= 0 ? 1 : 0) + (root >= 0 ? 1 : 0));
}

std::uint64_t Dissection::u_size() const {
    return static_cast<std::uint64_t>(inner_faces + (root >= 0 ? 1 : 0));
}

Dissection closure(const BicoloredTree& tree) {
    BicoloredTree copy = tree;
    return closure(std::move(copy));
}

Dissection closure(BicoloredTree&& tree) {
    Dissection d;
    closure_into(tree, d);
    return d;
}

namespace {

// Local closures along the contour: a stem followed by three sides closes a
// quadrangle and then counts as a side itself. Stems wait on a stack with
// the number of sides seen after them; a second pass over the sides that
// found the stack empty handles the wrap-around.
class Closer {
public:
    void reset() {
        stack_.clear();
        prefix_.clear();
        closed_ = 0;
    }
    void stem(int t) { stack_.push_back({t, 0}); }
    // on_close(stem, third side) for every closure this side completes
    template <class F>
    void side(int u, F& on_close) {
        side(u, on_close, true);
    }
    template <class F>
    void wrap(F& on_close) {
        for (std::size_t i = 0; i < prefix_.size(); ++i)
            side(prefix_[i], on_close, false);
    }
    // the stems left open in contour order from the start, and the free
    // sides after each; checked against the number of stems in the tree
    void finish(int stems, const char* who) {
        stems -= closed_;
        rest_.clear();
        gap_.clear();
        int deficit = 0;
        for (auto [t, c] : stack_) {
            rest_.push_back(t);
            gap_.push_back(c);
            deficit += 2 - c;
        }
        if (static_cast<int>(rest_.size()) != stems || deficit != 6)
            throw InvariantViolation(std::string(who) + ": partial closure leaves " + std::to_string(rest_.size()) +
                                     " stems with deficit " + std::to_string(deficit));
    }
    // hexagon indices for the open stems, from the first one that opens a
    // new hexagon vertex
    template <class IsBlack, class F>
    void assign(IsBlack is_black, F&& to_hex) const {
        const int k = static_cast<int>(rest_.size());
        int i0 = 0;
        while (gap_[static_cast<idx>((i0 + k - 1) % k)] == 2)
            ++i0;
        int t = is_black(rest_[static_cast<idx>(i0)]) ? 1 : 0;
        for (int q = 0; q < k; ++q) {
            int i = (i0 + q) % k;
            to_hex(rest_[static_cast<idx>(i)], t);
            t = (t + 2 - gap_[static_cast<idx>(i)]) % 6;
        }
    }

private:
    template <class F>
    void side(int u, F& on_close, bool first_pass) {
        while (!stack_.empty()) {
            auto& top = stack_.back();
            if (++top.second < 3)
                return;
            int st = top.first;
            stack_.pop_back();
            ++closed_;
            on_close(st, u);
            u = st;
        }
        if (!first_pass)
            throw InvariantViolation("closure: no stem left open");
        prefix_.push_back(u);
    }

    std::vector<std::pair<int, int>> stack_;
    std::vector<int> prefix_, rest_, gap_;
    int closed_ = 0;
};

Closer& closer() {
    thread_local Closer c;
    return c;
}

}  // namespace

void closure_into(BicoloredTree& tree, Dissection& d) {
    if (tree.nodes() == 0) {
        d = smallest_dissection();
        return;
    }
    d.map.swap(tree.map);
    d.root = -1;
    d.mark = tree.mark;
    d.inner_black = tree.black_nodes;
    d.inner_white = tree.white_nodes;
    d.inner_faces = tree.leaves;
    auto& m = d.map;
    const int nh = m.half_edge_count();
    auto is_node = [&](int v) { return m.color[static_cast<idx>(v)] != uncolored; };

    // tokens: node-origin half-edges in contour order; stems point to leaves
    thread_local std::vector<int> order;
    thread_local std::vector<char> stem;
    order.clear();
    stem.assign(static_cast<idx>(nh), 0);
    int start = -1;
    for (int h = 0; h < nh && start < 0; ++h)
        if (is_node(m.vert[static_cast<idx>(h)]))
            start = h;
    {
        int h = start;
        do {
            order.push_back(h);
            stem[static_cast<idx>(h)] = !is_node(m.head(h));
            h = stem[static_cast<idx>(h)] ? m.next[static_cast<idx>(h)] : m.face_next(h);
        } while (h != start);
    }
    if (static_cast<int>(order.size()) != 3 * (d.inner_black + d.inner_white))
        throw InvariantViolation("closure: contour does not visit every node corner");

    auto on_close = [&](int st, int e3) {
        int hp = m.opp[static_cast<idx>(st)];
        int o3 = m.opp[static_cast<idx>(e3)];
        m.alive[static_cast<idx>(m.vert[static_cast<idx>(hp)])] = 0;
        m.next[static_cast<idx>(hp)] = m.next[static_cast<idx>(o3)];
        m.next[static_cast<idx>(o3)] = hp;
        m.vert[static_cast<idx>(hp)] = m.vert[static_cast<idx>(o3)];
    };
    Closer& c = closer();
    c.reset();
    for (int h : order) {
        if (stem[static_cast<idx>(h)])
            c.stem(h);
        else
            c.side(h, on_close);
    }
    c.wrap(on_close);
    c.finish(d.inner_faces, "closure");

    // hexagon completion
    auto hc = add_hexagon(d);
    std::array<std::vector<int>, 6> attached;
    c.assign([&](int h) { return m.color[static_cast<idx>(m.vert[static_cast<idx>(h)])] == black; },
             [&](int h, int t) {
                 int hp = m.opp[static_cast<idx>(h)];
                 m.alive[static_cast<idx>(m.vert[static_cast<idx>(hp)])] = 0;
                 m.vert[static_cast<idx>(hp)] = d.hex[static_cast<idx>(t)];
                 attached[static_cast<idx>(t)].push_back(hp);
             });
    for (int j = 0; j < 6; ++j)
        set_hex_rotation(d, hc, j, attached[static_cast<idx>(j)]);
}

void sketch_closure(const TreeCode& code, ClosureSketch& s) {
    const int n = code.nodes();
    if (n == 0)
        throw ParameterError("sketch_closure: tree without nodes");
    s.hexes.assign(static_cast<idx>(n), 0);
    s.links.clear();
    s.target.resize(static_cast<idx>(3 * n));
    const auto* node = code.node.data();
    // token 3j leaves node j towards its parent, 3j+1+k towards kid k
    auto head = [&](int h) {
        int j = h / 3, r = h % 3;
        return r == 0 ? (node[j].up < 0 ? -1 : node[j].up / 2) : node[j].kid[r - 1];
    };
    auto on_close = [&](int st, int e3) {
        int h = head(e3);
        int t = h < 0 ? s.target[static_cast<idx>(e3)] : h;
        s.target[static_cast<idx>(st)] = t;
        s.links.emplace_back(st / 3, t);
    };
    Closer& c = closer();
    c.reset();
    int h = 0, size = 0;
    do {
        int j = h / 3, r = h % 3, nb = head(h);
        if (nb < 0) {
            c.stem(h);
            h = r == 2 ? h - 2 : h + 1;
        } else {
            c.side(h, on_close);
            h = r > 0 ? 3 * nb + 1 : (node[j].up % 2 == 0 ? 3 * nb + 2 : 3 * nb);
        }
        ++size;
    } while (h != 0);
    if (size != 3 * n)
        throw InvariantViolation("sketch_closure: contour does not visit every node corner");
    c.wrap(on_close);
    c.finish(code.leaves(), "sketch_closure");
    c.assign([&](int t) { return node[t / 3].color == black; },
             [&](int t, int j) { s.hexes[static_cast<idx>(t / 3)] |= static_cast<unsigned char>(1u << j); });
}

bool sketch_admissible(const TreeCode& code, const ClosureSketch& s, int r) {
    // paths src a b dst other than the two halves of the hexagon
    const unsigned src = 1u << r, dst = 1u << ((r + 3) % 6);
    const unsigned near_src = (1u << ((r + 1) % 6)) | (1u << ((r + 5) % 6));
    const unsigned near_dst = (1u << ((r + 2) % 6)) | (1u << ((r + 4) % 6));
    auto joins = [&](int u, int v) {
        unsigned a = s.hexes[static_cast<idx>(u)], b = s.hexes[static_cast<idx>(v)];
        return ((a & src) && (b & dst)) || ((b & src) && (a & dst));
    };
    const int n = code.nodes();
    for (int j = 0; j < n; ++j) {
        unsigned m = s.hexes[static_cast<idx>(j)];
        if (((m & dst) && (m & near_src)) || ((m & src) && (m & near_dst)))
            return false;
        int up = code.node[static_cast<idx>(j)].up;
        if (up >= 0 && joins(up / 2, j))
            return false;
    }
    for (auto [u, v] : s.links)
        if (joins(u, v))
            return false;
    return true;
}

void validate(const Dissection& d, bool check_irreducible) {
    const auto& m = d.map;
    auto fail = [](const std::string& w) { throw InvariantViolation("dissection: " + w); };
    m.check_structure();
    int live = m.live_vertex_count();
    if (live != d.inner_black + d.inner_white + 6)
        fail("vertex count");
    auto faces = m.faces();
    if (live - m.edge_count() + static_cast<int>(faces.size()) != 2)
        fail("Euler relation fails");
    int outer_seen = 0, inner = 0;
    for (const auto& f : faces) {
        bool outer = false;
        for (int h : f)
            if (h == d.outer[1])
                outer = true;
        if (outer) {
            ++outer_seen;
            if (f.size() != 6)
                fail("outer face of degree " + std::to_string(f.size()));
            auto at = std::find(f.begin(), f.end(), d.outer[1]) - f.begin();
            for (int j = 0; j < 6; ++j)
                if (f[static_cast<idx>((at + j) % 6)] != d.outer[static_cast<idx>((j + 1) % 6)])
                    fail("outer face is not the hexagon");
        } else {
            ++inner;
            if (f.size() != 4)
                fail("inner face of degree " + std::to_string(f.size()));
        }
    }
    if (outer_seen != 1 || inner != d.inner_faces)
        fail("inner face count");
    for (int h = 0; h < m.half_edge_count(); ++h)
        if (m.color[static_cast<idx>(m.vert[static_cast<idx>(h)])] == m.color[static_cast<idx>(m.head(h))])
            fail("edge with both ends of one color");
    for (int v = 0; v < m.vertex_count(); ++v)
        if (m.alive[static_cast<idx>(v)] && m.color[static_cast<idx>(v)] == uncolored)
            fail("uncolored live vertex");
    if (d.mark >= 0 && (!m.alive[static_cast<idx>(d.mark)] || m.color[static_cast<idx>(d.mark)] != black))
        fail("mark is not a live black vertex");
    // simple graph
    std::vector<std::vector<int>> adj(static_cast<idx>(m.vertex_count()));
    for (int h = 0; h < m.half_edge_count(); ++h)
        adj[static_cast<idx>(m.vert[static_cast<idx>(h)])].push_back(m.head(h));
    for (auto& a : adj) {
        std::vector<int> s = a;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            fail("multiple edge");
    }
    if (!check_irreducible)
        return;
    // each 4-cycle must be the contour of an inner face
    std::vector<std::array<int, 4>> quads;
    for (const auto& f : faces)
        if (f.size() == 4) {
            std::array<int, 4> q{};
            for (int j = 0; j < 4; ++j)
                q[static_cast<idx>(j)] = m.vert[static_cast<idx>(f[static_cast<idx>(j)])];
            std::sort(q.begin(), q.end());
            quads.push_back(q);
        }
    std::sort(quads.begin(), quads.end());
    const int nv = m.vertex_count();
    std::vector<std::vector<char>> is_adj(static_cast<idx>(nv), std::vector<char>(static_cast<idx>(nv), 0));
    for (int h = 0; h < m.half_edge_count(); ++h)
        is_adj[static_cast<idx>(m.vert[static_cast<idx>(h)])][static_cast<idx>(m.head(h))] = 1;
    for (int a = 0; a < nv; ++a)
        for (int b : adj[static_cast<idx>(a)])
            for (int c2 : adj[static_cast<idx>(b)]) {
                if (c2 == a)
                    continue;
                for (int e : adj[static_cast<idx>(c2)]) {
                    if (e == b || e == a || !is_adj[static_cast<idx>(e)][static_cast<idx>(a)])
                        continue;
                    std::array<int, 4> q{a, b, c2, e};
                    std::sort(q.begin(), q.end());
                    if (!std::binary_search(quads.begin(), quads.end(), q))
                        fail("separating 4-cycle");
                }
            }
}

namespace {

struct Rooting {
    int src, dst;
    std::vector<int> hex_index, corner;
};

Rooting rooting(const Dissection& d) {
    if (d.root < 0)
        throw ParameterError("is_admissible: dissection is not rooted");
    Rooting r;
    r.src = d.hex[static_cast<idx>(d.root)];
    r.dst = d.hex[static_cast<idx>((d.root + 3) % 6)];
    r.hex_index.assign(static_cast<idx>(d.map.vertex_count()), -1);
    for (int j = 0; j < 6; ++j)
        r.hex_index[static_cast<idx>(d.hex[static_cast<idx>(j)])] = j;
    r.corner = d.map.corner_of_vertices();
    return r;
}

bool outer_edge(const Rooting& r, int u, int v) {
    int a = r.hex_index[static_cast<idx>(u)], b = r.hex_index[static_cast<idx>(v)];
    return a >= 0 && b >= 0 && ((a - b + 6) % 6 == 1 || (b - a + 6) % 6 == 1);
}

template <class F>
void for_neighbours(const HalfEdgeMap& m, const Rooting& r, int v, F&& f) {
    int h0 = r.corner[static_cast<idx>(v)], h = h0;
    do {
        f(m.head(h));
        h = m.next[static_cast<idx>(h)];
    } while (h != h0);
}

}  // namespace

bool is_admissible(const Dissection& d) {
    const auto& m = d.map;
    if (d.root < 0)
        throw ParameterError("is_admissible: dissection is not rooted");
    const int src = d.hex[static_cast<idx>(d.root)], dst = d.hex[static_cast<idx>((d.root + 3) % 6)];
    auto hex_of = [&](int v) {
        for (int j = 0; j < 6; ++j)
            if (d.hex[static_cast<idx>(j)] == v)
                return j;
        return -1;
    };
    auto outer = [&](int u, int v) {
        int a = hex_of(u), b = hex_of(v);
        return a >= 0 && b >= 0 && ((a - b + 6) % 6 == 1 || (b - a + 6) % 6 == 1);
    };
    // outer[j+1] leaves hex[j]
    auto corner = [&](int j) { return d.outer[static_cast<idx>((j + 1) % 6)]; };
    thread_local std::vector<char> near_dst;
    if (near_dst.size() < static_cast<idx>(m.vertex_count()))
        near_dst.resize(static_cast<idx>(m.vertex_count()), 0);
    auto mark_dst = [&](char value) {
        int h0 = corner((d.root + 3) % 6), h = h0;
        do {
            near_dst[static_cast<idx>(m.head(h))] = value;
            h = m.next[static_cast<idx>(h)];
        } while (h != h0);
    };
    mark_dst(1);
    bool ok = true;
    int h0 = corner(d.root), h = h0;
    do {
        int a = m.head(h);
        if (a != dst) {
            // around a, starting from the half-edge back to src
            int g0 = m.opp[static_cast<idx>(h)], g = g0;
            do {
                int b = m.head(g);
                if (b != src && near_dst[static_cast<idx>(b)] && !(outer(src, a) && outer(a, b) && outer(b, dst)))
                    ok = false;
                g = m.next[static_cast<idx>(g)];
            } while (ok && g != g0);
        }
        h = m.next[static_cast<idx>(h)];
    } while (ok && h != h0);
    mark_dst(0);
    return ok;
}

bool is_admissible_bruteforce(const Dissection& d) {
    const auto& m = d.map;
    Rooting r = rooting(d);
    const int nh = m.half_edge_count();
    for (int h1 = 0; h1 < nh; ++h1) {
        if (m.vert[static_cast<idx>(h1)] != r.src)
            continue;
        for (int h2 = 0; h2 < nh; ++h2) {
            if (m.vert[static_cast<idx>(h2)] != m.head(h1))
                continue;
            for (int h3 = 0; h3 < nh; ++h3) {
                if (m.vert[static_cast<idx>(h3)] != m.head(h2) || m.head(h3) != r.dst)
                    continue;
                int a = m.head(h1), b = m.head(h2);
                if (a == r.dst || b == r.src || a == b)
                    continue;
                bool all_outer = outer_edge(r, r.src, a) && outer_edge(r, a, b) && outer_edge(r, b, r.dst);
                if (!all_outer)
                    return false;
            }
        }
    }
    return true;
}

}  // namespace planargen
