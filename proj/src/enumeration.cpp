#include "planargen/enumeration.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <set>

namespace planargen {

namespace {

using Mask = std::uint32_t;
using idx = std::size_t;

struct Small {
    int n = 0;
    std::vector<Mask> adj;
    Mask alive = 0;
};

Small make_small(int n, const EdgeVec& edges) {
    if (n > 32)
        throw ParameterError("small-graph predicates support at most 32 vertices");
    Small g;
    g.n = n;
    g.adj.assign(static_cast<idx>(n), 0);
    g.alive = n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
    for (auto [u, v] : edges) {
        if (u == v)
            continue;
        g.adj[static_cast<idx>(u)] |= Mask{1} << v;
        g.adj[static_cast<idx>(v)] |= Mask{1} << u;
    }
    return g;
}

int edge_count(const Small& g) {
    int s = 0;
    for (int v = 0; v < g.n; ++v)
        if (g.alive >> v & 1)
            s += std::popcount(g.adj[static_cast<idx>(v)] & g.alive);
    return s / 2;
}

bool connected_within(const Small& g, Mask keep) {
    if (keep == 0)
        return true;
    Mask seen = keep & (~keep + 1), frontier = seen;
    while (frontier) {
        Mask nxt = 0;
        for (Mask f = frontier; f; f &= f - 1)
            nxt |= g.adj[static_cast<idx>(std::countr_zero(f))];
        nxt &= keep & ~seen;
        seen |= nxt;
        frontier = nxt;
    }
    return seen == keep;
}

void remove_vertex(Small& g, int v) {
    for (Mask f = g.adj[static_cast<idx>(v)]; f; f &= f - 1)
        g.adj[static_cast<idx>(std::countr_zero(f))] &= ~(Mask{1} << v);
    g.adj[static_cast<idx>(v)] = 0;
    g.alive &= ~(Mask{1} << v);
}

// drop vertices of degree <= 1 and smooth vertices of degree 2
void reduce(Small& g) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.n; ++v) {
            if (!(g.alive >> v & 1))
                continue;
            Mask a = g.adj[static_cast<idx>(v)];
            int d = std::popcount(a);
            if (d <= 1) {
                remove_vertex(g, v);
                changed = true;
            } else if (d == 2) {
                int x = std::countr_zero(a);
                int y = std::countr_zero(a & (a - 1));
                remove_vertex(g, v);
                g.adj[static_cast<idx>(x)] |= Mask{1} << y;
                g.adj[static_cast<idx>(y)] |= Mask{1} << x;
                changed = true;
            }
        }
    }
}

void contract(Small& g, int u, int v) {
    Mask nv = g.adj[static_cast<idx>(v)];
    remove_vertex(g, v);
    nv &= ~(Mask{1} << u);
    for (Mask f = nv; f; f &= f - 1) {
        int w = std::countr_zero(f);
        g.adj[static_cast<idx>(w)] |= Mask{1} << u;
    }
    g.adj[static_cast<idx>(u)] |= nv;
}

bool has_kuratowski_subgraph(const Small& g) {
    std::vector<int> vs;
    for (int v = 0; v < g.n; ++v)
        if (g.alive >> v & 1)
            vs.push_back(v);
    const int k = static_cast<int>(vs.size());
    auto adj = [&](int a, int b) { return (g.adj[static_cast<idx>(a)] >> b & 1) != 0; };
    std::vector<int> pick;
    std::function<bool(int)> k5 = [&](int from) -> bool {
        if (pick.size() == 5)
            return true;
        for (int i = from; i < k; ++i) {
            bool ok = true;
            for (int p : pick)
                if (!adj(p, vs[static_cast<idx>(i)]))
                    ok = false;
            if (!ok)
                continue;
            pick.push_back(vs[static_cast<idx>(i)]);
            if (k5(i + 1))
                return true;
            pick.pop_back();
        }
        return false;
    };
    if (k5(0))
        return true;
    // K3,3: two disjoint triples with all nine cross edges
    for (Mask a = 0; a < (Mask{1} << k); ++a) {
        if (std::popcount(a) != 3)
            continue;
        Mask common = ~Mask{0};
        Mask inside = 0;
        for (Mask f = a; f; f &= f - 1) {
            int v = vs[static_cast<idx>(std::countr_zero(f))];
            common &= g.adj[static_cast<idx>(v)];
            inside |= Mask{1} << v;
        }
        common &= g.alive & ~inside;
        if (std::popcount(common) >= 3)
            return true;
    }
    return false;
}

bool nonplanar(Small g, std::set<std::vector<Mask>>& seen) {
    reduce(g);
    int n = std::popcount(g.alive);
    if (n <= 4)
        return false;
    if (edge_count(g) > 3 * n - 6)
        return true;
    {
        std::vector<Mask> key;
        key.push_back(g.alive);
        for (int v = 0; v < g.n; ++v)
            key.push_back(g.adj[static_cast<idx>(v)]);
        if (!seen.insert(key).second)
            return false;
    }
    if (has_kuratowski_subgraph(g))
        return true;
    for (int u = 0; u < g.n; ++u)
        for (Mask f = g.adj[static_cast<idx>(u)] & ~((Mask{2} << u) - 1); f; f &= f - 1) {
            Small h = g;
            contract(h, u, std::countr_zero(f));
            if (nonplanar(h, seen))
                return true;
        }
    return false;
}

constexpr int minor_search_limit = 9;

bool planar_small(const Small& g0) {
    Small g = g0;
    reduce(g);
    int n = std::popcount(g.alive);
    if (n <= 4)
        return true;
    if (edge_count(g) > 3 * n - 6)
        return false;
    if (n > minor_search_limit) {
        EdgeVec e;
        for (int u = 0; u < g.n; ++u)
            for (Mask f = g.adj[static_cast<idx>(u)] & ~((Mask{2} << u) - 1); f; f &= f - 1)
                e.emplace_back(u, std::countr_zero(f));
        return is_planar_boost(g.n, e);
    }
    std::set<std::vector<Mask>> seen;
    return !nonplanar(g, seen);
}

int connectivity_small(const Small& g) {
    const int n = g.n;
    if (n == 0 || !connected_within(g, g.alive))
        return 0;
    if (n == 1)
        return 1;
    for (int v = 0; v < n; ++v)
        if (!connected_within(g, g.alive & ~(Mask{1} << v)))
            return 1;
    if (n < 4)
        return 2;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!connected_within(g, g.alive & ~(Mask{1} << u) & ~(Mask{1} << v)))
                return 2;
    return 3;
}

bool in_class(GraphClass cls, int n, const Small& g) {
    switch (cls) {
    case GraphClass::planar:
        return planar_small(g);
    case GraphClass::connected:
        return connectivity_small(g) >= 1 && planar_small(g);
    case GraphClass::two_connected:
        return connectivity_small(g) >= 2 && planar_small(g);
    case GraphClass::three_connected:
        return connectivity_small(g) >= 3 && planar_small(g);
    case GraphClass::network: {
        // poles are vertices 0 and 1
        if (connectivity_small(g) < 1)
            return false;
        Small h = g;
        h.adj[0] |= 2;
        h.adj[1] |= 1;
        return connectivity_small(h) >= 2 && planar_small(h);
    }
    }
    (void)n;
    return false;
}

template <class F>
void for_each_edge_set(int nv, F&& f) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < nv; ++u)
        for (int v = u + 1; v < nv; ++v)
            pairs.emplace_back(u, v);
    const int np = static_cast<int>(pairs.size());
    EdgeVec e;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << np); ++s) {
        e.clear();
        for (int i = 0; i < np; ++i)
            if (s >> i & 1)
                e.push_back(pairs[static_cast<idx>(i)]);
        f(e);
    }
}

int vertex_total(GraphClass cls, int n) {
    if (n < 0 || n > 7 || (cls == GraphClass::network && n > 5))
        throw ParameterError("enumerate_class: size out of the exhaustive range");
    return cls == GraphClass::network ? n + 2 : n;
}

}  // namespace

std::uint64_t CountTable::total(int n) const {
    std::uint64_t s = 0;
    for (const auto& [k, c] : counts)
        if (k.first == n)
            s += c;
    return s;
}

CountTable enumerate_class(GraphClass cls, int n) {
    const int nv = vertex_total(cls, n);
    CountTable t;
    t.cls = cls;
    for_each_edge_set(nv, [&](const EdgeVec& e) {
        if (in_class(cls, n, make_small(nv, e)))
            ++t.counts[{n, static_cast<int>(e.size())}];
    });
    return t;
}

std::vector<EdgeVec> list_class(GraphClass cls, int n) {
    const int nv = vertex_total(cls, n);
    std::vector<EdgeVec> out;
    for_each_edge_set(nv, [&](const EdgeVec& e) {
        if (in_class(cls, n, make_small(nv, e)))
            out.push_back(e);
    });
    return out;
}

bool is_planar(int n, const EdgeVec& edges) { return planar_small(make_small(n, edges)); }

bool is_planar_boost(int n, const EdgeVec& edges) {
    using G = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    G g(static_cast<idx>(n));
    for (auto [u, v] : edges)
        if (u != v)
            boost::add_edge(static_cast<idx>(u), static_cast<idx>(v), g);
    return boost::boyer_myrvold_planarity_test(g);
}

int connectivity(int n, const EdgeVec& edges) { return connectivity_small(make_small(n, edges)); }

bool is_simple(int n, const EdgeVec& edges) {
    std::set<std::pair<int, int>> s;
    for (auto [u, v] : edges) {
        if (u == v || u < 0 || v < 0 || u >= n || v >= n)
            return false;
        if (!s.insert({std::min(u, v), std::max(u, v)}).second)
            return false;
    }
    return true;
}

Predicates graph_predicates(int n, const EdgeVec& edges) {
    if (n > 12)
        throw ParameterError("graph_predicates: at most 12 vertices");
    Small g = make_small(n, edges);
    return {planar_small(g), connectivity_small(g)};
}

double chi_square(const std::vector<std::uint64_t>& observed, const std::vector<double>& probability) {
    if (observed.size() != probability.size() || observed.size() < 2)
        throw ParameterError("chi_square: need matching cells, at least two");
    double total = 0;
    for (auto o : observed)
        total += static_cast<double>(o);
    double stat = 0;
    for (idx i = 0; i < observed.size(); ++i) {
        double e = total * probability[i];
        if (e < 5)
            throw ParameterError("chi_square: expected count below 5 in a cell");
        double d = static_cast<double>(observed[i]) - e;
        stat += d * d / e;
    }
    double df = static_cast<double>(observed.size() - 1);
    return boost::math::gamma_q(df / 2, stat / 2);
}

double chi_square_uniform(const std::vector<std::uint64_t>& observed) {
    return chi_square(observed, std::vector<double>(observed.size(), 1.0 / static_cast<double>(observed.size())));
}

// ---- trees and dissections

namespace {

// planted subtrees with k nodes whose top node has color c, as preorder codes
const std::vector<std::string>& planted(int k, int c) {
    static std::map<std::pair<int, int>, std::vector<std::string>> memo;
    auto key = std::make_pair(k, c);
    auto it = memo.find(key);
    if (it != memo.end())
        return it->second;
    std::vector<std::string> out;
    if (k == 0) {
        out.push_back("L");
    } else {
        const char ch = c == black ? 'B' : 'W';
        for (int a = 0; a < k; ++a)
            for (const auto& l : planted(a, 1 - c))
                for (const auto& r : planted(k - 1 - a, 1 - c))
                    out.push_back(ch + l + r);
    }
    return memo.emplace(key, std::move(out)).first->second;
}

BicoloredTree tree_from_code(const std::string& code) {
    BicoloredTree t;
    auto& m = t.map;
    int r = m.add_vertex(uncolored);
    int hr = m.add_half_edge(r);
    t.leaves = 1;
    std::vector<int> slots{hr};
    for (char ch : code) {
        int slot = slots.back();
        slots.pop_back();
        if (ch == 'L') {
            int v = m.add_vertex(uncolored);
            m.pair(m.add_half_edge(v), slot);
            ++t.leaves;
            continue;
        }
        int color = ch == 'B' ? black : white;
        int v = m.add_vertex(color);
        int up = m.add_half_edge(v), c1 = m.add_half_edge(v), c2 = m.add_half_edge(v);
        m.next[static_cast<idx>(up)] = c1;
        m.next[static_cast<idx>(c1)] = c2;
        m.next[static_cast<idx>(c2)] = up;
        m.pair(up, slot);
        (color == black ? t.black_nodes : t.white_nodes) += 1;
        slots.push_back(c2);
        slots.push_back(c1);
    }
    return t;
}

}  // namespace

std::string rooted_tree_code(const BicoloredTree& t, int h) {
    const auto& m = t.map;
    std::string out;
    std::vector<int> st{h};
    while (!st.empty()) {
        int e = st.back();
        st.pop_back();
        int v = m.head(e);
        int c = m.color[static_cast<idx>(v)];
        if (c == uncolored) {
            out += 'L';
            continue;
        }
        out += c == black ? 'B' : 'W';
        int in = m.opp[static_cast<idx>(e)];
        int c1 = m.next[static_cast<idx>(in)];
        int c2 = m.next[static_cast<idx>(c1)];
        st.push_back(c2);
        st.push_back(c1);
    }
    return out;
}

std::vector<BicoloredTree> enumerate_trees(int max_nodes) {
    std::vector<BicoloredTree> out;
    for (int k = 1; k <= max_nodes; ++k)
        for (int c : {black, white})
            for (const auto& code : planted(k, c)) {
                BicoloredTree t = tree_from_code(code);
                if (is_excluded_shape(t))
                    continue;
                // keep the rooting with the least code among all leaf rootings
                bool least = true;
                for (int h = 0; h < t.map.half_edge_count() && least; ++h)
                    if (t.map.color[static_cast<idx>(t.map.vert[static_cast<idx>(h)])] == uncolored &&
                        rooted_tree_code(t, h) < code)
                        least = false;
                if (!least)
                    continue;
                t.root = -1;
                out.push_back(std::move(t));
            }
    return out;
}

std::vector<int> map_code(const HalfEdgeMap& m, int h) {
    std::vector<int> id(static_cast<idx>(m.vertex_count()), -1);
    std::vector<int> entry;
    std::vector<int> out;
    int next_id = 0;
    id[static_cast<idx>(m.vert[static_cast<idx>(h)])] = next_id++;
    entry.push_back(h);
    for (idx q = 0; q < entry.size(); ++q) {
        int e0 = entry[q], e = e0;
        out.push_back(-1 - m.color[static_cast<idx>(m.vert[static_cast<idx>(e0)])]);
        do {
            int u = m.head(e);
            if (id[static_cast<idx>(u)] < 0) {
                id[static_cast<idx>(u)] = next_id++;
                entry.push_back(m.opp[static_cast<idx>(e)]);
            }
            out.push_back(id[static_cast<idx>(u)]);
            e = m.next[static_cast<idx>(e)];
        } while (e != e0);
    }
    return out;
}

std::vector<int> dissection_code(const Dissection& d) {
    std::vector<int> best;
    for (int j : {1, 3, 5}) {
        auto c = map_code(d.map, d.outer[static_cast<idx>(j)]);
        if (best.empty() || c < best)
            best = std::move(c);
    }
    return best;
}

}  // namespace planargen
