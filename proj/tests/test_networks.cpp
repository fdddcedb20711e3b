#include "doctest.h"

#include <map>

#include "planargen/networks.hpp"
#include "support.hpp"

using namespace planargen;

namespace {

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

void check_network(const Graph& g) {
    CHECK(g.poles);
    CHECK(is_simple(g.n, g.edges));
    EdgeVec e = g.edges;
    bool joined = false;
    for (auto [a, b] : e)
        joined |= (a == 0 && b == 1) || (a == 1 && b == 0);
    if (!joined)
        e.emplace_back(0, 1);
    if (g.n <= 9) {
        auto pr = graph_predicates(g.n, e);
        CHECK(pr.planar);
        CHECK(pr.connectivity >= 2);
    }
}

// poles stay, the other vertices get a uniform order; keep is moved last
EdgeVec shuffle_inner(const Graph& g, RandomSource& rng, int keep = -1) {
    int free = g.n - 2 - (keep >= 0 ? 1 : 0);
    auto perm = test::random_permutation(free, rng);
    std::vector<int> id(static_cast<std::size_t>(g.n));
    id[0] = 0;
    id[1] = 1;
    int k = 0;
    for (int v = 2; v < g.n; ++v)
        id[static_cast<std::size_t>(v)] = v == keep ? g.n - 1 : 2 + perm[static_cast<std::size_t>(k++)];
    return test::relabel(g.edges, id);
}

}  // namespace

TEST_CASE("network sampler follows the counts of networks") {
    Params p = test::params_for(1000);
    std::map<int, CountTable> counts;
    for (int n = 0; n <= 4; ++n)
        counts[n] = enumerate_class(GraphClass::network, n);
    RandomSource rng(31);
    const int total = 200000;
    std::map<std::pair<int, int>, std::uint64_t> freq;
    test::UniformityTally two(GraphClass::network, 2);
    for (int i = 0; i < total; ++i) {
        Graph g = sample_network(NetworkKind::D, p, rng);
        if (i < 20000 || g.n <= 6)
            check_network(g);
        CHECK(g.l_size() == static_cast<std::uint64_t>(g.n - 2));
        ++freq[{g.n - 2, static_cast<int>(g.edges.size())}];
        if (g.n == 4)
            CHECK(two.add(shuffle_inner(g, rng)));
    }
    int checked = 0;
    for (auto& [n, t] : counts)
        for (auto [key, c] : t.counts) {
            double prob = static_cast<double>(c) * std::pow(p.z, n) * std::pow(p.y, key.second) / factorial(n) / p.D;
            if (prob < 0.002)
                continue;
            INFO("n=" << n << " m=" << key.second);
            CHECK(test::within_sigma(static_cast<double>(freq[key]), total, prob, 5));
            ++checked;
        }
    CHECK(checked >= 4);
    CHECK(two.min_p() > 0.001);
}

TEST_CASE("derived network sampler") {
    Params p = test::params_for(1000);
    CHECK(std::abs(p.D1 - (p.S1 + p.P1 + p.H1)) < 1e-9 * p.D1);
    std::map<int, CountTable> counts;
    for (int n = 1; n <= 4; ++n)
        counts[n] = enumerate_class(GraphClass::network, n);
    RandomSource rng(32);
    const int total = 200000;
    std::map<std::pair<int, int>, std::uint64_t> freq;
    test::UniformityTally three(GraphClass::network, 3);
    for (int i = 0; i < total; ++i) {
        Graph g = sample_network_derived(DerivedNetworkKind::D, p, rng);
        REQUIRE(g.mark >= 2);
        CHECK(g.mark2 == -1);
        if (i < 20000 || g.n <= 6)
            check_network(g);
        ++freq[{static_cast<int>(g.l_size()), static_cast<int>(g.edges.size())}];
        if (g.n == 5)
            CHECK(three.add(shuffle_inner(g, rng, g.mark)));
    }
    // pointing: derived objects of L-size n are networks on n+1 inner vertices
    int checked = 0;
    for (auto& [n, t] : counts)
        for (auto [key, c] : t.counts) {
            double prob =
                static_cast<double>(c) * std::pow(p.z, n - 1) * std::pow(p.y, key.second) / factorial(n - 1) / p.D1;
            if (prob < 0.002)
                continue;
            INFO("n=" << n << " m=" << key.second);
            CHECK(test::within_sigma(static_cast<double>(freq[{n - 1, key.second}]), total, prob, 5));
            ++checked;
        }
    CHECK(checked >= 4);
    CHECK(three.min_p() > 0.001);

    for (auto k : {DerivedNetworkKind::S, DerivedNetworkKind::P, DerivedNetworkKind::H})
        for (int i = 0; i < 2000; ++i) {
            Graph g = sample_network_derived(k, p, rng);
            CHECK(g.mark >= 2);
            check_network(g);
        }
}

TEST_CASE("network classes") {
    Params p = test::params_for(1000);
    RandomSource rng(33);
    for (int i = 0; i < 5000; ++i) {
        Graph s = sample_network(NetworkKind::S, p, rng);
        check_network(s);
        // a series network has a cut vertex separating the poles
        CHECK(s.n >= 3);
        Graph h = sample_network(NetworkKind::H, p, rng);
        check_network(h);
        CHECK(h.n >= 4);
        Graph par = sample_network(NetworkKind::P, p, rng);
        check_network(par);
        int pole_edges = 0;
        for (auto [a, b] : par.edges)
            pole_edges += (a == 0 && b == 1) || (a == 1 && b == 0);
        CHECK(pole_edges <= 1);
    }
}

TEST_CASE("root edge") {
    Graph link;
    link.poles = true;
    link.n = 2;
    Graph r = add_root_edge(link);
    CHECK(r.edges.size() == 1);
    CHECK(r.root_edge == 0);
    CHECK(r.l_size() == 0);
    CHECK(r.u_size() == 0);

    Graph joined = link;
    joined.add_vertex();
    joined.add_edge(0, 2);
    joined.add_edge(2, 1);
    joined.add_edge(1, 0);
    Graph rj = add_root_edge(joined);
    CHECK(rj.edges.size() == 3);
    CHECK(rj.root_edge == 2);
    CHECK(rj.edges[2] == std::pair{0, 1});
    CHECK(rj.u_size() == 2);
}

TEST_CASE("edge-rooted 2-connected graphs") {
    Params p = test::params_for(1000);
    RandomSource rng(34);
    const int total = 200000;
    int link = 0;
    for (int i = 0; i < total; ++i) {
        Graph g = sample_G2_rooted(G2RootedKind::plain, p, rng);
        REQUIRE(g.root_edge >= 0);
        CHECK(g.u_size() + 1 == g.edges.size());
        link += g.n == 2;
        if (i < 5000 && g.n <= 8)
            CHECK(connectivity(g.n, g.edges) >= 2);
    }
    CHECK(test::within_sigma(link, total, (1 + p.y) / (1 + p.D), 4));
    for (int i = 0; i < 5000; ++i) {
        Graph g = sample_G2_rooted(G2RootedKind::derived, p, rng);
        REQUIRE(g.root_edge >= 0);
        CHECK(g.mark >= 2);
        if (g.n <= 8)
            CHECK(connectivity(g.n, g.edges) >= 2);
    }
}
