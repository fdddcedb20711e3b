#include "doctest.h"

#include <map>
#include <set>

#include "planargen/maps3.hpp"
#include "planargen/series.hpp"
#include "support.hpp"

using namespace planargen;

namespace {

int rootings(const BicoloredTree& t) {
    std::set<std::string> s;
    for (int h = 0; h < t.map.half_edge_count(); ++h)
        if (t.map.color[static_cast<std::size_t>(t.map.vert[static_cast<std::size_t>(h)])] == uncolored)
            s.insert(rooted_tree_code(t, h));
    return static_cast<int>(s.size());
}

EdgeVec with_root(const Core3& c) {
    EdgeVec e = c.edges;
    e.emplace_back(0, 1);
    return e;
}

void check_core(const Core3& c) {
    EdgeVec e = with_root(c);
    CHECK(is_simple(c.num_vertices, e));
    CHECK(c.num_vertices >= 4);
    if (c.num_vertices <= 9) {
        auto pr = graph_predicates(c.num_vertices, e);
        CHECK(pr.planar);
        CHECK(pr.connectivity == 3);
    } else {
        CHECK(is_planar_boost(c.num_vertices, e));
    }
}

}  // namespace

TEST_CASE("closure is injective on small trees and yields valid dissections") {
    std::set<std::vector<int>> codes;
    int trees = 0;
    for (const auto& t : enumerate_trees(3)) {
        Dissection d = closure(t);
        CHECK_NOTHROW(validate(d, true));
        CHECK(d.inner_black == t.black_nodes);
        CHECK(d.inner_white == t.white_nodes);
        CHECK(d.inner_faces == t.leaves);
        CHECK(d.map.euler_characteristic() == 2);
        codes.insert(dissection_code(d));
        ++trees;
    }
    CHECK(trees > 0);
    CHECK(codes.size() == static_cast<std::size_t>(trees));
}

TEST_CASE("admissible rooted dissections count edge-rooted 3-connected maps") {
    const auto s = expand_series(6, 12);
    // (b, leaves) -> labelled admissible rooted dissections / b!
    std::map<std::pair<int, int>, double> count;
    std::set<std::vector<int>> cores;
    for (const auto& t : enumerate_trees(6)) {
        Dissection d = closure(t);
        CHECK_NOTHROW(validate(d));
        int admissible = 0;
        for (int r : {0, 2, 4}) {
            d.root = r;
            bool a = is_admissible(d);
            CHECK(a == is_admissible_bruteforce(d));
            if (!a)
                continue;
            ++admissible;
            Core3 c = primal(d);
            check_core(c);
            CHECK(c.num_vertices == d.inner_black + 3);
            CHECK(static_cast<int>(c.edges.size()) + 1 == d.inner_faces + 2);
            CHECK(c.l_size() == d.l_size());
            CHECK(c.u_size() == d.u_size());
        }
        d.root = -1;
        // rotations of a symmetric shape identify roots: weight rootings / leaves
        count[{t.black_nodes, t.leaves}] += admissible * rootings(t) / static_cast<double>(t.leaves);
    }
    // rooted 3-connected maps = 2 * edge-rooted graphs; L gains hex[r+4], U the root face.
    // Rooted objects are rigid, so unlabelled counts are the ordinary coefficients.
    for (int l = 3; l <= 8; ++l)
        for (int b = 0; b <= l - 2; ++b) {
            INFO("b=" << b << " leaves=" << l);
            CHECK(count[{b, l}] == doctest::Approx(2 * s.G3_arrow.at(b + 1, l + 1)));
        }
    CHECK(count[{1, 4}] == doctest::Approx(1));
    CHECK(count[{3, 8}] == doctest::Approx(24));
}

TEST_CASE("sketch admissibility agrees with the closed map") {
    RandomSource rng(21);
    TreeCode code;
    ClosureSketch sk;
    BicoloredTree t;
    Dissection d;
    int agree = 0, admissible = 0;
    for (long long n : {20LL, 1000LL}) {
        Params p = test::params_for(n);
        for (int i = 0; i < 3000; ++i) {
            if (i % 2)
                sample_K_code(p, rng, code);
            else
                sample_K_prime_code(p, rng, code);
            sketch_closure(code, sk);
            expand_code(code, t);
            t.root = -1;
            closure_into(t, d);
            if (i < 300)
                CHECK_NOTHROW(validate(d, d.inner_black + d.inner_white < 12));
            for (int r : {0, 2, 4}) {
                d.root = r;
                bool full = is_admissible(d);
                agree += full == sketch_admissible(code, sk, r);
                admissible += full;
                if (d.inner_black + d.inner_white < 10)
                    CHECK(full == is_admissible_bruteforce(d));
            }
        }
    }
    CHECK(agree == 2 * 3000 * 3);
    CHECK(admissible > 0);
}

TEST_CASE("dissection samplers") {
    const auto& tab = test::table_for(1000);
    Params p = params_from(tab);
    RandomSource rng(22);
    for (int i = 0; i < 500; ++i) {
        Dissection I = sample_dissection(DissectionKind::I, p, rng);
        CHECK(I.root == -1);
        CHECK(I.l_size() == static_cast<std::uint64_t>(I.inner_black));
        Dissection J = sample_dissection(DissectionKind::J, p, rng);
        CHECK((J.root == 0 || J.root == 2 || J.root == 4));
        CHECK(J.l_size() == static_cast<std::uint64_t>(J.inner_black + 1));
        CHECK(J.u_size() == static_cast<std::uint64_t>(J.inner_faces + 1));
        Dissection Ip = sample_dissection(DissectionKind::I_prime, p, rng);
        REQUIRE(Ip.mark >= 0);
        CHECK(Ip.map.color[static_cast<std::size_t>(Ip.mark)] == black);
        Dissection Jp = sample_dissection(DissectionKind::J_prime, p, rng);
        REQUIRE(Jp.mark >= 0);
        CHECK(Jp.l_size() == static_cast<std::uint64_t>(Jp.inner_black));
        Dissection Ja = sample_dissection(DissectionKind::Ja, p, rng);
        CHECK(is_admissible(Ja));
        Dissection Jap = sample_dissection(DissectionKind::Ja_prime, p, rng);
        CHECK(is_admissible(Jap));
        CHECK(Jap.mark >= 0);
        if (i < 100)
            for (auto* d : {&I, &J, &Ip, &Jp, &Ja, &Jap})
                CHECK_NOTHROW(validate(*d));
    }
}

TEST_CASE("admissible fraction of rooted dissections") {
    const auto& tab = test::table_for(1000);
    Params p = params_from(tab);
    auto [K, dK] = tree_unrooted(tab.z, tab.w);
    // Ja = 2 ->G3 against J = 3 z w K
    double expect = 2 * p.G3 / (3 * p.z * p.w * static_cast<double>(K));
    RandomSource rng(23);
    const int n = 100000;
    int hits = 0;
    for (int i = 0; i < n; ++i)
        hits += is_admissible(sample_dissection(DissectionKind::J, p, rng));
    CHECK(test::within_sigma(hits, n, expect, 4));
}

TEST_CASE("rooted 3-connected graphs") {
    const auto& tab = test::table_for(1000);
    Params p = params_from(tab);
    const auto s = expand_series(4, 10);
    RandomSource rng(24);
    const int n = 200000;
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> size;
    test::UniformityTally five(GraphClass::three_connected, 5);
    std::uint64_t fives = 0;
    for (int i = 0; i < n; ++i) {
        Core3 c = sample_G3(G3Kind::rooted, p, rng);
        if (i < 20000 || c.num_vertices <= 7)
            check_core(c);
        ++size[{c.l_size(), c.u_size()}];
        if (c.l_size() == 2 && c.u_size() == 5)
            CHECK(is_simple(4, with_root(c)));
        if (c.num_vertices == 5) {
            ++fives;
            CHECK(five.add(test::relabel(with_root(c), test::random_permutation(5, rng))));
        }
    }
    // (2,5) : (3,7) : (3,8) as the series weights
    std::vector<std::pair<int, int>> cells = {{2, 5}, {3, 7}, {3, 8}};
    double total_w = 0, total_o = 0;
    for (auto [l, u] : cells) {
        total_w += s.G3_arrow.at(l, u) * std::pow(p.z, l) * std::pow(p.w, u);
        total_o += static_cast<double>(size[{l, u}]);
    }
    for (auto [l, u] : cells) {
        double q = s.G3_arrow.at(l, u) * std::pow(p.z, l) * std::pow(p.w, u) / total_w;
        CHECK(test::within_sigma(static_cast<double>(size[{l, u}]), total_o, q, 4));
    }
    CHECK(fives > 1000);
    CHECK(five.min_p() > 0.001);
}

TEST_CASE("derived 3-connected graphs") {
    Params p = test::params_for(1000);
    RandomSource rng(25);
    for (int i = 0; i < 5000; ++i) {
        Core3 d = sample_G3(G3Kind::derived, p, rng);
        REQUIRE(d.mark >= 2);
        CHECK(d.mark < d.num_vertices);
        CHECK(d.marked_edge == -1);
        Core3 u = sample_G3(G3Kind::u_derived, p, rng);
        CHECK(u.mark == -1);
        REQUIRE(u.marked_edge >= 0);
        CHECK(u.marked_edge < static_cast<int>(u.edges.size()));
        CHECK(u.u_size() + 1 == u.edges.size());
        if (i < 1000) {
            check_core(d);
            check_core(u);
        }
    }
}
