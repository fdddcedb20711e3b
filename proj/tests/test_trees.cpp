#include "doctest.h"

#include <map>
#include <set>
#include <string>

#include "planargen/trees.hpp"
#include "planargen/series.hpp"
#include "support.hpp"

using namespace planargen;

namespace {

std::vector<int> leaf_half_edges(const BicoloredTree& t) {
    std::vector<int> out;
    for (int h = 0; h < t.map.half_edge_count(); ++h)
        if (t.map.color[static_cast<std::size_t>(t.map.vert[static_cast<std::size_t>(h)])] == uncolored)
            out.push_back(h);
    return out;
}

std::set<std::string> rooted_codes(const BicoloredTree& t) {
    std::set<std::string> s;
    for (int h : leaf_half_edges(t))
        s.insert(rooted_tree_code(t, h));
    return s;
}

std::string unrooted_code(const BicoloredTree& t) { return *rooted_codes(t).begin(); }

struct Shapes {
    // unrooted shape code -> number of distinct rootings, by (black, leaves)
    std::map<std::pair<int, int>, std::map<std::string, int>> unrooted;
    std::map<std::pair<int, int>, std::set<std::string>> rooted;
};

const Shapes& shapes() {
    static Shapes s = [] {
        Shapes out;
        for (const auto& t : enumerate_trees(5)) {
            auto key = std::make_pair(t.black_nodes, t.leaves);
            auto codes = rooted_codes(t);
            out.unrooted[key][*codes.begin()] = static_cast<int>(codes.size());
            out.rooted[key].insert(codes.begin(), codes.end());
        }
        return out;
    }();
    return s;
}

void check_sample(const BicoloredTree& t) {
    CHECK_NOTHROW(check_tree(t));
    CHECK_FALSE(is_excluded_shape(t));
    CHECK(t.leaves == t.nodes() + 2);
    // every node-node edge has one black end, so 3b = (leaves - 3) + (leaves at black nodes)
    CHECK(3 * t.black_nodes <= 2 * t.leaves - 3);
}

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("enumerated trees") {
    std::set<std::string> seen;
    for (const auto& t : enumerate_trees(5)) {
        check_sample(t);
        CHECK(seen.insert(unrooted_code(t)).second);
    }
    // rooted shapes agree with the rooted series: egf count = b! * shapes
    auto s = expand_series(4, 8);
    for (int b = 0; b <= 3; ++b)
        for (int l = 3; l <= 7; ++l) {
            auto it = shapes().rooted.find({b, l});
            double n = it == shapes().rooted.end() ? 0.0 : static_cast<double>(it->second.size());
            INFO("b=" << b << " leaves=" << l);
            CHECK(s.K_under.egf(b, l - 1) == doctest::Approx(factorial(b) * n));
        }
}

TEST_CASE("rooted sampler structure and uniformity") {
    Params p = test::params_for(1000);
    RandomSource rng(11);
    std::map<std::string, std::uint64_t> small, mid;
    for (int i = 0; i < 200000; ++i) {
        BicoloredTree t = sample_uK(p, rng);
        if (i < 10000)
            check_sample(t);
        REQUIRE(t.root >= 0);
        if (t.black_nodes == 1 && t.leaves == 4)
            ++small[rooted_tree_code(t, t.root)];
        if (t.black_nodes == 2 && t.leaves == 5)
            ++mid[rooted_tree_code(t, t.root)];
    }
    for (auto [sz, freq] : {std::pair{std::pair{1, 4}, &small}, std::pair{std::pair{2, 5}, &mid}}) {
        const auto& expect = shapes().rooted.at(sz);
        CHECK(freq->size() == expect.size());
        std::vector<std::uint64_t> obs;
        for (const auto& c : expect)
            obs.push_back((*freq)[c]);
        CHECK(chi_square_uniform(obs) > 0.001);
    }
}

TEST_CASE("early abort completes with probability 2/(N+2)") {
    Params p = test::params_for(1000);
    RandomSource rng(12);
    TreeCode code;
    const int n = 1000000;
    double plain = 0, kept = 0;
    for (int i = 0; i < n; ++i) {
        grow_code(p, rng, code, false);
        plain += code.nodes() == 4;
        if (grow_code(p, rng, code, true))
            kept += code.nodes() == 4;
    }
    REQUIRE(plain > 5000);
    CHECK(std::abs(kept / plain / (2.0 / 6.0) - 1) < 0.03);
}

TEST_CASE("unrooted sampler follows the Boltzmann law of K") {
    const auto& tab = test::table_for(1000);
    Params p = params_from(tab);
    auto [K, dK] = tree_unrooted(tab.z, tab.w);
    RandomSource rng(13);
    const int n = 200000;
    std::map<std::pair<int, int>, std::map<std::string, std::uint64_t>> freq;
    for (int i = 0; i < n; ++i) {
        BicoloredTree t = sample_K(p, rng);
        if (i < 10000) {
            check_sample(t);
            CHECK(t.root < 0);
        }
        if (t.nodes() <= 5)
            ++freq[{t.black_nodes, t.leaves}][unrooted_code(t)];
    }
    int checked = 0;
    for (const auto& [sz, shapes_here] : shapes().unrooted) {
        auto [b, l] = sz;
        double weight = 0;
        for (const auto& [code, rootings] : shapes_here)
            weight += rootings;
        // b!/|Aut| labellings per shape, |Aut| = leaves / rootings
        double prob = weight / l * std::pow(p.z, b) * std::pow(p.w, l) / static_cast<double>(K);
        std::uint64_t hits = 0;
        std::vector<std::uint64_t> obs;
        std::vector<double> expect;
        for (const auto& [code, rootings] : shapes_here) {
            auto c = freq[sz][code];
            hits += c;
            obs.push_back(c);
            expect.push_back(rootings / weight);
        }
        CHECK(freq[sz].size() <= shapes_here.size());
        if (prob < 0.005)
            continue;
        INFO("b=" << b << " leaves=" << l);
        CHECK(test::within_sigma(static_cast<double>(hits), n, prob, 5));
        if (obs.size() >= 2 && hits / static_cast<double>(obs.size()) >= 20)
            CHECK(chi_square(obs, expect) > 0.001);
        ++checked;
    }
    CHECK(checked >= 3);
}

TEST_CASE("derived sampler") {
    const auto& tab = test::table_for(1000);
    Params p = params_from(tab);
    auto [K, dK] = tree_unrooted(tab.z, tab.w);
    // acceptance b/(2/3 leaves) never exceeds 1
    for (const auto& t : enumerate_trees(5))
        CHECK(3 * t.black_nodes <= 2 * t.leaves);

    RandomSource rng(14);
    const int n = 200000;
    std::map<std::pair<int, int>, std::uint64_t> size;
    for (int i = 0; i < n; ++i) {
        BicoloredTree t = sample_K_prime(p, rng);
        if (i < 10000) {
            check_sample(t);
            REQUIRE(t.mark >= 0);
            CHECK(t.map.color[static_cast<std::size_t>(t.mark)] == black);
            CHECK(t.l_size() == static_cast<std::uint64_t>(t.black_nodes - 1));
        }
        ++size[{t.black_nodes, t.leaves}];
    }
    // pointing: b k_{b,l} z^{b-1} w^l / b! over dK/dz
    int checked = 0;
    for (const auto& [sz, shapes_here] : shapes().unrooted) {
        auto [b, l] = sz;
        if (b == 0)
            continue;
        double weight = 0;
        for (const auto& [code, rootings] : shapes_here)
            weight += rootings;
        double prob = b * weight / l * std::pow(p.z, b - 1) * std::pow(p.w, l) / static_cast<double>(dK);
        if (prob < 0.005)
            continue;
        INFO("b=" << b << " leaves=" << l);
        CHECK(test::within_sigma(static_cast<double>(size[sz]), n, prob, 5));
        ++checked;
    }
    CHECK(checked >= 3);
}

TEST_CASE("tree code expansion") {
    Params p = test::params_for(1000);
    RandomSource rng(15);
    TreeCode code;
    BicoloredTree t;
    for (int i = 0; i < 2000; ++i) {
        sample_K_prime_code(p, rng, code);
        expand_code(code, t);
        CHECK_NOTHROW(check_tree(t));
        CHECK(t.black_nodes == code.black_nodes);
        CHECK(t.white_nodes == code.white_nodes);
        CHECK(t.leaves == code.leaves());
        CHECK(t.mark >= 0);
    }
    CHECK(is_excluded_shape(two_leaf_tree()));
}
