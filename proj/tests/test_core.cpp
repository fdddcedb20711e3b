#include "doctest.h"

#include <array>
#include <cmath>
#include <map>

#include "planargen/core.hpp"
#include "support.hpp"

using namespace planargen;

TEST_CASE("bern frequency") {
    RandomSource rng(1);
    int hits = 0;
    const int n = 1000000;
    for (int i = 0; i < n; ++i)
        hits += bern(0.25, rng);
    CHECK(std::abs(hits / double(n) - 0.25) < 0.002);
    CHECK_FALSE(bern(0.0, rng));
    CHECK(bern(1.0, rng));
    CHECK_THROWS_AS(bern(1.5, rng), ParameterError);
    CHECK_THROWS_AS(bern(-0.1, rng), ParameterError);
    CHECK_THROWS_AS(bern(std::nan(""), rng), ParameterError);
}

TEST_CASE("conditioned poisson") {
    RandomSource rng(2);
    const int n = 200000;
    std::map<int, int> freq;
    for (int i = 0; i < n; ++i)
        ++freq[pois_geq(1, 1.0, rng)];
    CHECK(freq.begin()->first == 1);
    CHECK(std::abs(freq[1] / double(n) - 1 / (std::exp(1.0) - 1)) < 0.003);
    CHECK(std::abs(freq[2] / double(n) - 0.5 / (std::exp(1.0) - 1)) < 0.003);

    double sum = 0;
    for (int i = 0; i < n; ++i)
        sum += pois_geq(0, 2.5, rng);
    CHECK(std::abs(sum / n - 2.5) < 0.02);

    for (int i = 0; i < 1000; ++i)
        CHECK(pois_geq(2, 0.01, rng) >= 2);
    CHECK(pois_geq(0, 0.0, rng) == 0);
    CHECK_THROWS_AS(pois_geq(1, 0.0, rng), ParameterError);
    CHECK_THROWS_AS(pois_geq(-1, 1.0, rng), ParameterError);
}

TEST_CASE("exp tail sums") {
    CHECK(exp_geq(0, 1.0) == doctest::Approx(std::exp(1.0)));
    CHECK(exp_geq(1, 1.0) == doctest::Approx(std::exp(1.0) - 1));
    CHECK(exp_geq(2, 1.0) == doctest::Approx(std::exp(1.0) - 2));
    // no cancellation at tiny lambda
    CHECK(exp_geq(2, 1e-6) == doctest::Approx(0.5e-12 + 1e-18 / 6).epsilon(1e-12));
}

TEST_CASE("reject filter") {
    RandomSource rng(3);
    std::array<int, 3> freq{};
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        int k = reject_filter([&] { return static_cast<int>(rng.below(3)); },
                              [](int v) { return v == 0 ? 1.0 : 0.5; }, rng);
        ++freq[static_cast<std::size_t>(k)];
    }
    CHECK(std::abs(freq[0] / double(n) - 0.5) < 0.01);
    CHECK(std::abs(freq[1] / double(n) - 0.25) < 0.01);
    CHECK(std::abs(freq[2] / double(n) - 0.25) < 0.01);
    CHECK_THROWS_AS(reject_filter([] { return 0; }, [](int) { return 0.0; }, rng, 100), GiveUp);
}

namespace {
struct Obj {
    int kind, l, u;
    bool discarded = false;
};
}  // namespace

TEST_CASE("l_to_u odds") {
    RandomSource rng(4);
    // equal input weight, ||.|| 1 and 4, alpha 4: output odds 1:4
    int count[2] = {0, 0};
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        Obj o = l_to_u([&] { return rng.below(2) == 0 ? Obj{0, 1, 1} : Obj{1, 1, 4}; }, 4.0, rng,
                       [](Obj& x) { return std::pair<std::uint64_t, std::uint64_t>(x.l, x.u); },
                       [](Obj& x) { x.discarded = true; });
        CHECK(o.discarded);
        ++count[o.kind];
    }
    CHECK(std::abs(count[0] / double(n) - 0.2) < 0.01);
    CHECK_THROWS_AS(l_to_u([] { return Obj{0, 1, 5}; }, 4.0, rng,
                           [](Obj& x) { return std::pair<std::uint64_t, std::uint64_t>(x.l, x.u); },
                           [](Obj&) {}),
                    InvariantViolation);
}

TEST_CASE("u_to_l odds") {
    RandomSource rng(5);
    // |.| 2 and 1 against ||.|| 1, alpha 2: odds 2:1; L-size 0 never accepted
    int count[3] = {0, 0, 0};
    const int n = 90000;
    for (int i = 0; i < n; ++i) {
        Obj o = u_to_l(
            [&] {
                switch (rng.below(3)) {
                case 0: return Obj{0, 2, 1};
                case 1: return Obj{1, 1, 1};
                default: return Obj{2, 0, 1};
                }
            },
            2.0, rng, [](Obj& x) { return std::pair<std::uint64_t, std::uint64_t>(x.l, x.u); },
            [](Obj& x) { x.discarded = true; });
        ++count[o.kind];
    }
    CHECK(count[2] == 0);
    CHECK(std::abs(count[0] / double(n) - 2.0 / 3) < 0.01);
    CHECK_THROWS_AS(u_to_l([] { return Obj{0, 3, 1}; }, 2.0, rng,
                           [](Obj& x) { return std::pair<std::uint64_t, std::uint64_t>(x.l, x.u); },
                           [](Obj&) {}),
                    InvariantViolation);
}

TEST_CASE("distribute labels") {
    RandomSource rng(6);
    std::map<std::vector<int>, int> freq;
    const int n = 60000;
    for (int i = 0; i < n; ++i) {
        auto l = distribute_labels(3, rng);
        auto s = l;
        std::sort(s.begin(), s.end());
        REQUIRE(s == std::vector<int>{1, 2, 3});
        ++freq[l];
    }
    CHECK(freq.size() == 6);
    for (auto& [perm, c] : freq)
        CHECK(std::abs(c / double(n) - 1.0 / 6) < 0.01);
    CHECK(distribute_labels(0, rng).empty());
}

TEST_CASE("pick") {
    RandomSource rng(7);
    std::array<int, 3> freq{};
    const int n = 100000;
    for (int i = 0; i < n; ++i)
        ++freq[static_cast<std::size_t>(pick({1.0, 0.0, 3.0}, rng))];
    CHECK(freq[1] == 0);
    CHECK(std::abs(freq[0] / double(n) - 0.25) < 0.01);
    CHECK_THROWS_AS(pick({0.0, 0.0}, rng), ParameterError);
}

TEST_CASE("random source replay and budget") {
    RandomSource a(42), b(42), c(43);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        auto x = a.uniform();
        CHECK(x == b.uniform());
        differs |= x != c.uniform();
    }
    CHECK(differs);
    CHECK(a.flips() == 100);

    RandomSource r(1);
    r.set_flip_cap(10);
    for (int i = 0; i < 10; ++i)
        r.uniform();
    CHECK_THROWS_AS(r.uniform(), GiveUp);
    r.reset_budget();
    CHECK_NOTHROW(r.uniform());
    CHECK(r.primitive_ops() == 12);
}
