#include <benchmark/benchmark.h>

#include <map>

#include "planargen/graphs.hpp"
#include "planargen/maps3.hpp"
#include "planargen/oracle.hpp"
#include "planargen/trees.hpp"

using namespace planargen;

namespace {

const Params& params(long long n) {
    static std::map<long long, Params> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, params_from(build_table(n, std::nullopt).second)).first;
    return it->second;
}

void BM_oracle(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(build_table(state.range(0), std::nullopt));
}
BENCHMARK(BM_oracle)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_tree(benchmark::State& state) {
    const Params& p = params(1000);
    RandomSource rng(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_K(p, rng));
}
BENCHMARK(BM_tree);

void BM_closure(benchmark::State& state) {
    const Params& p = params(1000);
    RandomSource rng(2);
    std::vector<BicoloredTree> trees;
    while (trees.size() < 256) {
        BicoloredTree t = sample_K(p, rng);
        if (t.leaves >= 20)
            trees.push_back(std::move(t));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(closure(trees[i]));
        i = (i + 1) % trees.size();
    }
}
BENCHMARK(BM_closure);

void BM_G3(benchmark::State& state) {
    const Params& p = params(1000);
    RandomSource rng(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_G3(G3Kind::rooted, p, rng));
}
BENCHMARK(BM_G3);

void BM_boltzmann_planar(benchmark::State& state) {
    const Params& p = params(1000);
    RandomSource rng(4);
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_planar(p, rng));
}
BENCHMARK(BM_boltzmann_planar);

void BM_approximate(benchmark::State& state) {
    const Params& p = params(state.range(0));
    RandomSource rng(5);
    SampleTarget t;
    t.n = state.range(0);
    t.epsilon = 0.05;
    for (auto _ : state)
        benchmark::DoNotOptimize(targetted_sample(t, p, rng));
}
BENCHMARK(BM_approximate)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_exact(benchmark::State& state) {
    const Params& p = params(state.range(0));
    RandomSource rng(6);
    SampleTarget t;
    t.n = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(targetted_sample(t, p, rng));
}
BENCHMARK(BM_exact)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
