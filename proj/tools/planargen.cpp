// planargen: oracle tables, uniform random planar graphs, corpus statistics.
//
//   planargen oracle --n 1000 [--mu 2.2] [--digits 30] [--oracle-file t.txt]
//   planargen sample --n 1000 --epsilon 0.05 [--mu 2.5] [--count 3] [--seed 7]
//   planargen stats  --n 10000 --epsilon 0.05 --count 80 --edge-ratio
//
// Exit status: 0 success, 1 usage, 2 oracle failure, 3 sampler give-up.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "planargen/graph_io.hpp"
#include "planargen/graphs.hpp"
#include "planargen/oracle.hpp"
#include "planargen/params.hpp"

using namespace planargen;

namespace {

enum class Command { oracle, sample, stats };
enum class Format { edge_list, dot };

struct RunConfig {
    Command command = Command::sample;
    long long n = 0;
    std::optional<double> epsilon;
    std::optional<double> mu;
    bool exact = false;
    int count = 1;
    std::uint64_t seed = 0;
    int digits = default_digits;
    std::string oracle_file;
    Format format = Format::edge_list;
    int jobs = 1;
    std::uint64_t attempt_cap = 0;
    bool degree_histogram = false;
    bool edge_ratio = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Outcome {
    TargettedResult result;
    std::string error;
};

std::pair<TuningResult, OracleTable> load_or_build(const RunConfig& cfg) {
    if (!cfg.oracle_file.empty() && std::filesystem::exists(cfg.oracle_file)) {
        auto loaded = read_table(cfg.oracle_file);
        const auto& t = loaded.first;
        bool same_mu = t.mu.has_value() == cfg.mu.has_value() && (!t.mu || *t.mu == *cfg.mu);
        if (t.n != cfg.n || !same_mu)
            throw CorruptTable("oracle file " + cfg.oracle_file + " was built for different --n/--mu");
        return loaded;
    }
    auto built = build_table(cfg.n, cfg.mu, cfg.digits);
    if (!cfg.oracle_file.empty())
        write_table(cfg.oracle_file, built.first, built.second);
    return built;
}

// graph i uses seed + i whatever the number of jobs
std::vector<Outcome> run_batch(const RunConfig& cfg, const Params& p) {
    std::vector<Outcome> out(static_cast<std::size_t>(cfg.count));
    SampleTarget target;
    target.n = cfg.n;
    target.epsilon = cfg.epsilon;
    target.mu = cfg.mu;
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < cfg.count; i = next++) {
            auto& o = out[static_cast<std::size_t>(i)];
            RandomSource rng(cfg.seed + static_cast<std::uint64_t>(i));
            try {
                o.result = targetted_sample(target, p, rng, cfg.attempt_cap);
            } catch (const GiveUp& e) {
                o.error = e.what();
            }
        }
    };
    int jobs = std::clamp(cfg.jobs, 1, cfg.count);
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    for (int i = 0; i < cfg.count; ++i)
        if (!out[static_cast<std::size_t>(i)].error.empty())
            throw GiveUp("graph " + std::to_string(i) + " (seed " + std::to_string(cfg.seed + static_cast<std::uint64_t>(i)) +
                         "): " + out[static_cast<std::size_t>(i)].error);
    return out;
}

int cmd_oracle(const RunConfig& cfg) {
    auto [tuning, table] = load_or_build(cfg);
    std::cout << format_table(tuning, table);
    return 0;
}

int cmd_sample(const RunConfig& cfg) {
    auto [tuning, table] = load_or_build(cfg);
    Params p = params_from(table);
    auto batch = run_batch(cfg, p);
    for (int i = 0; i < cfg.count; ++i) {
        const auto& r = batch[static_cast<std::size_t>(i)].result;
        std::vector<std::string> comments = {"attempts " + std::to_string(r.stats.attempts),
                                             "primitive_ops " + std::to_string(r.stats.primitive_ops)};
        std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(i);
        if (cfg.format == Format::dot)
            write_dot(std::cout, r.graph, seed, comments);
        else
            write_edge_list(std::cout, r.graph, seed, comments);
        std::cerr << "graph " << i << ": " << r.graph.n << " vertices, " << r.graph.edges.size() << " edges, "
                  << r.stats.attempts << " attempts, " << r.stats.seconds << " s\n";
    }
    return 0;
}

int cmd_stats(const RunConfig& cfg) {
    auto [tuning, table] = load_or_build(cfg);
    Params p = params_from(table);
    auto batch = run_batch(cfg, p);
    bool ratio = cfg.edge_ratio || !cfg.degree_histogram;
    if (ratio) {
        double sum = 0, sq = 0;
        std::cout << "index\tvertices\tedges\tratio\n";
        for (int i = 0; i < cfg.count; ++i) {
            const auto& g = batch[static_cast<std::size_t>(i)].result.graph;
            double r = static_cast<double>(g.edges.size()) / g.n;
            sum += r;
            sq += r * r;
            std::printf("%d\t%d\t%zu\t%.6f\n", i, g.n, g.edges.size(), r);
        }
        double mean = sum / cfg.count;
        double sd = cfg.count > 1 ? std::sqrt(std::max(0.0, (sq - cfg.count * mean * mean) / (cfg.count - 1))) : 0;
        std::printf("# ratio mean %.6f sd %.6f\n", mean, sd);
    }
    if (cfg.degree_histogram) {
        std::map<int, std::uint64_t> hist;
        std::uint64_t total = 0;
        for (const auto& o : batch) {
            for (int d : degree_sequence(o.result.graph))
                ++hist[d];
            total += static_cast<std::uint64_t>(o.result.graph.n);
        }
        std::cout << "degree\tproportion\n";
        for (auto [d, c] : hist)
            std::printf("%d\t%.6f\n", d, static_cast<double>(c) / static_cast<double>(total));
    }
    std::cout.flush();
    return 0;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool sampling) {
    sub->add_option("--n", cfg.n, "target number of vertices")->required()->check(CLI::PositiveNumber);
    sub->add_option("--mu", cfg.mu, "target edge/vertex ratio in (1,3)");
    sub->add_option("--digits", cfg.digits, "oracle precision in decimal digits")->check(CLI::Range(6, max_digits));
    sub->add_option("--oracle-file", cfg.oracle_file, "read the table from this file, or write it there");
    if (!sampling)
        return;
    auto eps = sub->add_option("--epsilon", cfg.epsilon, "accept sizes in [n(1-eps), n(1+eps)]");
    sub->add_flag("--exact", cfg.exact, "exact size n (the default without --epsilon)")->excludes(eps);
    sub->add_option("--count", cfg.count, "number of graphs")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "seed of the first graph; graph i uses seed + i");
    sub->add_option("--jobs", cfg.jobs, "parallel generations")->check(CLI::PositiveNumber);
    sub->add_option("--attempt-cap", cfg.attempt_cap, "give up after this many attempts per graph");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Uniform random labelled planar graphs"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* oracle = app.add_subcommand("oracle", "build an oracle table and print it");
    add_common(oracle, cfg, false);
    auto* sample = app.add_subcommand("sample", "emit uniform random planar graphs");
    add_common(sample, cfg, true);
    std::map<std::string, Format> formats{{"edge-list", Format::edge_list}, {"dot", Format::dot}};
    sample->add_option("--format", cfg.format, "edge-list or dot")->transform(CLI::CheckedTransformer(formats));
    auto* stats = app.add_subcommand("stats", "edge/vertex ratios and degree histogram as plot data");
    add_common(stats, cfg, true);
    stats->add_flag("--edge-ratio", cfg.edge_ratio, "per-graph edge/vertex ratio (default)");
    stats->add_flag("--degree-histogram", cfg.degree_histogram, "pooled proportion of vertices of each degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (cfg.mu && !(*cfg.mu > 1 && *cfg.mu < 3))
            throw UsageError("--mu must lie in (1,3)");
        if (cfg.epsilon && !(*cfg.epsilon > 0 && *cfg.epsilon < 1))
            throw UsageError("--epsilon must lie in (0,1)");
        if (oracle->parsed())
            return cmd_oracle(cfg);
        if (sample->parsed())
            return cmd_sample(cfg);
        return cmd_stats(cfg);
    } catch (const UsageError& e) {
        std::cerr << "planargen: " << e.what() << '\n';
        return 1;
    } catch (const ParameterError& e) {
        std::cerr << "planargen: " << e.what() << '\n';
        return 1;
    } catch (const GiveUp& e) {
        std::cerr << "planargen: sampler gave up: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "planargen: oracle failure: " << e.what() << '\n';
        return 2;
    }
}
