// 2-connected, connected and planar samplers, their derived versions,
// SamplePlanar and the size-targetted samplers.
#pragma once

#include <cstdint>
#include <optional>

#include "planargen/core.hpp"
#include "planargen/graph.hpp"
#include "planargen/params.hpp"

namespace planargen {

// Counts vertices already committed to the top-level output and throws
// SizeAbort past the cap. Vertices of a trial inside a rejection loop are
// counted only once the trial is accepted.
class SizeGuard {
public:
    explicit SizeGuard(std::uint64_t cap) : cap_(cap) {}
    void add(std::uint64_t k) {
        settled_ += k;
        if (settled_ > cap_)
            throw SizeAbort{};
    }
    std::uint64_t settled() const { return settled_; }

private:
    std::uint64_t cap_;
    std::uint64_t settled_ = 0;
};

// u: one edge distinguished; prime: one vertex; u_prime: a vertex and an
// edge; double_prime: two vertices (mark, then mark2)
enum class G2Kind { u, prime, u_prime, double_prime };
Graph sample_G2_derived(G2Kind kind, const Params& p, RandomSource& rng);

enum class G1Kind { prime, double_prime };
Graph sample_G1_derived(G1Kind kind, const Params& p, RandomSource& rng, SizeGuard* guard = nullptr);
Graph sample_G1(const Params& p, RandomSource& rng);

enum class GKind { plain, prime, double_prime };
Graph sample_G_family(GKind kind, const Params& p, RandomSource& rng, SizeGuard* guard = nullptr);

// every vertex labelled; marks take the largest labels in the order mark, mark2
LabelledGraph to_labelled(const Graph& g, RandomSource& rng);

// the two marks become labels n-1 and n of an ordinary planar graph
LabelledGraph sample_planar(const Params& p, RandomSource& rng, SizeGuard* guard = nullptr);

struct SampleTarget {
    long long n = 1;
    std::optional<double> epsilon;
    std::optional<double> mu;
};

struct RunStats {
    std::uint64_t attempts = 0;
    std::uint64_t primitive_ops = 0;
    double seconds = 0;
};

struct TargettedResult {
    LabelledGraph graph;
    RunStats stats;
};

// 100 times the expected attempt count: order n^{3/2} exact-size, n^{1/2}/eps
// with a size window, more with an edge condition
std::uint64_t default_attempt_cap(const SampleTarget& target);

// 0 selects default_attempt_cap(target)
TargettedResult targetted_sample(const SampleTarget& target, const Params& p, RandomSource& rng,
                                 std::uint64_t attempt_cap = 0);

}  // namespace planargen
