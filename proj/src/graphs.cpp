#include "planargen/graphs.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "planargen/networks.hpp"

namespace planargen {

namespace {

using idx = std::size_t;

// copies src into dst; src vertex a goes to existing vertex b for each (a, b)
// in fixed, every other vertex is new
// the returned map is scratch space, valid until the next call
const std::vector<int>& merge(Graph& dst, const Graph& src, std::initializer_list<std::pair<int, int>> fixed) {
    thread_local std::vector<int> id;
    id.assign(static_cast<idx>(src.n), -1);
    for (auto [a, b] : fixed)
        id[static_cast<idx>(a)] = b;
    for (auto& v : id)
        if (v < 0)
            v = dst.add_vertex();
    for (auto [a, b] : src.edges)
        dst.add_edge(id[static_cast<idx>(a)], id[static_cast<idx>(b)]);
    return id;
}

void count(SizeGuard* guard, std::uint64_t k) {
    if (guard)
        guard->add(k);
}

std::vector<int>& hang_queue() {
    thread_local std::vector<int> q;
    return q;
}

// hangs an independent G1' at every vertex of hang_queue() and at every vertex it creates
void hang_G1_prime(Graph& g, const Params& p, RandomSource& rng, SizeGuard* guard) {
    auto& queue = hang_queue();
    for (idx head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        int k = pois_geq(0, p.G2_prime, rng);
        for (int i = 0; i < k; ++i) {
            Graph b = sample_G2_derived(G2Kind::prime, p, rng);
            count(guard, static_cast<std::uint64_t>(b.n - 1));
            const auto& id = merge(g, b, {{b.mark, v}});
            for (int a = 0; a < b.n; ++a)
                if (a != b.mark)
                    queue.push_back(id[static_cast<idx>(a)]);
        }
    }
}

Graph one_marked_vertex(SizeGuard* guard) {
    Graph g;
    g.mark = g.add_vertex();
    count(guard, 1);
    return g;
}

Graph sample_G1_prime(const Params& p, RandomSource& rng, SizeGuard* guard) {
    Graph g = one_marked_vertex(guard);
    hang_queue().assign(1, g.mark);
    hang_G1_prime(g, p, rng, guard);
    return g;
}

Graph sample_G1_dprime(const Params& p, RandomSource& rng, SizeGuard* guard) {
    Graph g = one_marked_vertex(guard);
    auto& hang = hang_queue();
    hang.assign(1, g.mark);
    int anchor = g.mark;
    const double stop = p.G1_prime / (p.G1_prime + p.x * p.G1_dprime);
    for (;;) {
        Graph b = sample_G2_derived(G2Kind::double_prime, p, rng);
        count(guard, static_cast<std::uint64_t>(b.n - 1));
        const auto& id = merge(g, b, {{b.mark, anchor}});
        int second = id[static_cast<idx>(b.mark2)];
        for (int a = 0; a < b.n; ++a)
            if (a != b.mark && a != b.mark2)
                hang.push_back(id[static_cast<idx>(a)]);
        hang.push_back(second);
        if (bern(stop, rng)) {
            g.mark2 = second;
            break;
        }
        anchor = second;
    }
    hang_G1_prime(g, p, rng, guard);
    return g;
}

void add_components(Graph& g, const Params& p, RandomSource& rng, SizeGuard* guard) {
    int k = pois_geq(0, p.G1, rng);
    for (int i = 0; i < k; ++i) {
        Graph c = sample_G1(p, rng);
        count(guard, static_cast<std::uint64_t>(c.n));
        merge(g, c, {});
    }
}

}  // namespace

Graph sample_G2_derived(G2Kind kind, const Params& p, RandomSource& rng) {
    switch (kind) {
    case G2Kind::u: {
        Graph g = sample_G2_rooted(G2RootedKind::plain, p, rng);
        g.poles = false;
        g.discarded = g.root_edge;
        g.root_edge = -1;
        return g;
    }
    case G2Kind::prime:
        return u_to_l(
            [&] { return sample_G2_derived(G2Kind::u, p, rng); }, 2.0, rng,
            [](Graph& g) {
                g.discarded = -1;
                return std::pair<std::uint64_t, std::uint64_t>{g.l_size(), g.u_size()};
            },
            [&](Graph& g) { g.mark = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.n))); });
    case G2Kind::u_prime: {
        double a = p.z * p.z * p.G2_arrow_prime, b = 2 * p.z * p.G2_arrow;
        Graph g;
        if (bern(a / (a + b), rng)) {
            g = sample_G2_rooted(G2RootedKind::derived, p, rng);
        } else {
            g = sample_G2_rooted(G2RootedKind::plain, p, rng);
            g.mark = 0;
        }
        g.poles = false;
        g.discarded = g.root_edge;
        g.root_edge = -1;
        return g;
    }
    case G2Kind::double_prime:
        return u_to_l(
            [&] { return sample_G2_derived(G2Kind::u_prime, p, rng); }, 1.0, rng,
            [](Graph& g) {
                g.discarded = -1;
                return std::pair<std::uint64_t, std::uint64_t>{g.l_size(), g.u_size()};
            },
            [&](Graph& g) {
                int r = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.n - 1)));
                g.mark2 = r >= g.mark ? r + 1 : r;
            });
    }
    throw ParameterError("sample_G2_derived: unknown kind");
}

Graph sample_G1_derived(G1Kind kind, const Params& p, RandomSource& rng, SizeGuard* guard) {
    return kind == G1Kind::prime ? sample_G1_prime(p, rng, guard) : sample_G1_dprime(p, rng, guard);
}

Graph sample_G1(const Params& p, RandomSource& rng) {
    Graph g = reject_filter([&] { return sample_G1_prime(p, rng, nullptr); },
                            [](const Graph& c) { return 1.0 / static_cast<double>(c.n); }, rng);
    g.mark = -1;
    return g;
}

Graph sample_G_family(GKind kind, const Params& p, RandomSource& rng, SizeGuard* guard) {
    Graph g;
    switch (kind) {
    case GKind::plain:
        break;
    case GKind::prime:
        g = sample_G1_prime(p, rng, guard);
        break;
    case GKind::double_prime:
        if (bern(p.G1_dprime * p.G / p.G_dprime, rng)) {
            g = sample_G1_dprime(p, rng, guard);
        } else {
            g = sample_G1_prime(p, rng, guard);
            Graph second = sample_G1_prime(p, rng, guard);
            g.mark2 = merge(g, second, {})[static_cast<idx>(second.mark)];
        }
        break;
    }
    add_components(g, p, rng, guard);
    return g;
}

LabelledGraph to_labelled(const Graph& g, RandomSource& rng) {
    const int marks = (g.mark >= 0 ? 1 : 0) + (g.mark2 >= 0 ? 1 : 0);
    auto labels = distribute_labels(g.n - marks, rng);
    std::vector<int> id(static_cast<idx>(g.n));
    idx next = 0;
    for (int v = 0; v < g.n; ++v)
        if (v != g.mark && v != g.mark2)
            id[static_cast<idx>(v)] = labels[next++];
    if (g.mark >= 0)
        id[static_cast<idx>(g.mark)] = g.n - marks + 1;
    if (g.mark2 >= 0)
        id[static_cast<idx>(g.mark2)] = g.n;
    LabelledGraph out;
    out.n = g.n;
    out.edges.reserve(g.edges.size());
    for (auto [a, b] : g.edges) {
        int u = id[static_cast<idx>(a)], v = id[static_cast<idx>(b)];
        out.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

LabelledGraph sample_planar(const Params& p, RandomSource& rng, SizeGuard* guard) {
    return to_labelled(sample_G_family(GKind::double_prime, p, rng, guard), rng);
}

std::uint64_t default_attempt_cap(const SampleTarget& target) {
    const double n = static_cast<double>(std::max<long long>(target.n, 1));
    // about 750 n^{3/2} expected attempts exact-size, 750 n^{1/2} / (2 eps) with a window
    double expected = target.epsilon ? 750 * std::sqrt(n) / (2 * *target.epsilon) : 750 * n * std::sqrt(n);
    if (target.mu)
        expected *= target.epsilon ? 10 : 10 * std::sqrt(n);
    return static_cast<std::uint64_t>(std::clamp(100 * expected, 1e5, 1e18));
}

TargettedResult targetted_sample(const SampleTarget& target, const Params& p, RandomSource& rng,
                                 std::uint64_t attempt_cap) {
    if (target.n < 1)
        throw ParameterError("targetted_sample: n must be at least 1");
    if (target.epsilon && !(*target.epsilon > 0))
        throw ParameterError("targetted_sample: epsilon must be positive");
    if (target.mu && !(*target.mu > 1 && *target.mu < 3))
        throw ParameterError("targetted_sample: mu must lie in (1,3)");
    const double n = static_cast<double>(target.n);
    long long lo = target.n, hi = target.n;
    if (target.epsilon) {
        lo = static_cast<long long>(std::ceil(n * (1 - *target.epsilon)));
        hi = static_cast<long long>(std::floor(n * (1 + *target.epsilon)));
    }
    if (attempt_cap == 0)
        attempt_cap = default_attempt_cap(target);

    auto edges_ok = [&](const Graph& g) {
        if (!target.mu)
            return true;
        double mu = *target.mu;
        if (!target.epsilon)
            return static_cast<long long>(g.edges.size()) == static_cast<long long>(std::floor(mu * n));
        double ratio = static_cast<double>(g.edges.size()) / static_cast<double>(g.n);
        return ratio >= mu * (1 - *target.epsilon) && ratio <= mu * (1 + *target.epsilon);
    };

    TargettedResult res;
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t ops0 = rng.primitive_ops();
    for (std::uint64_t a = 1; a <= attempt_cap; ++a) {
        rng.reset_budget();
        Graph g;
        try {
            SizeGuard guard(static_cast<std::uint64_t>(hi));
            g = sample_G_family(GKind::double_prime, p, rng, &guard);
        } catch (const SizeAbort&) {
            continue;
        }
        if (g.n < lo || g.n > hi || !edges_ok(g))
            continue;
        // labels are drawn only for the accepted graph, as sample_planar would
        res.graph = to_labelled(g, rng);
        res.stats.attempts = a;
        res.stats.primitive_ops = rng.primitive_ops() - ops0;
        res.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return res;
    }
    throw GiveUp("targetted_sample: attempt cap of " + std::to_string(attempt_cap) + " exceeded");
}

}  // namespace planargen
