#include "planargen/networks.hpp"

#include <cmath>
#include <vector>

#include "planargen/maps3.hpp"

namespace planargen {

namespace {

using idx = std::size_t;

class Builder {
public:
    Builder(const Params& p, RandomSource& rng, Graph& g)
        : p_(p), rng_(rng), g_(g), sh_(p.S + p.H), exp1_(exp_geq(1, sh_)), tasks_(acquire()) {
        tasks_.clear();
    }
    ~Builder() {
        if (&tasks_ == &store().tasks)
            store().busy = false;
    }
    Builder(const Builder&) = delete;
    Builder& operator=(const Builder&) = delete;

    void push(NetworkKind k, int u, int v) { tasks_.push_back({k, u, v}); }

    void run() {
        while (head_ < tasks_.size()) {
            Task t = tasks_[head_++];
            expand(t);
        }
        tasks_.clear();
        head_ = 0;
    }

    // one derived network between u and v, plain parts queued
    void derived(DerivedNetworkKind kind, int u, int v) {
        const double y = p_.y, z = p_.z;
        for (;;) {
            if (kind == DerivedNetworkKind::D) {
                switch (pick({p_.S1, p_.P1, p_.H1}, rng_)) {
                case 0: kind = DerivedNetworkKind::S; break;
                case 1: kind = DerivedNetworkKind::P; break;
                default: kind = DerivedNetworkKind::H; break;
                }
            }
            switch (kind) {
            case DerivedNetworkKind::S: {
                double head = y + p_.P + p_.H;
                int w = vertex();
                switch (pick({(p_.P1 + p_.H1) * z * p_.D, head * p_.D, head * z * p_.D1}, rng_)) {
                case 0:
                    push(NetworkKind::D, w, v);
                    kind = bern(p_.P1 / (p_.P1 + p_.H1), rng_) ? DerivedNetworkKind::P : DerivedNetworkKind::H;
                    v = w;
                    continue;
                case 1:
                    g_.mark = w;
                    push(NetworkKind::head, u, w);
                    push(NetworkKind::D, w, v);
                    return;
                default:
                    push(NetworkKind::head, u, w);
                    kind = DerivedNetworkKind::D;
                    u = w;
                    continue;
                }
            }
            case DerivedNetworkKind::P: {
                double e = std::exp(sh_);
                int k;
                if (bern(y * e / (y * e + exp1_), rng_)) {
                    edge(u, v);
                    k = pois_geq(0, sh_, rng_);
                } else {
                    k = pois_geq(1, sh_, rng_);
                }
                for (int i = 0; i < k; ++i)
                    push(NetworkKind::S_or_H, u, v);
                kind = bern(p_.S1 / (p_.S1 + p_.H1), rng_) ? DerivedNetworkKind::S : DerivedNetworkKind::H;
                continue;
            }
            case DerivedNetworkKind::H: {
                if (bern(p_.G3_z / (p_.G3_z + p_.D1 * p_.G3_w), rng_)) {
                    Core3 c = sample_G3(G3Kind::derived, p_, rng_);
                    auto id = embed(c, u, v, -1);
                    g_.mark = id[static_cast<idx>(c.mark)];
                    return;
                }
                Core3 c = sample_G3(G3Kind::u_derived, p_, rng_);
                auto id = embed(c, u, v, c.marked_edge);
                auto [a, b] = c.edges[static_cast<idx>(c.marked_edge)];
                u = id[static_cast<idx>(a)];
                v = id[static_cast<idx>(b)];
                kind = DerivedNetworkKind::D;
                continue;
            }
            case DerivedNetworkKind::D:
                break;
            }
        }
    }

private:
    struct Task {
        NetworkKind kind;
        int u, v;
    };
    // the task queue of the outermost builder on this thread is kept between calls
    struct Store {
        std::vector<Task> tasks;
        bool busy = false;
    };
    static Store& store() {
        thread_local Store s;
        return s;
    }
    std::vector<Task>& acquire() {
        if (store().busy)
            return own_;
        store().busy = true;
        return store().tasks;
    }

    int vertex() {
        rng_.add_ops(1);
        return g_.add_vertex();
    }
    void edge(int u, int v) {
        rng_.add_ops(1);
        g_.add_edge(u, v);
    }

    // core vertices 0, 1 go to u, v; every edge but skip gets a network
    std::vector<int> embed(const Core3& c, int u, int v, int skip) {
        std::vector<int> id(static_cast<idx>(c.num_vertices));
        id[0] = u;
        id[1] = v;
        for (int i = 2; i < c.num_vertices; ++i)
            id[static_cast<idx>(i)] = vertex();
        for (int e = 0; e < static_cast<int>(c.edges.size()); ++e)
            if (e != skip) {
                auto [a, b] = c.edges[static_cast<idx>(e)];
                push(NetworkKind::D, id[static_cast<idx>(a)], id[static_cast<idx>(b)]);
            }
        return id;
    }

    void components(int k, int u, int v) {
        for (int i = 0; i < k; ++i)
            push(NetworkKind::S_or_H, u, v);
    }

    void expand(const Task& t) {
        const double y = p_.y;
        switch (t.kind) {
        case NetworkKind::D:
            switch (pick({y, p_.S, p_.P, p_.H}, rng_)) {
            case 0: edge(t.u, t.v); return;
            case 1: expand({NetworkKind::S, t.u, t.v}); return;
            case 2: expand({NetworkKind::P, t.u, t.v}); return;
            default: expand({NetworkKind::H, t.u, t.v}); return;
            }
        case NetworkKind::S: {
            int w = vertex();
            expand({NetworkKind::head, t.u, w});
            push(NetworkKind::D, w, t.v);
            return;
        }
        case NetworkKind::head:
            switch (pick({y, p_.P, p_.H}, rng_)) {
            case 0: edge(t.u, t.v); return;
            case 1: expand({NetworkKind::P, t.u, t.v}); return;
            default: expand({NetworkKind::H, t.u, t.v}); return;
            }
        case NetworkKind::P:
            expand({bern(y * exp1_ / p_.P, rng_) ? NetworkKind::P1 : NetworkKind::P2, t.u, t.v});
            return;
        case NetworkKind::P1:
            edge(t.u, t.v);
            components(pois_geq(1, sh_, rng_), t.u, t.v);
            return;
        case NetworkKind::P2:
            components(pois_geq(2, sh_, rng_), t.u, t.v);
            return;
        case NetworkKind::S_or_H:
            expand({bern(p_.S / sh_, rng_) ? NetworkKind::S : NetworkKind::H, t.u, t.v});
            return;
        case NetworkKind::H:
            embed(sample_G3(G3Kind::rooted, p_, rng_), t.u, t.v, -1);
            return;
        }
    }

    const Params& p_;
    RandomSource& rng_;
    Graph& g_;
    double sh_, exp1_;
    std::vector<Task> own_;
    std::vector<Task>& tasks_;  // FIFO from head_
    std::size_t head_ = 0;
};

Graph two_poles() {
    Graph g;
    g.poles = true;
    g.n = 2;
    return g;
}

}  // namespace

Graph sample_network(NetworkKind kind, const Params& p, RandomSource& rng) {
    Graph g = two_poles();
    Builder b(p, rng, g);
    b.push(kind, 0, 1);
    b.run();
    return g;
}

Graph sample_network_derived(DerivedNetworkKind kind, const Params& p, RandomSource& rng) {
    Graph g = two_poles();
    Builder b(p, rng, g);
    b.derived(kind, 0, 1);
    b.run();
    return g;
}

Graph add_root_edge(Graph g) {
    for (idx i = 0; i < g.edges.size(); ++i) {
        auto [a, b] = g.edges[i];
        if ((a == 0 && b == 1) || (a == 1 && b == 0)) {
            g.edges[i] = {0, 1};
            g.root_edge = static_cast<int>(i);
            return g;
        }
    }
    g.root_edge = g.add_edge(0, 1);
    return g;
}

Graph sample_G2_rooted(G2RootedKind kind, const Params& p, RandomSource& rng) {
    if (kind == G2RootedKind::derived)
        return add_root_edge(sample_network_derived(DerivedNetworkKind::D, p, rng));
    if (bern(1.0 / (1.0 + p.D), rng))
        return add_root_edge(two_poles());
    return add_root_edge(sample_network(NetworkKind::D, p, rng));
}

}  // namespace planargen
