#include "planargen/trees.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace planargen {

namespace {

enum class Cls : unsigned char { black_as, white_as, black_hat, white_hat, black_any, white_any, white_ll };

struct Task {
    Cls cls;
    int slot;  // kid slot of the parent, -1 at the root leaf
};

// cumulative branch thresholds of the tree grammar, cached per parameter set
struct Branches {
    double key[6] = {};
    double top = 0;
    double black_as[2] = {}, white_as[2] = {}, black_hat[2] = {}, white_hat[3] = {};
    double leaf_under_black = 0, leaf_under_white = 0;
};

const Branches& branches(const Params& p) {
    thread_local Branches b;
    const double key[6] = {p.z, p.w, p.R_black, p.R_white, p.R_black_hat, p.R_white_hat};
    if (std::equal(key, key + 6, b.key))
        return b;
    std::copy(key, key + 6, b.key);
    const double w = p.w, rb = p.R_black, rw = p.R_white, rbh = p.R_black_hat, rwh = p.R_white_hat;
    auto cumulate = [](std::initializer_list<double> ws, double* out) {
        double total = 0;
        for (double v : ws)
            total += v;
        double run = 0;
        int i = 0;
        for (double v : ws) {
            if (i + 1 == static_cast<int>(ws.size()))
                break;
            run += v;
            out[i++] = run / total;
        }
    };
    double black_as = p.z * (2 * rw * w + rw * rw), white_as = 2 * rbh * w + rb * rb;
    b.top = black_as / (black_as + white_as);
    cumulate({rw * w, w * rw, rw * rw}, b.black_as);
    cumulate({rbh * w, w * rbh, rb * rb}, b.white_as);
    cumulate({rwh * w * w, w * w * rwh, rwh * rwh}, b.black_hat);
    cumulate({w, rb * w, w * rb, rb * rb}, b.white_hat);
    b.leaf_under_black = w / (w + rw);
    b.leaf_under_white = w / (w + rb);
    return b;
}

// grows the code depth-first, first kid first
class Grower {
public:
    Grower(const Branches& b, RandomSource& rng, TreeCode& c, bool early_abort)
        : b_(b), rng_(rng), c_(c), early_abort_(early_abort) {}

    // false if the early-abort coin stopped the attempt
    bool run(Cls top) {
        thread_local std::vector<Task> stack;
        stack_ = &stack;
        stack.clear();
        stack.push_back({top, -1});
        while (!stack.empty()) {
            Task task = stack.back();
            stack.pop_back();
            if (!expand(task))
                return false;
        }
        return true;
    }

private:
    // a kid slot: a leaf, or a class still to expand
    struct Kid {
        bool leaf;
        Cls cls;
    };
    static constexpr Kid leaf_kid{true, Cls::white_ll};
    static constexpr Kid kid(Cls c) { return {false, c}; }

    bool node(int color, int slot, Kid a, Kid b) {
        const int j = c_.nodes();
        c_.node.push_back({{-1, -1}, slot, color});
        if (slot >= 0)
            c_.node[static_cast<std::size_t>(slot / 2)].kid[slot % 2] = j;
        (color == black ? c_.black_nodes : c_.white_nodes) += 1;
        rng_.add_ops(1 + (a.leaf ? 1 : 0) + (b.leaf ? 1 : 0));
        if (!b.leaf)
            stack_->push_back({b.cls, 2 * j + 1});
        if (!a.leaf)
            stack_->push_back({a.cls, 2 * j});
        if (early_abort_) {
            double n = c_.nodes();
            if (!(rng_.uniform() * (n + 2) < n + 1))
                return false;
        }
        return true;
    }

    int pick3(const double* c) {
        double u = rng_.uniform();
        return u < c[0] ? 0 : u < c[1] ? 1 : 2;
    }

    bool expand(const Task& task) {
        const int s = task.slot;
        switch (task.cls) {
        case Cls::white_ll:
            return node(white, s, leaf_kid, leaf_kid);
        case Cls::black_as:
            switch (pick3(b_.black_as)) {
            case 0: return node(black, s, kid(Cls::white_any), leaf_kid);
            case 1: return node(black, s, leaf_kid, kid(Cls::white_any));
            default: return node(black, s, kid(Cls::white_any), kid(Cls::white_any));
            }
        case Cls::white_as:
            switch (pick3(b_.white_as)) {
            case 0: return node(white, s, kid(Cls::black_hat), leaf_kid);
            case 1: return node(white, s, leaf_kid, kid(Cls::black_hat));
            default: return node(white, s, kid(Cls::black_any), kid(Cls::black_any));
            }
        case Cls::black_hat:
            switch (pick3(b_.black_hat)) {
            case 0: return node(black, s, kid(Cls::white_hat), kid(Cls::white_ll));
            case 1: return node(black, s, kid(Cls::white_ll), kid(Cls::white_hat));
            default: return node(black, s, kid(Cls::white_hat), kid(Cls::white_hat));
            }
        case Cls::white_hat: {
            double u = rng_.uniform();
            const double* c = b_.white_hat;
            if (u < c[0]) {
                // the slot stays a leaf
                rng_.add_ops(1);
                return true;
            }
            if (u < c[1])
                return node(white, s, kid(Cls::black_any), leaf_kid);
            if (u < c[2])
                return node(white, s, leaf_kid, kid(Cls::black_any));
            return node(white, s, kid(Cls::black_any), kid(Cls::black_any));
        }
        case Cls::black_any: {
            double q = b_.leaf_under_black;
            bool la = rng_.uniform() < q, lb = rng_.uniform() < q;
            return node(black, s, la ? leaf_kid : kid(Cls::white_any), lb ? leaf_kid : kid(Cls::white_any));
        }
        case Cls::white_any: {
            double q = b_.leaf_under_white;
            bool la = rng_.uniform() < q, lb = rng_.uniform() < q;
            return node(white, s, la ? leaf_kid : kid(Cls::black_any), lb ? leaf_kid : kid(Cls::black_any));
        }
        }
        return true;
    }

    const Branches& b_;
    RandomSource& rng_;
    TreeCode& c_;
    bool early_abort_;
    std::vector<Task>* stack_ = nullptr;
};

TreeCode& scratch_code() {
    thread_local TreeCode c;
    return c;
}

}  // namespace

bool grow_code(const Params& p, RandomSource& rng, TreeCode& code, bool early_abort) {
    code.node.clear();
    code.black_nodes = code.white_nodes = 0;
    code.mark = -1;
    const Branches& b = branches(p);
    Cls top = rng.uniform() < b.top ? Cls::black_as : Cls::white_as;
    Grower g(b, rng, code, early_abort);
    return g.run(top);
}

void sample_K_code(const Params& p, RandomSource& rng, TreeCode& code) {
    while (!grow_code(p, rng, code, true)) {
    }
}

void sample_K_prime_code(const Params& p, RandomSource& rng, TreeCode& code) {
    // u_to_l with alpha = 2/3 on the rooted trees
    constexpr double alpha = 2.0 / 3.0;
    for (std::uint64_t attempt = 0; attempt < default_flip_cap; ++attempt) {
        grow_code(p, rng, code, false);
        if (code.black_nodes == 0)
            continue;
        double acc = static_cast<double>(code.black_nodes) / (alpha * static_cast<double>(code.leaves()));
        if (acc > 1.0 + 1e-12)
            throw InvariantViolation("sample_K_prime: acceptance above 1");
        if (!bern(std::min(acc, 1.0), rng))
            continue;
        auto k = static_cast<int>(rng.below(static_cast<std::uint64_t>(code.black_nodes)));
        for (int v = 0; v < code.nodes(); ++v)
            if (code.node[static_cast<std::size_t>(v)].color == black && k-- == 0) {
                code.mark = v;
                break;
            }
        return;
    }
    throw GiveUp("sample_K_prime: attempt cap exceeded");
}

void expand_code(const TreeCode& code, BicoloredTree& t) {
    auto& m = t.map;
    m.clear();
    t.root = t.mark = -1;
    t.black_nodes = code.black_nodes;
    t.white_nodes = code.white_nodes;
    t.leaves = code.leaves();
    const int n = code.nodes();
    m.reserve(2 * n + 3, 4 * n + 4);
    thread_local std::vector<int> vid;
    thread_local std::vector<std::pair<int, int>> stack;  // (node, parent half-edge)
    vid.assign(static_cast<std::size_t>(n), -1);
    auto leaf = [&](int slot) {
        int v = m.add_vertex(uncolored);
        m.pair(m.add_half_edge(v), slot);
    };
    int r = m.add_vertex(uncolored);
    t.root = m.add_half_edge(r);
    stack.clear();
    if (n > 0)
        stack.emplace_back(0, t.root);
    while (!stack.empty()) {
        auto [j, slot] = stack.back();
        stack.pop_back();
        const auto& nd = code.node[static_cast<std::size_t>(j)];
        int v = m.add_vertex(nd.color);
        vid[static_cast<std::size_t>(j)] = v;
        int up = m.add_half_edge(v);
        int c1 = m.add_half_edge(v);
        int c2 = m.add_half_edge(v);
        m.next[static_cast<std::size_t>(up)] = c1;
        m.next[static_cast<std::size_t>(c1)] = c2;
        m.next[static_cast<std::size_t>(c2)] = up;
        m.pair(up, slot);
        const int a = nd.kid[0], b = nd.kid[1];
        if (b < 0)
            leaf(c2);
        else
            stack.emplace_back(b, c2);
        if (a < 0)
            leaf(c1);
        else
            stack.emplace_back(a, c1);
    }
    if (code.mark >= 0)
        t.mark = vid[static_cast<std::size_t>(code.mark)];
}

BicoloredTree sample_uK(const Params& p, RandomSource& rng) {
    BicoloredTree t;
    grow_code(p, rng, scratch_code(), false);
    expand_code(scratch_code(), t);
    return t;
}

void sample_K_into(const Params& p, RandomSource& rng, BicoloredTree& t) {
    sample_K_code(p, rng, scratch_code());
    expand_code(scratch_code(), t);
    t.root = -1;
}

BicoloredTree sample_K(const Params& p, RandomSource& rng) {
    BicoloredTree t;
    sample_K_into(p, rng, t);
    return t;
}

void sample_K_prime_into(const Params& p, RandomSource& rng, BicoloredTree& t) {
    sample_K_prime_code(p, rng, scratch_code());
    expand_code(scratch_code(), t);
    t.root = -1;
}

BicoloredTree sample_K_prime(const Params& p, RandomSource& rng) {
    BicoloredTree t;
    sample_K_prime_into(p, rng, t);
    return t;
}

void check_tree(const BicoloredTree& t) {
    const auto& m = t.map;
    m.check_structure();
    auto fail = [](const std::string& w) { throw InvariantViolation("tree: " + w); };
    std::vector<int> deg(static_cast<std::size_t>(m.vertex_count()), 0);
    for (int h = 0; h < m.half_edge_count(); ++h)
        ++deg[static_cast<std::size_t>(m.vert[static_cast<std::size_t>(h)])];
    int b = 0, w = 0, l = 0;
    for (int v = 0; v < m.vertex_count(); ++v) {
        int c = m.color[static_cast<std::size_t>(v)];
        int d = deg[static_cast<std::size_t>(v)];
        if (c == uncolored) {
            if (d != 1)
                fail("leaf of degree " + std::to_string(d));
            ++l;
        } else {
            if (d != 3)
                fail("node of degree " + std::to_string(d));
            (c == black ? b : w) += 1;
        }
    }
    for (int h = 0; h < m.half_edge_count(); ++h) {
        int cu = m.color[static_cast<std::size_t>(m.vert[static_cast<std::size_t>(h)])];
        int cv = m.color[static_cast<std::size_t>(m.head(h))];
        if (cu != uncolored && cu == cv)
            fail("adjacent nodes share a color");
    }
    if (b != t.black_nodes || w != t.white_nodes || l != t.leaves)
        fail("stored counts disagree with the map");
    if (l != b + w + 2)
        fail("leaf count differs from node count + 2");
    if (m.edge_count() != m.vertex_count() - 1)
        fail("not a tree");
    if (m.faces().size() != 1)
        fail("more than one face");
    if (t.mark >= 0 && m.color[static_cast<std::size_t>(t.mark)] != black)
        fail("mark is not a black node");
}

bool is_excluded_shape(const BicoloredTree& t) {
    if (t.nodes() == 0)
        return true;
    if (t.nodes() == 1)
        return true;
    if (t.black_nodes == 1 && t.white_nodes == 3) {
        // black center whose three neighbours are white nodes carrying two leaves
        for (int v = 0; v < t.map.vertex_count(); ++v)
            if (t.map.color[static_cast<std::size_t>(v)] == black) {
                for (int h = 0; h < t.map.half_edge_count(); ++h)
                    if (t.map.vert[static_cast<std::size_t>(h)] == v &&
                        t.map.color[static_cast<std::size_t>(t.map.head(h))] != white)
                        return false;
                return true;
            }
    }
    return false;
}

BicoloredTree two_leaf_tree() {
    BicoloredTree t;
    int a = t.map.add_vertex(uncolored);
    int b = t.map.add_vertex(uncolored);
    t.map.add_edge(a, b);
    t.leaves = 2;
    return t;
}

}  // namespace planargen
