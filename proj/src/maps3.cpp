#include "planargen/maps3.hpp"

namespace planargen {

namespace {

using idx = std::size_t;

// trees and dissections of rejected trials keep their storage for the next one
struct Workspace {
    TreeCode code;
    ClosureSketch sketch;
    BicoloredTree tree;
    Dissection d;
};

int draw_root(RandomSource& rng) { return 2 * static_cast<int>(rng.below(3)); }

// J' = 3 Z_U I + 3 Z_L Z_U I'; true for the first term, where the mark is hex[r+4]
bool draw_J_prime_code(const Params& p, RandomSource& rng, Workspace& ws) {
    if (bern(p.K / (p.K + p.z * p.K_prime), rng)) {
        sample_K_code(p, rng, ws.code);
        return true;
    }
    sample_K_prime_code(p, rng, ws.code);
    return false;
}

void build(Workspace& ws, int r, bool hex_mark) {
    expand_code(ws.code, ws.tree);
    ws.tree.root = -1;
    closure_into(ws.tree, ws.d);
    ws.d.root = r;
    if (hex_mark)
        ws.d.mark = ws.d.hex[static_cast<idx>((r + 4) % 6)];
}

// rejection on the sketch; only the accepted tree is closed for real
template <class Draw>
void admissible_into(Workspace& ws, RandomSource& rng, Draw draw) {
    bool hex_mark;
    int r;
    do {
        hex_mark = draw();
        sketch_closure(ws.code, ws.sketch);
        r = draw_root(rng);
    } while (!sketch_admissible(ws.code, ws.sketch, r));
    build(ws, r, hex_mark);
    if (!is_admissible(ws.d))
        throw InvariantViolation("sample_dissection: sketch and closure disagree on admissibility");
}

void sample_dissection_into(DissectionKind kind, const Params& p, RandomSource& rng, Workspace& ws) {
    switch (kind) {
    case DissectionKind::I:
    case DissectionKind::J:
        sample_K_code(p, rng, ws.code);
        build(ws, kind == DissectionKind::J ? draw_root(rng) : -1, false);
        return;
    case DissectionKind::I_prime:
        sample_K_prime_code(p, rng, ws.code);
        build(ws, -1, false);
        return;
    case DissectionKind::J_prime: {
        bool hex_mark = draw_J_prime_code(p, rng, ws);
        build(ws, draw_root(rng), hex_mark);
        return;
    }
    case DissectionKind::Ja:
        admissible_into(ws, rng, [&] {
            sample_K_code(p, rng, ws.code);
            return false;
        });
        return;
    case DissectionKind::Ja_prime:
        admissible_into(ws, rng, [&] { return draw_J_prime_code(p, rng, ws); });
        return;
    }
    throw ParameterError("sample_dissection: unknown kind");
}

Workspace& workspace() {
    thread_local Workspace ws;
    return ws;
}

}  // namespace

Dissection sample_dissection(DissectionKind kind, const Params& p, RandomSource& rng) {
    Workspace ws;
    sample_dissection_into(kind, p, rng, ws);
    return std::move(ws.d);
}

Core3 primal(const Dissection& d) {
    const auto& m = d.map;
    const int r = d.root;
    if (r < 0)
        throw ParameterError("primal: dissection is not rooted");
    thread_local std::vector<int> id;
    thread_local std::vector<char> seen;
    id.assign(static_cast<idx>(m.vertex_count()), -1);
    id[static_cast<idx>(d.hex[static_cast<idx>(r)])] = 0;
    id[static_cast<idx>(d.hex[static_cast<idx>((r + 2) % 6)])] = 1;
    id[static_cast<idx>(d.hex[static_cast<idx>((r + 4) % 6)])] = 2;
    Core3 g;
    g.num_vertices = 3;
    for (int v = 0; v < m.vertex_count(); ++v)
        if (m.alive[static_cast<idx>(v)] && m.color[static_cast<idx>(v)] == black && id[static_cast<idx>(v)] < 0)
            id[static_cast<idx>(v)] = g.num_vertices++;
    if (d.mark >= 0)
        g.mark = id[static_cast<idx>(d.mark)];
    g.edges.reserve(static_cast<idx>(d.inner_faces + 1));
    seen.assign(static_cast<idx>(m.half_edge_count()), 0);
    const int outer = d.outer[1];
    for (int h = 0; h < m.half_edge_count(); ++h) {
        if (seen[static_cast<idx>(h)])
            continue;
        int corners[2], nb = 0, len = 0, e = h;
        bool is_outer = false;
        do {
            seen[static_cast<idx>(e)] = 1;
            if (e == outer)
                is_outer = true;
            int v = m.vert[static_cast<idx>(e)];
            if (m.color[static_cast<idx>(v)] == black && nb < 2)
                corners[nb++] = id[static_cast<idx>(v)];
            ++len;
            e = m.face_next(e);
        } while (e != h);
        if (is_outer)
            continue;
        if (len != 4 || nb != 2)
            throw InvariantViolation("primal: inner face is not a bicolored quadrangle");
        g.edges.emplace_back(corners[0], corners[1]);
    }
    // the two faces created by the root-addition give the root 0-1 and the edge 0-2
    g.edges.emplace_back(0, 2);
    return g;
}

Core3 sample_G3(G3Kind kind, const Params& p, RandomSource& rng) {
    switch (kind) {
    case G3Kind::rooted:
        sample_dissection_into(DissectionKind::Ja, p, rng, workspace());
        return primal(workspace().d);
    case G3Kind::derived:
        sample_dissection_into(DissectionKind::Ja_prime, p, rng, workspace());
        return primal(workspace().d);
    case G3Kind::u_derived:
        return l_to_u(
            [&] {
                sample_dissection_into(DissectionKind::Ja_prime, p, rng, workspace());
                return primal(workspace().d);
            },
            3.0, rng,
            [](Core3& g) {
                g.mark = -1;
                return std::pair<std::uint64_t, std::uint64_t>{g.l_size(), g.u_size()};
            },
            [&](Core3& g) { g.marked_edge = static_cast<int>(rng.below(g.edges.size())); });
    }
    throw ParameterError("sample_G3: unknown kind");
}

}  // namespace planargen
