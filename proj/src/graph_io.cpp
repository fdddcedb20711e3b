#include "planargen/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace planargen {

void write_edge_list(std::ostream& out, const LabelledGraph& g, std::uint64_t seed,
                     const std::vector<std::string>& comments) {
    out << g.n << ' ' << g.edges.size() << ' ' << seed << '\n';
    for (auto [u, v] : g.edges)
        out << u << ' ' << v << '\n';
    for (const auto& c : comments)
        out << "# " << c << '\n';
}

void write_dot(std::ostream& out, const LabelledGraph& g, std::uint64_t seed,
               const std::vector<std::string>& comments) {
    out << "// n=" << g.n << " m=" << g.edges.size() << " seed=" << seed << '\n';
    for (const auto& c : comments)
        out << "// " << c << '\n';
    out << "graph G {\n  node [shape=point];\n";
    for (int v = 1; v <= g.n; ++v)
        out << "  " << v << ";\n";
    for (auto [u, v] : g.edges)
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

std::vector<ParsedGraph> read_edge_lists(std::istream& in) {
    std::vector<ParsedGraph> out;
    std::string line;
    std::size_t pending = 0;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        if (line[0] == '#') {
            if (out.empty())
                throw ParseError("line " + std::to_string(lineno) + ": comment before any header");
            out.back().comments.push_back(line.size() > 2 ? line.substr(2) : std::string());
            continue;
        }
        std::istringstream ss(line);
        if (pending == 0) {
            ParsedGraph pg;
            std::size_t m = 0;
            if (!(ss >> pg.graph.n >> m >> pg.seed) || pg.graph.n < 0)
                throw ParseError("line " + std::to_string(lineno) + ": bad header");
            pg.graph.edges.reserve(m);
            out.push_back(std::move(pg));
            pending = m;
            continue;
        }
        int u = 0, v = 0;
        auto& g = out.back().graph;
        if (!(ss >> u >> v) || u < 1 || v <= u || v > g.n)
            throw ParseError("line " + std::to_string(lineno) + ": bad edge");
        g.edges.emplace_back(u, v);
        --pending;
    }
    if (pending != 0)
        throw ParseError("truncated edge list");
    return out;
}

std::vector<int> degree_sequence(const LabelledGraph& g) {
    std::vector<int> deg(static_cast<std::size_t>(g.n), 0);
    for (auto [u, v] : g.edges) {
        ++deg[static_cast<std::size_t>(u - 1)];
        ++deg[static_cast<std::size_t>(v - 1)];
    }
    return deg;
}

}  // namespace planargen
