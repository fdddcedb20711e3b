// Shared helpers for the test binaries.
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include "planargen/enumeration.hpp"
#include "planargen/graph.hpp"
#include "planargen/oracle.hpp"
#include "planargen/params.hpp"

namespace test {

using namespace planargen;

// tables are costly, keep one per n
inline const OracleTable& table_for(long long n) {
    static std::map<long long, OracleTable> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, build_table(n, std::nullopt).second).first;
    return it->second;
}

inline Params params_for(long long n) { return params_from(table_for(n)); }

inline EdgeVec sorted_edges(EdgeVec e) {
    for (auto& [u, v] : e)
        if (u > v)
            std::swap(u, v);
    std::sort(e.begin(), e.end());
    return e;
}

// 1-based labelled graph to a 0-based sorted edge set
inline EdgeVec zero_based(const LabelledGraph& g) {
    EdgeVec e;
    for (auto [u, v] : g.edges)
        e.emplace_back(u - 1, v - 1);
    return sorted_edges(e);
}

// edge set after vertex v is renamed to perm[v]
inline EdgeVec relabel(const EdgeVec& edges, const std::vector<int>& perm) {
    EdgeVec e;
    for (auto [u, v] : edges)
        e.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return sorted_edges(e);
}

inline std::vector<int> random_permutation(int n, RandomSource& rng) {
    auto labels = distribute_labels(n, rng);
    for (auto& l : labels)
        --l;
    return labels;
}

// Tallies labelled graphs of one class and size, conditioned on the edge count.
class UniformityTally {
public:
    UniformityTally(GraphClass cls, int n) {
        for (auto& e : list_class(cls, n)) {
            int m = static_cast<int>(e.size());
            index_[e] = {m, static_cast<int>(cells_[m].size())};
            cells_[m].push_back(0);
        }
    }
    // false if the graph is not in the class
    bool add(const EdgeVec& e) {
        auto it = index_.find(sorted_edges(e));
        if (it == index_.end())
            return false;
        ++cells_[it->second.first][static_cast<std::size_t>(it->second.second)];
        return true;
    }
    // smallest chi-square p-value over the edge counts with at least two graphs
    // and enough samples; classes with too few samples are reported as -1
    double min_p(std::map<int, double>* per_m = nullptr) const {
        double worst = 1.0;
        for (const auto& [m, cell] : cells_) {
            if (cell.size() < 2)
                continue;
            std::uint64_t total = std::accumulate(cell.begin(), cell.end(), std::uint64_t{0});
            double p = static_cast<double>(total) / static_cast<double>(cell.size()) >= 5
                           ? chi_square_uniform(cell)
                           : -1.0;
            if (per_m)
                (*per_m)[m] = p;
            worst = std::min(worst, p);
        }
        return worst;
    }
    std::uint64_t total(int m) const {
        auto it = cells_.find(m);
        return it == cells_.end() ? 0 : std::accumulate(it->second.begin(), it->second.end(), std::uint64_t{0});
    }
    std::size_t classes(int m) const {
        auto it = cells_.find(m);
        return it == cells_.end() ? 0 : it->second.size();
    }

private:
    std::map<EdgeVec, std::pair<int, int>> index_;
    std::map<int, std::vector<std::uint64_t>> cells_;
};

// |observed - expected| within k standard deviations of a binomial count
inline bool within_sigma(double hits, double trials, double p, double k = 4.0) {
    double sd = std::sqrt(trials * p * (1 - p));
    return std::abs(hits - trials * p) <= k * sd + 1e-9;
}

}  // namespace test
