#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace trifold {

// Undirected multigraph: loops and parallel edges allowed. Edges are stored
// as an ordered list so edge ids are stable.
struct Multigraph {
    int node_count = 0;
    std::vector<std::pair<int, int>> edges;

    Multigraph() = default;
    explicit Multigraph(int nodes) : node_count(nodes) {}

    int add_edge(int u, int v) {
        edges.emplace_back(u, v);
        return static_cast<int>(edges.size()) - 1;
    }

    // Loops count twice, multiedges with multiplicity.
    int degree(int v) const {
        int d = 0;
        for (const auto& [a, b] : edges) {
            if (a == v) ++d;
            if (b == v) ++d;
        }
        return d;
    }

    bool valid() const {
        for (const auto& [a, b] : edges)
            if (a < 0 || b < 0 || a >= node_count || b >= node_count) return false;
        return true;
    }

    // Adjacency lists ignoring loops and collapsing multiedges; the view used
    // by elimination-order heuristics (treewidth is blind to both).
    std::vector<std::vector<int>> simple_adjacency() const;
};

}  // namespace trifold
