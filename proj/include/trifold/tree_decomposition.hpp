#pragma once

#include <string>
#include <vector>

#include "trifold/multigraph.hpp"

namespace trifold {

// Tree of bags over the nodes of a multigraph. `tree_edges` must form a tree
// on the bag indices (a single bag with no edges is the one-node tree).
struct TreeDecomposition {
    std::vector<std::vector<int>> bags;
    std::vector<std::pair<int, int>> tree_edges;

    int width() const {
        std::size_t m = 0;
        for (const auto& b : bags) m = std::max(m, b.size());
        return static_cast<int>(m) - 1;
    }
};

struct DecompositionCheck {
    bool valid = false;
    std::string violation;  // names the violated property and a witness
};

// Checks the tree shape plus vertex coverage, edge coverage and the subtree
// property.
DecompositionCheck validate_decomposition(const Multigraph& g, const TreeDecomposition& x);

enum class Strategy { MinDegree, MinFill };

// Elimination-order heuristic (ties broken by lowest node id), turned into a
// tree decomposition in the standard way: one bag per vertex holding the
// vertex plus its higher neighbors in the fill graph.
TreeDecomposition heuristic_decomposition(const Multigraph& g, Strategy strategy);

// PACE-2017 text formats.
Multigraph read_pace_graph(const std::string& text);
std::string write_pace_graph(const Multigraph& g);
TreeDecomposition read_pace_decomposition(const std::string& text, int* graph_nodes = nullptr);
std::string write_pace_decomposition(const TreeDecomposition& x, int graph_nodes);

}  // namespace trifold
